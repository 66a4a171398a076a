import pytest

from ipr_cohomology.kostant import mu
from ipr_cohomology.layout import ResolutionConditionError, double_complex, resolution_shape

from conftest import SWEEP, table


@pytest.mark.parametrize("s,r,I", SWEEP)
def test_double_complex(s, r, I):
    t = table(s, r, I)
    lay = double_complex(t)
    assert lay.mu == mu(t)
    n = lay.mu + 1
    assert all(lay.rank(p, q) == lay.rank(q, p) for p in range(n) for q in range(n))
    total = sum(t.diagonal_dim(k) for k in range(n))
    assert sum(lay.iperp.values()) == total ** 2
    assert lay.rank(0, 0) == 1 and lay.rank(1, 0) == t.dim_g_ell[1]


def test_g2_resolutions():
    r1 = resolution_shape(table("G", 2, (1,)))
    assert r1.orders == (1, 3, 2, 3, 1)
    assert sum(r1.orders) == 10 == max(m for _, m in table("G", 2, (1,)).cells)
    assert [t.dim for t in r1.terms] == [1, 2, 3, 3, 2, 1]
    assert r1.single_cell
    r12 = resolution_shape(table("G", 2, (1, 2)))
    assert r12.orders == (1, 2, 3, 3, 2, 1)
    assert not r12.single_cell


@pytest.mark.parametrize("s,r,I", [("A", 4, (1, 4)), ("G", 2, (2,)), ("B", 3, (2,)), ("D", 4, (2,))])
def test_adjoint_resolution(s, r, I):
    t = table(s, r, I)
    c = t.dim_g_ell[1] // 2
    res = resolution_shape(t)
    assert [k for k, o in enumerate(res.orders) if o != 1] == [c]
    assert res.orders[c] == 2


def test_refusal_names_cells():
    with pytest.raises(ResolutionConditionError) as exc:
        resolution_shape(table("A", 4, (1, 2)))
    assert (3, 5) in exc.value.cells and (2, 3) in exc.value.cells


def test_twisted_resolution():
    t = table("G", 2, (1,))
    res = resolution_shape(t, p=1)
    assert [x.dim for x in res.terms] == [2 * d for d in (1, 2, 3, 3, 2, 1)]
    with pytest.raises(ValueError):
        resolution_shape(t, p=2)
