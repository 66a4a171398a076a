from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ipr_cohomology.root_system import (
    CartanType,
    InvalidCartanType,
    eval_on_coweight,
    leading_principal_minors,
    reflect_root,
    root_system,
    root_to_weight_coords,
    simple_reflection,
    weight_to_root_coords,
)

from conftest import rs_of

ALL_TYPES = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + \
    [("C", n) for n in range(3, 7)] + [("D", n) for n in range(4, 7)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

KNOWN_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
}
EXCEPTIONAL_COUNTS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}
WEYL_ORDERS = {("A", 4): 120, ("B", 3): 48, ("C", 4): 384, ("D", 4): 192, ("G", 2): 12,
               ("F", 4): 1152, ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_positive_root_count(series, rank):
    rs = rs_of(series, rank)
    want = EXCEPTIONAL_COUNTS.get((series, rank)) or KNOWN_COUNTS[series](rank)
    assert len(rs.positive_roots) == want


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_cartan_axioms(series, rank):
    A = rs_of(series, rank).cartan_matrix
    for i in range(rank):
        assert A[i][i] == 2
        for j in range(rank):
            if i != j:
                assert A[i][j] <= 0
                assert (A[i][j] == 0) == (A[j][i] == 0)


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_roots_integral_nonnegative(series, rank):
    for a in rs_of(series, rank).positive_roots:
        assert all(isinstance(c, int) and c >= 0 for c in a)
        assert any(a)


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_symmetrized_positive_definite(series, rank):
    rs = rs_of(series, rank)
    DA = [[rs.symmetrizer[i] * rs.cartan_matrix[i][j] for j in range(rank)] for i in range(rank)]
    assert DA == [list(r) for r in rs.gram]
    assert all(DA[i][j] == DA[j][i] for i in range(rank) for j in range(rank))
    assert all(m > 0 for m in leading_principal_minors(DA))


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_simple_reflection_permutes_positive_roots(series, rank):
    rs = rs_of(series, rank)
    for i in range(1, rank + 1):
        for a in rs.positive_roots:
            b = reflect_root(rs, i, a)
            assert rs.is_root(b)
            assert (not rs.is_positive_root(b)) == (a == rs.simple_root(i))


@pytest.mark.parametrize("series,rank", [t for t in ALL_TYPES if t in WEYL_ORDERS])
def test_weyl_order(series, rank):
    assert rs_of(series, rank).weyl_group_order() == WEYL_ORDERS[(series, rank)]


def test_a_series_weyl_order_factorial():
    from math import factorial

    for n in range(1, 7):
        assert rs_of("A", n).weyl_group_order() == factorial(n + 1)


def test_a2_roots():
    roots = rs_of("A", 2).positive_roots
    assert set(roots) == {(1, 0), (0, 1), (1, 1)}
    assert list(roots) == sorted(roots, key=lambda a: (sum(a), a))


def test_g2_bourbaki_short_root_first():
    rs = rs_of("G", 2)
    assert rs.gram[0][0] < rs.gram[1][1]
    assert rs.highest_root() == (3, 2)
    assert len(rs.positive_roots) == 6
    # highest root is the fundamental weight at the long node
    assert root_to_weight_coords(rs, (3, 2)) == (0, 1)


def test_bourbaki_lengths_b_c():
    b = rs_of("B", 3)
    assert b.gram[2][2] < b.gram[0][0]
    c = rs_of("C", 3)
    assert c.gram[2][2] > c.gram[0][0]


def test_coordinate_examples():
    rs = rs_of("A", 2)
    assert root_to_weight_coords(rs, (1, 0)) == (2, -1)
    assert root_to_weight_coords(rs, (1, 1)) == (1, 1)
    assert simple_reflection(rs, 1, (1, 0)) == (-1, 1)
    assert simple_reflection(rs, 2, (1, 0)) == (1, 0)
    assert eval_on_coweight(rs, (0, 1), 2) == 1
    assert eval_on_coweight(rs, (1, 0), 2) == 0
    assert eval_on_coweight(rs, (1, 1), 1) == 1


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_types(bad):
    with pytest.raises(InvalidCartanType):
        root_system(*bad)


def test_parse():
    assert CartanType.parse("a4") == CartanType("A", 4)
    assert str(CartanType.parse("G2")) == "G2"
    with pytest.raises(InvalidCartanType):
        CartanType.parse("A")


def test_reflection_index_out_of_range():
    rs = rs_of("A", 2)
    with pytest.raises(IndexError):
        simple_reflection(rs, 3, (0, 0))
    with pytest.raises(IndexError):
        simple_reflection(rs, 0, (0, 0))


types_st = st.sampled_from(ALL_TYPES)


@settings(max_examples=200, deadline=None)
@given(types_st, st.data())
def test_reflection_involution(t, data):
    rs = rs_of(*t)
    lam = tuple(data.draw(st.lists(st.integers(-20, 20), min_size=rs.rank, max_size=rs.rank)))
    i = data.draw(st.integers(1, rs.rank))
    assert simple_reflection(rs, i, simple_reflection(rs, i, lam)) == lam


@settings(max_examples=200, deadline=None)
@given(types_st, st.data())
def test_round_trip_root_lattice(t, data):
    rs = rs_of(*t)
    v = tuple(data.draw(st.lists(st.integers(-30, 30), min_size=rs.rank, max_size=rs.rank)))
    back = weight_to_root_coords(rs, root_to_weight_coords(rs, v))
    assert all(x.denominator == 1 for x in back)
    assert tuple(int(x) for x in back) == v


@settings(max_examples=100, deadline=None)
@given(types_st, st.data())
def test_reflections_agree_across_bases(t, data):
    # s_i in omega coordinates and in sigma coordinates describe the same map
    rs = rs_of(*t)
    v = tuple(data.draw(st.lists(st.integers(-10, 10), min_size=rs.rank, max_size=rs.rank)))
    i = data.draw(st.integers(1, rs.rank))
    assert root_to_weight_coords(rs, reflect_root(rs, i, v)) == simple_reflection(rs, i, root_to_weight_coords(rs, v))


@pytest.mark.parametrize("n", range(1, 7))
def test_a_series_height_distribution(n):
    # A_n has n + 1 - h roots of height h
    rs = rs_of("A", n)
    for h in range(1, n + 1):
        assert sum(1 for a in rs.positive_roots if sum(a) == h) == n + 1 - h
    assert len(rs.positive_roots) == comb(n + 1, 2)
