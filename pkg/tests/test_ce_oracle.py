import copy
from math import comb

import pytest

from ipr_cohomology.ce_oracle import (
    JacobiFailure,
    OracleTooLarge,
    build_ce_complex,
    build_lie_structure,
    ce_cohomology_dims,
    coboundary_squares_to_zero,
    verify_bracket_generation,
)
from ipr_cohomology.root_system import add, neg, root_system
from ipr_cohomology.weyl import ParabolicSpec

from conftest import SWEEP, lie, oracle, parabolics, rs_of, spec, table

LIE_TYPES = [("A", 1), ("A", 2), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]


def string_p(rs, a, b):
    p = 0
    cur = tuple(x - y for x, y in zip(b, a))
    while rs.is_root(cur):
        p += 1
        cur = tuple(x - y for x, y in zip(cur, a))
    return p


def test_sl2_relations():
    ls = lie("A", 1)
    e, f, h = ls.e((1,)), ls.e((-1,)), ls.index[("h", 0)]
    assert ls.bracket_basis(e, f) == {h: 1}
    assert ls.bracket_basis(h, e) == {e: 2}
    assert ls.bracket_basis(h, f) == {f: -2}


def test_a2_constant():
    ls = lie("A", 2)
    assert abs(ls.structure_constant((1, 0), (0, 1))) == 1


def test_g2_constants():
    ls = lie("G", 2)
    rs = ls.root_system
    mags = {abs(ls.structure_constant(a, b)) for a in rs.roots for b in rs.roots if rs.is_root(add(a, b))}
    assert mags == {1, 2, 3}


@pytest.mark.parametrize("t", LIE_TYPES)
def test_chevalley_magnitudes_and_antisymmetry(t):
    ls = lie(*t)
    rs = ls.root_system
    for a in rs.roots:
        for b in rs.roots:
            s = add(a, b)
            n = ls.structure_constant(a, b)
            if rs.is_root(s):
                assert abs(n) == string_p(rs, a, b) + 1
                assert ls.structure_constant(b, a) == -n
            else:
                assert n == 0
    for (i, j), v in ls.brackets.items():
        assert ls.brackets[(j, i)] == {k: -c for k, c in v.items()}


@pytest.mark.parametrize("t", LIE_TYPES)
def test_coroots(t):
    ls = lie(*t)
    rs = ls.root_system
    for a in rs.positive_roots:
        h = ls.bracket_basis(ls.e(a), ls.e(neg(a)))
        assert all(ls.basis[k][0] == "h" for k in h)
        # [h_a, e_a] = 2 e_a
        out = ls.bracket(h, {ls.e(a): 1})
        assert out == {ls.e(a): 2}


@pytest.mark.parametrize("t,I", [(("A", 4), (1, 3)), (("G", 2), (1,)), (("B", 3), (2,))])
def test_grading_respected(t, I):
    ls = lie(*t)
    p = spec(*t, I)
    for (i, j), v in ls.brackets.items():
        for k in v:
            assert ls.grade(k, p) == ls.grade(i, p) + ls.grade(j, p)


@pytest.mark.parametrize("t", [("A", 3), ("B", 2), ("G", 2)])
def test_jacobi_corruption_detected(t):
    ls = build_lie_structure(rs_of(*t), verify=False)
    ls.verify_jacobi()
    bad = copy.deepcopy(ls)
    rs = ls.root_system
    a, b = rs.simple_root(1), rs.simple_root(2)
    i, j, k = bad.e(a), bad.e(b), bad.e(add(a, b))
    bad.brackets[(i, j)] = {k: -bad.brackets[(i, j)][k]}
    bad.brackets[(j, i)] = {k: -bad.brackets[(j, i)][k]}
    with pytest.raises(JacobiFailure):
        bad.verify_jacobi()


@pytest.mark.parametrize("s,r,I", [x for x in SWEEP if x[1] <= 3] + [("A", 4, (1, 2)), ("G", 2, (1, 2)), ("C", 4, (2, 4))])
def test_coboundary_squares_to_zero(s, r, I):
    cx = build_ce_complex(lie(s, r), spec(s, r, I))
    assert coboundary_squares_to_zero(cx)
    for (l, m), blk in cx.blocks.items():
        for mono in blk.targets:
            assert sum(cx.grades[x] for x in mono) == m


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (4, 1)])
def test_abelian_nilradical(n, k):
    dims = ce_cohomology_dims(lie("A", n), spec("A", n, (k,)))
    d = k * (n + 1 - k)
    assert dims == {(l, l): comb(d, l) for l in range(d + 1)}


def test_g2_1_oracle():
    dims = ce_cohomology_dims(lie("G", 2), spec("G", 2, (1,)))
    assert dims == {(0, 0): 1, (1, 1): 2, (2, 4): 3, (3, 6): 3, (4, 9): 2, (5, 10): 1}


@pytest.mark.parametrize("s,r,I", SWEEP)
def test_oracle_h0_and_duality(s, r, I):
    dims = oracle(s, r, I)
    assert dims.get((0, 0)) == 1
    assert [m for (l, m) in dims if l == 0] == [0]
    n = table(s, r, I).dim_flag
    tot = {}
    for (l, _), d in dims.items():
        tot[l] = tot.get(l, 0) + d
    assert all(tot.get(l, 0) == tot.get(n - l, 0) for l in range(n + 1))


@pytest.mark.parametrize("s,r,I", [("A", 3, (1, 2)), ("B", 3, (1, 3)), ("G", 2, (2,)), ("C", 3, (1, 2, 3))])
def test_oracle_matches_kostant_sample(s, r, I):
    assert ce_cohomology_dims(lie(s, r), spec(s, r, I)) == table(s, r, I).cell_dims()


def test_bracket_generation():
    for I in parabolics(4):
        assert verify_bracket_generation(lie("A", 4), spec("A", 4, I))
    assert verify_bracket_generation(lie("G", 2), spec("G", 2, (1, 2)))
    assert verify_bracket_generation(lie("A", 3), spec("A", 3, (2,)))


def test_size_guards():
    with pytest.raises(OracleTooLarge):
        build_lie_structure(root_system("E", 8), max_roots=100)
    with pytest.raises(OracleTooLarge):
        ce_cohomology_dims(lie("A", 4), spec("A", 4, (1, 2, 3, 4)), max_monomials=16)


def test_e6_jacobi():
    build_lie_structure(root_system("E", 6))
