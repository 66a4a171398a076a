"""Brute-force Lie algebra cohomology of ``g_-`` from structure constants.

Nothing here uses the Weyl group: the Lie algebra is built in a Chevalley
basis, the Chevalley-Eilenberg coboundary on ``wedge^l g_-^*`` is written down
block by block in the E-grading and the cohomology is read off from exact
ranks.  This makes it an independent check on the Kostant table.

Structure constants follow the extraspecial-pair method: for each positive
non-simple root ``xi`` the pair ``(alpha, xi - alpha)`` with ``alpha`` the
earliest positive root in the fixed order is given ``N = +(p + 1)``; every
other constant is forced by the standard identities relating ``N_{a,b}``
across root triples and quadruples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .linalg import rank as exact_rank
from .linalg import sparse_rank
from .root_system import RootSystem, Vector, add, neg, sub
from .weyl import ParabolicSpec

DEFAULT_MAX_ROOTS = 120
DEFAULT_MAX_MONOMIALS = 2**24

Key = Tuple  # ("e", root) or ("h", i)
Element = Dict[int, int]


class OracleTooLarge(RuntimeError):
    """Raised when the brute-force computation would exceed its size bound."""


class JacobiFailure(AssertionError):
    pass


def _is_pos(v: Sequence[int]) -> bool:
    return any(x > 0 for x in v)


class _StructureConstants:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.order = {a: k for k, a in enumerate(rs.positive_roots)}
        self.special: Dict[Tuple[Vector, Vector], Fraction] = {}
        self._build()

    def string_p(self, a: Vector, b: Vector) -> int:
        """Largest ``p`` with ``b - p a`` a root."""
        p = 0
        cur = sub(b, a)
        while self.rs.is_root(cur):
            p += 1
            cur = sub(cur, a)
        return p

    def norm(self, v: Vector) -> int:
        return self.rs.inner(v, v)

    def N(self, x: Vector, y: Vector) -> Fraction:
        s = add(x, y)
        if not any(s) or not self.rs.is_root(s):
            return Fraction(0)
        px, py = _is_pos(x), _is_pos(y)
        if px and py:
            if self.order[x] < self.order[y]:
                return self.special[(x, y)]
            return -self.special[(y, x)]
        if not px and not py:
            p = self.string_p(neg(x), neg(y))
            return Fraction(-((p + 1) ** 2)) / self.N(neg(x), neg(y))
        z = neg(s)
        pz = _is_pos(z)
        # N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y); pick the same-sign pair
        if py == pz:
            return Fraction(self.norm(z), self.norm(x)) * self.N(y, z)
        return Fraction(self.norm(z), self.norm(y)) * self.N(z, x)

    def _build(self) -> None:
        pos = self.rs.positive_roots
        by_sum: Dict[Vector, List[Tuple[Vector, Vector]]] = {}
        for i, a in enumerate(pos):
            for b in pos[i + 1:]:
                s = add(a, b)
                if self.rs.is_positive_root(s):
                    by_sum.setdefault(s, []).append((a, b))
        for xi in pos:
            pairs = by_sum.get(xi)
            if not pairs:
                continue
            pairs.sort(key=lambda ab: self.order[ab[0]])
            g, d = pairs[0]
            self.special[(g, d)] = Fraction(self.string_p(g, d) + 1)
            n_gd = self.N(neg(g), neg(d))
            for a, b in pairs[1:]:
                t = Fraction(0)
                bg = sub(b, g)
                if any(bg) and self.rs.is_root(bg):
                    t += self.N(b, neg(g)) * self.N(a, neg(d)) / self.norm(bg)
                ag = sub(a, g)
                if any(ag) and self.rs.is_root(ag):
                    t += self.N(neg(g), a) * self.N(b, neg(d)) / self.norm(ag)
                self.special[(a, b)] = -Fraction(self.norm(xi)) / n_gd * t


@dataclass
class LieStructure:
    """A simple Lie algebra in a Chevalley basis.

    ``basis`` lists the keys ``("e", root)`` for every root followed by
    ``("h", i)`` for the simple coroots.  ``brackets[(i, j)]`` holds the
    nonzero coefficients of ``[b_i, b_j]``, for ``i != j``.
    """

    root_system: RootSystem
    basis: List[Key]
    brackets: Dict[Tuple[int, int], Element]
    index: Dict[Key, int] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def e(self, root: Sequence[int]) -> int:
        return self.index[("e", tuple(root))]

    def bracket_basis(self, i: int, j: int) -> Element:
        return self.brackets.get((i, j), {})

    def bracket(self, x: Element, y: Element) -> Element:
        out: Dict[int, int] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def structure_constant(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``N_{a,b}`` with ``[e_a, e_b] = N_{a,b} e_{a+b}``."""
        s = add(a, b)
        if not self.root_system.is_root(s):
            return 0
        return self.bracket_basis(self.e(a), self.e(b)).get(self.e(s), 0)

    def grade(self, i: int, p: ParabolicSpec) -> int:
        key = self.basis[i]
        return 0 if key[0] == "h" else p.grade(key[1])

    def verify_jacobi(self) -> None:
        n = self.dim
        unit = [{i: 1} for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    tot: Dict[int, int] = {}
                    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = bij if (x, y) == (i, j) else self.bracket_basis(x, y)
                        for m, v in self.bracket(inner, unit[z]).items():
                            tot[m] = tot.get(m, 0) + v
                    if any(tot.values()):
                        raise JacobiFailure(f"Jacobi fails on {self.basis[i]}, {self.basis[j]}, {self.basis[k]}")


def build_lie_structure(rs: RootSystem, max_roots: int = DEFAULT_MAX_ROOTS, verify: bool = True) -> LieStructure:
    """Chevalley-basis structure constants of the simple algebra of ``rs``.

    Raises :class:`OracleTooLarge` if the root system has more than
    ``max_roots`` roots and :class:`JacobiFailure` if verification fails.
    """
    n_roots = 2 * len(rs.positive_roots)
    if n_roots > max_roots:
        raise OracleTooLarge(f"{rs.cartan_type} has {n_roots} roots; bound is {max_roots}")
    sc = _StructureConstants(rs)
    r = rs.rank
    roots = list(rs.roots)
    basis: List[Key] = [("e", a) for a in roots] + [("h", i) for i in range(r)]
    index = {k: n for n, k in enumerate(basis)}
    h0 = len(roots)
    brackets: Dict[Tuple[int, int], Element] = {}

    def put(i: int, j: int, elt: Element) -> None:
        elt = {k: v for k, v in elt.items() if v}
        if elt:
            brackets[(i, j)] = elt
            brackets[(j, i)] = {k: -v for k, v in elt.items()}

    def coroot(a: Vector) -> Element:
        # alpha^vee = sum_i c_i (alpha_i, alpha_i)/(alpha, alpha) alpha_i^vee
        na = rs.inner(a, a)
        out = {}
        for i in range(r):
            if a[i]:
                c = Fraction(a[i] * rs.gram[i][i], na)
                if c.denominator != 1:
                    raise AssertionError("non-integral coroot")
                out[h0 + i] = int(c)
        return out

    for i in range(r):
        for a in roots:
            put(h0 + i, index[("e", a)], {index[("e", a)]: rs.coroot_pairing(a, i)})
    for x, a in enumerate(roots):
        for b in roots[x + 1:]:
            s = add(a, b)
            ia, ib = index[("e", a)], index[("e", b)]
            if not any(s):
                put(ia, ib, coroot(a))
            elif rs.is_root(s):
                n = sc.N(a, b)
                if n.denominator != 1:
                    raise AssertionError(f"non-integral structure constant N({a},{b}) = {n}")
                put(ia, ib, {index[("e", s)]: int(n)})
    ls = LieStructure(root_system=rs, basis=basis, brackets=brackets, index=index)
    if verify:
        ls.verify_jacobi()
    return ls


@dataclass
class CEBlock:
    """Coboundary ``(wedge^l g_-^*)_m -> (wedge^{l+1} g_-^*)_m`` as sparse rows.

    ``rows[t]`` is the row of target monomial ``targets[t]``; column indices
    refer to ``sources``.
    """

    degree: int
    grade: int
    sources: List[Tuple[int, ...]]
    targets: List[Tuple[int, ...]]
    rows: List[Dict[int, int]]


@dataclass
class CEComplex:
    parabolic: ParabolicSpec
    generators: List[Vector]  # positive roots alpha with e_{-alpha} spanning g_-
    grades: List[int]
    cochains: Dict[Tuple[int, int], List[Tuple[int, ...]]]
    blocks: Dict[Tuple[int, int], CEBlock]

    def dim_cochains(self, l: int, m: int) -> int:
        return len(self.cochains.get((l, m), ()))


def _g_minus_generators(p: ParabolicSpec) -> List[Vector]:
    return [a for a in p.root_system.positive_roots if p.grade(a) > 0]


def build_ce_complex(ls: LieStructure, p: ParabolicSpec, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> CEComplex:
    gens = _g_minus_generators(p)
    n = len(gens)
    if 2**n > max_monomials:
        raise OracleTooLarge(f"wedge^* g_- has 2^{n} monomials; bound is {max_monomials}")
    grades = [p.grade(a) for a in gens]
    gen_index = {a: k for k, a in enumerate(gens)}
    # [e_{-a}, e_{-b}] = c e_{-(a+b)}, in terms of generator indices
    brk: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            s = add(gens[i], gens[j])
            if s in gen_index:
                c = ls.structure_constant(neg(gens[i]), neg(gens[j]))
                if c:
                    brk[(i, j)] = (gen_index[s], c)
    cochains: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for l in range(n + 1):
        for mono in combinations(range(n), l):
            m = sum(grades[k] for k in mono)
            cochains.setdefault((l, m), []).append(mono)
    position = {key: {mono: k for k, mono in enumerate(monos)} for key, monos in cochains.items()}
    blocks: Dict[Tuple[int, int], CEBlock] = {}
    for (l, m), sources in cochains.items():
        targets = cochains.get((l + 1, m))
        if not targets:
            continue
        col_of = position[(l, m)]
        rows = []
        for t in targets:
            row: Dict[int, int] = {}
            for a in range(len(t)):
                for b in range(a + 1, len(t)):
                    hit = brk.get((t[a], t[b]))
                    if hit is None:
                        continue
                    u, c = hit
                    rest = t[:a] + t[a + 1:b] + t[b + 1:]
                    if u in rest:
                        continue
                    sign = -1 if sum(1 for x in rest if x < u) % 2 else 1
                    if (a + b) % 2:
                        sign = -sign
                    s = tuple(sorted(rest + (u,)))
                    col = col_of[s]
                    row[col] = row.get(col, 0) + sign * c
            rows.append({k: v for k, v in row.items() if v})
        blocks[(l, m)] = CEBlock(degree=l, grade=m, sources=sources, targets=targets, rows=rows)
    return CEComplex(parabolic=p, generators=gens, grades=grades, cochains=cochains, blocks=blocks)


def _compose_is_zero(first: CEBlock, second: CEBlock) -> bool:
    # second o first, both as target-indexed sparse rows
    n_mid = len(first.targets)
    columns_first: List[Dict[int, int]] = [dict() for _ in range(n_mid)]
    for t, row in enumerate(first.rows):
        columns_first[t] = row
    for row in second.rows:
        acc: Dict[int, int] = {}
        for mid, v in row.items():
            for src, w in columns_first[mid].items():
                acc[src] = acc.get(src, 0) + v * w
        if any(acc.values()):
            return False
    return True


def coboundary_squares_to_zero(cx: CEComplex) -> bool:
    for (l, m), blk in cx.blocks.items():
        nxt = cx.blocks.get((l + 1, m))
        if nxt is not None and not _compose_is_zero(blk, nxt):
            return False
    return True


def ce_cohomology_dims(ls: LieStructure, p: ParabolicSpec, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> Dict[Tuple[int, int], int]:
    """``dim H^l_m(g_-)`` for every cell with nonzero cohomology."""
    cx = build_ce_complex(ls, p, max_monomials=max_monomials)
    ranks = {key: sparse_rank(blk.rows) for key, blk in cx.blocks.items()}
    out = {}
    for (l, m), monos in cx.cochains.items():
        h = len(monos) - ranks.get((l, m), 0) - ranks.get((l - 1, m), 0)
        if h < 0:
            raise AssertionError(f"negative cohomology dimension at {(l, m)}")
        if h:
            out[(l, m)] = h
    return out


def verify_bracket_generation(ls: LieStructure, p: ParabolicSpec) -> bool:
    """True iff ``g_{l+1} = [g_l, g_1]`` and ``g_{-l-1} = [g_{-l}, g_{-1}]`` for all ``l >= 1``."""
    rs = ls.root_system
    by_grade: Dict[int, List[int]] = {}
    for k, key in enumerate(ls.basis):
        if key[0] == "e":
            by_grade.setdefault(p.grade(key[1]), []).append(k)
    top = max(by_grade)
    for sign in (1, -1):
        for l in range(1, top):
            target = by_grade.get(sign * (l + 1), [])
            if not target:
                continue
            col = {k: c for c, k in enumerate(target)}
            rows = []
            for x in by_grade.get(sign * l, []):
                for y in by_grade.get(sign, []):
                    br = ls.bracket_basis(x, y)
                    if br:
                        rows.append([0] * len(target))
                        for k, v in br.items():
                            rows[-1][col[k]] = v
            if exact_rank(rows) != len(target):
                return False
    return True
