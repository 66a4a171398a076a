"""E-graded Kostant decomposition of ``H^*(g_-, C)``.

Each ``w`` in ``W^p`` contributes one irreducible ``g_0``-module ``H_w`` of
lowest weight ``rho_w`` in cohomological degree ``|w|``; the grading element
acts on it by the scalar ``m = rho_w(E)``.  The table is keyed by ``(l, m)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .root_system import Vector, root_to_weight_coords
from .weyl import ParabolicSpec, WeylElement, minimal_coset_reps

Cell = Tuple[int, int]


class NotDominant(ValueError):
    """A highest weight handed to :func:`weyl_dim` is not ``g_0``-dominant."""


@dataclass(frozen=True)
class GradingElement:
    """``E = sum_{i in I} S^i``; evaluates on vectors in simple-root coordinates."""

    I: frozenset

    def __call__(self, vec: Sequence[int]) -> int:
        return sum(vec[i - 1] for i in self.I)


@dataclass(frozen=True)
class KostantSummand:
    w: WeylElement
    ell: int
    m: int
    lowest_weight: Vector  # sigma-coordinates
    lowest_weight_omega: Vector
    dim: int


@dataclass
class CohomologyTable:
    parabolic: ParabolicSpec
    cells: Dict[Cell, List[KostantSummand]]
    dim_g_ell: Dict[int, int]
    elements: List[WeylElement] = field(default_factory=list)

    @property
    def dim_flag(self) -> int:
        """Complex dimension of the flag variety, ``sum_{l>0} dim g_{-l}``."""
        return sum(d for l, d in self.dim_g_ell.items() if l > 0)

    def cell_dims(self) -> Dict[Cell, int]:
        return {c: sum(s.dim for s in ss) for c, ss in self.cells.items()}

    def summands(self) -> List[KostantSummand]:
        return [s for c in sorted(self.cells) for s in self.cells[c]]

    def degree_dims(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (l, _), d in self.cell_dims().items():
            out[l] = out.get(l, 0) + d
        return out

    def eigenvalues(self, l: int) -> List[int]:
        return sorted(m for (ll, m) in self.cells if ll == l)

    def diagonal_dim(self, p: int) -> int:
        return sum(s.dim for s in self.cells.get((p, p), ()))


def graded_dims(p: ParabolicSpec) -> Dict[int, int]:
    """``l -> dim g_l`` over all nonzero eigenspaces (``g_0`` includes the Cartan)."""
    rs = p.root_system
    out: Dict[int, int] = {0: rs.rank}
    for a in rs.positive_roots:
        g = p.grade(a)
        out[g] = out.get(g, 0) + 1
        out[-g] = out.get(-g, 0) + 1
    return dict(sorted(out.items()))


def levi_positive_roots(p: ParabolicSpec) -> List[Vector]:
    return [a for a in p.root_system.positive_roots if p.grade(a) == 0]


@lru_cache(maxsize=256)
def _levi_data(p: ParabolicSpec) -> Tuple[Tuple[Vector, ...], Tuple[int, ...], Vector]:
    # (gram . alpha) for each positive root of g_0, and (2 rho_0, alpha)
    rs = p.root_system
    n = rs.rank
    levi = levi_positive_roots(p)
    two_rho = [sum(a[k] for a in levi) for k in range(n)]
    ga = tuple(tuple(sum(rs.gram[i][j] * a[j] for j in range(n)) for i in range(n)) for a in levi)
    den = tuple(sum(x * y for x, y in zip(two_rho, g)) for g in ga)
    return ga, den, tuple(two_rho)


def weyl_dim(p: ParabolicSpec, lowest_weight: Sequence[int]) -> int:
    """Dimension of the irreducible ``g_0``-module of the given lowest weight.

    ``lowest_weight`` is in simple-root coordinates.  The module's dual has
    highest weight ``-lowest_weight``, and the Weyl dimension formula over the
    positive roots of ``g_0`` is applied to it; the centre of ``g_0`` acts by a
    scalar and does not contribute.
    """
    rs = p.root_system
    lam = tuple(-x for x in lowest_weight)
    for j in p.levi_indices:
        if rs.coroot_pairing(lam, j - 1) < 0:
            raise NotDominant(f"weight {tuple(lowest_weight)} is not g_0-antidominant at node {j}")
    ga, den, two_rho = _levi_data(p)
    shifted = [2 * x + y for x, y in zip(lam, two_rho)]
    num, dd = 1, 1
    for g, d in zip(ga, den):
        num *= sum(x * y for x, y in zip(shifted, g))
        dd *= d
    q, r = divmod(num, dd)
    if r or q < 1:
        raise AssertionError(f"Weyl dimension {Fraction(num, dd)} is not a positive integer")
    return q


def summand_for(p: ParabolicSpec, w: WeylElement) -> KostantSummand:
    rs = p.root_system
    return KostantSummand(
        w=w,
        ell=w.length,
        m=p.grade(w.rho_w),
        lowest_weight=w.rho_w,
        lowest_weight_omega=root_to_weight_coords(rs, w.rho_w),
        dim=weyl_dim(p, w.rho_w),
    )


def cohomology_table(p: ParabolicSpec, max_weyl: int | None = None) -> CohomologyTable:
    elements = minimal_coset_reps(p, max_weyl=max_weyl)
    cells: Dict[Cell, List[KostantSummand]] = {}
    for w in elements:
        s = summand_for(p, w)
        cells.setdefault((s.ell, s.m), []).append(s)
    cells = dict(sorted(cells.items()))
    return CohomologyTable(parabolic=p, cells=cells, dim_g_ell=graded_dims(p), elements=elements)


def nu(table: CohomologyTable) -> int:
    """Largest ``nu`` with ``H^l = H^l_l`` for every ``l <= nu``."""
    d = table.dim_flag
    out = 0
    for l in range(1, d + 1):
        if table.eigenvalues(l) != [l]:
            break
        out = l
    return out


def nu_literal(table: CohomologyTable) -> int:
    """Largest ``l`` (not necessarily a prefix) with ``H^l_m = 0`` for all ``m > l``."""
    return max(l for l in range(table.dim_flag + 1) if table.eigenvalues(l) == [l])


def mu(table: CohomologyTable) -> int:
    """Largest ``p`` with ``H^p_p != 0``."""
    return max(l for (l, m) in table.cells if l == m)


def vhs_set(table: CohomologyTable) -> List[WeylElement]:
    """Elements ``w`` with ``rho_w(E) = |w|``, sorted by (length, word)."""
    out = [s.w for (l, m), ss in table.cells.items() if l == m for s in ss]
    return sorted(out, key=lambda w: (w.length, w.reduced_word))


def exterior_grade_dims(p: ParabolicSpec) -> Dict[Cell, int]:
    """``dim (wedge^l g_-^*)_m`` from the generating polynomial ``prod (1 + t x^{a(E)})``."""
    poly: Dict[Cell, int] = {(0, 0): 1}
    for a in p.root_system.positive_roots:
        g = p.grade(a)
        if g <= 0:
            continue
        nxt = dict(poly)
        for (l, m), c in poly.items():
            nxt[(l + 1, m + g)] = nxt.get((l + 1, m + g), 0) + c
        poly = nxt
    return poly
