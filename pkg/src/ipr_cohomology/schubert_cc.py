"""Schubert-cell topology of the compact dual and its characteristic cohomology.

Homology of ``G/P`` is free on the Schubert classes ``x_w`` (``w`` in
``W^p``), so Betti numbers count ``W^p`` by length.  The characteristic
cohomology is spanned by the duals of the Schubert classes whose Schubert
variety is a variation of Hodge structure; the remaining duals span the
kernel of the natural projection.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .kostant import CohomologyTable, vhs_set
from .weyl import ParabolicSpec, WeylElement, minimal_coset_reps


@dataclass(frozen=True)
class HomologyClass:
    """Integer combination ``sum n^w x_w`` of Schubert classes."""

    coefficients: Mapping[WeylElement, int]

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        out: Dict[WeylElement, int] = dict(self.coefficients)
        for w, n in other.coefficients.items():
            out[w] = out.get(w, 0) + n
        return HomologyClass({w: n for w, n in out.items() if n})


@dataclass
class CCBasisReport:
    cc_basis: List[Tuple[WeylElement, int]]  # (w, real degree 2|w|)
    ker_pI_basis: List[WeylElement]
    betti: Dict[int, int]
    table: CohomologyTable

    def cc_dims(self) -> Dict[int, int]:
        """Complex degree ``k`` -> ``dim H^{2k}_I`` over all ``k`` up to ``dim G/P``."""
        out = {k: 0 for k in self.betti}
        for _, deg in self.cc_basis:
            out[deg // 2] += 1
        return out


def betti_numbers(p: ParabolicSpec, elements: Optional[List[WeylElement]] = None) -> Dict[int, int]:
    """``l -> #W^p(l)``, the rank of ``H_{2l}(G/P, Z)``."""
    if elements is None:
        elements = minimal_coset_reps(p)
    out: Dict[int, int] = {}
    for w in elements:
        out[w.length] = out.get(w.length, 0) + 1
    return dict(sorted(out.items()))


def cc_dual_report(table: CohomologyTable) -> CCBasisReport:
    p = table.parabolic
    cc, ker = [], []
    for w in table.elements:
        if p.grade(w.rho_w) == w.length:
            cc.append((w, 2 * w.length))
        else:
            ker.append(w)
    return CCBasisReport(
        cc_basis=cc,
        ker_pI_basis=ker,
        betti=betti_numbers(p, table.elements),
        table=table,
    )


def vhs_representable(cls: HomologyClass, table: CohomologyTable) -> bool:
    """Whether the class is carried by a union of variations of Hodge structure.

    Exactly when every coefficient is nonnegative and the positive ones sit
    on Schubert VHS.
    """
    vhs = set(vhs_set(table))
    for w, n in cls.coefficients.items():
        if n < 0:
            return False
        if n > 0 and w not in vhs:
            return False
    return True


def pairing_check(report: CCBasisReport) -> bool:
    # homology side from vhs_set, cohomology side from the report's own sieve
    homology: Dict[int, int] = {}
    for w in vhs_set(report.table):
        homology[w.length] = homology.get(w.length, 0) + 1
    cohomology = {k: n for k, n in report.cc_dims().items() if n}
    return homology == cohomology
