"""Rank tables derived from the Kostant decomposition.

* the double complex ``C^{p,q}`` built from ``H^p_p`` and the conjugate of
  ``H^q_q``, together with the totals ``i^perp_k``;
* the predicted shape of the resolution of ``O(H^p_p)`` by the bundles
  ``H^p_p (x) conj(H^q)``, with predicted operator orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .kostant import CohomologyTable, mu


class ResolutionConditionError(ValueError):
    """The eigenvalue pattern does not single out a resolution."""

    def __init__(self, message: str, cells: List[Tuple[int, int]]):
        super().__init__(message)
        self.cells = cells


@dataclass(frozen=True)
class DoubleComplexLayout:
    mu: int
    ranks: Tuple[Tuple[int, ...], ...]
    iperp: Dict[int, int]

    def rank(self, p: int, q: int) -> int:
        return self.ranks[p][q]


def double_complex(table: CohomologyTable) -> DoubleComplexLayout:
    top = mu(table)
    diag = [table.diagonal_dim(k) for k in range(top + 1)]
    ranks = tuple(tuple(diag[p] * diag[q] for q in range(top + 1)) for p in range(top + 1))
    iperp: Dict[int, int] = {}
    for p in range(top + 1):
        for q in range(top + 1):
            iperp[p + q] = iperp.get(p + q, 0) + ranks[p][q]
    return DoubleComplexLayout(mu=top, ranks=ranks, iperp=iperp)


@dataclass(frozen=True)
class ResolutionTerm:
    degree: int
    label: str
    dim: int
    eigenvalues: Tuple[int, ...]


@dataclass(frozen=True)
class ResolutionShape:
    p: int
    terms: Tuple[ResolutionTerm, ...]
    orders: Tuple[int, ...]
    single_cell: bool

    @property
    def length(self) -> int:
        return len(self.terms) - 1


def resolution_shape(table: CohomologyTable, p: int = 0) -> ResolutionShape:
    """Predicted resolution ``O(H^p_p) -> H^p_p (x) conj(H^0) -> ... -> H^p_p (x) conj(H^d)``.

    The order of the operator from degree ``q`` to ``q + 1`` is the smallest
    eigenvalue gap ``min m(q+1) - max m(q)``.  The prediction is refused
    unless the eigenvalues of consecutive degrees are strictly separated, so
    that each eigenvalue belongs to exactly one degree and the degrees are
    ordered along the eigenvalue axis.
    """
    hpp = table.diagonal_dim(p)
    if hpp == 0:
        raise ValueError(f"H^{p}_{p} = 0; no resolution for p = {p}")
    d = table.dim_flag
    degree_dims = table.degree_dims()
    eig = [tuple(table.eigenvalues(q)) for q in range(d + 1)]
    for q in range(d):
        if max(eig[q]) >= min(eig[q + 1]):
            cells = [(q, m) for m in eig[q]] + [(q + 1, m) for m in eig[q + 1]]
            raise ResolutionConditionError(
                f"eigenvalues of H^{q} {list(eig[q])} and H^{q + 1} {list(eig[q + 1])} overlap; "
                f"offending cells {cells}",
                cells,
            )
    pre = f"H^{p}_{p} (x) " if p else ""
    terms = tuple(
        ResolutionTerm(degree=q, label=f"{pre}conj(H^{q})", dim=hpp * degree_dims[q], eigenvalues=eig[q])
        for q in range(d + 1)
    )
    orders = tuple(min(eig[q + 1]) - max(eig[q]) for q in range(d))
    return ResolutionShape(p=p, terms=terms, orders=orders, single_cell=all(len(e) == 1 for e in eig))
