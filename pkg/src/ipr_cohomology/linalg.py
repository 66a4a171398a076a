"""Exact rank over the rationals without leaving the integers."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Dict, Iterable, List, Sequence

SparseRow = Dict[int, int]


def _integral_rows(rows: Iterable[Sequence]) -> List[List[int]]:
    out = []
    for row in rows:
        row = list(row)
        den = 1
        for x in row:
            if isinstance(x, Fraction) or (isinstance(x, Rational) and not isinstance(x, int)):
                den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a dense integer (or rational) matrix by Bareiss elimination.

    Every intermediate entry is a minor of the input, and each division by the
    previous pivot is exact.
    """
    a = _integral_rows(matrix)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = next((r for r in range(rank, n_rows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, n_rows):
            lead = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col + 1, n_cols):
                num = p * row_r[c] - lead * row_p[c]
                q, rem = divmod(num, prev)
                if rem:
                    raise AssertionError("inexact Bareiss division")
                row_r[c] = q
            row_r[col] = 0
        prev = p
        rank += 1
    return rank


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    """Rank of a sparse integer matrix given as ``{column: value}`` rows.

    Fraction-free elimination: a row is reduced by ``row := p*row - b*pivot_row``
    and then divided by the gcd of its entries, which keeps entries small on
    the very sparse coboundary matrices without ever forming fractions.
    """
    pivots: Dict[int, SparseRow] = {}
    rank = 0
    # shorter rows first keeps fill-in down
    work = sorted((dict(r) for r in rows if r), key=len)
    for row in work:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                pivots[col] = _primitive(row)
                rank += 1
                break
            p = prow[col]
            b = row[col]
            g = gcd(p, b)
            fp, fb = p // g, b // g
            new = {k: fp * v for k, v in row.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - fb * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return rank


def rank(matrix) -> int:
    """Exact rank of a dense list-of-lists or a list of sparse dict rows."""
    rows = list(matrix)
    if rows and isinstance(rows[0], dict):
        return sparse_rank(rows)
    return bareiss_rank(rows)


def sparse_to_dense(rows: Sequence[SparseRow], n_cols: int) -> List[List[int]]:
    return [[r.get(c, 0) for c in range(n_cols)] for r in rows]
