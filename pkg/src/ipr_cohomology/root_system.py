"""Root systems of the simple Lie types with exact integer arithmetic.

Conventions
-----------
* Simple roots are numbered as in Bourbaki.  In particular ``G2`` has the
  short simple root at node 1, ``B_n`` the short root at node ``n`` and
  ``C_n`` the long root at node ``n``.
* The Cartan matrix is ``A[i][j] = <alpha_j, alpha_i^vee>
  = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``, so that a simple root
  written in fundamental-weight coordinates is the *column*
  ``sigma_j = sum_i A[i][j] omega_i``.
* Roots are integer tuples in the simple-root basis; weights are integer
  tuples in the fundamental-weight basis.  Indices are 0-based internally;
  the public ``index`` arguments of :func:`simple_reflection` and
  :func:`eval_on_coweight` are 1-based to match the node labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

Vector = Tuple[int, ...]

_SERIES_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _SERIES_RANKS:
            raise InvalidCartanType(f"unknown series {self.series!r}; expected one of ABCDEFG")
        if not isinstance(self.rank, int) or not _SERIES_RANKS[self.series](self.rank):
            raise InvalidCartanType(f"rank {self.rank!r} is not valid for series {self.series}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings such as ``"A4"`` or ``"G2"``."""
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _gram_matrix(ct: CartanType) -> List[List[int]]:
    """Integer Gram matrix (alpha_i, alpha_j) of the simple roots.

    Only ratios matter.  Short roots have squared length 2 throughout.
    """
    n = ct.rank
    g = [[0] * n for _ in range(n)]

    def chain(nodes, length=2):
        for a in nodes:
            g[a][a] = length
        for a, b in zip(nodes, nodes[1:]):
            g[a][b] = g[b][a] = -length // 2

    s = ct.series
    if s == "A":
        chain(range(n))
    elif s == "B":
        # long roots length^2 4, short alpha_n length^2 2
        chain(range(n - 1), 4)
        g[n - 1][n - 1] = 2
        g[n - 2][n - 1] = g[n - 1][n - 2] = -2
    elif s == "C":
        chain(range(n - 1), 2)
        g[n - 1][n - 1] = 4
        g[n - 2][n - 1] = g[n - 1][n - 2] = -2
    elif s == "D":
        chain(range(n - 1))
        g[n - 1][n - 1] = 2
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    elif s == "E":
        # Bourbaki: 1-3-4-5-...-n chain, node 2 attached to node 4.
        chain([0] + list(range(2, n)))
        g[1][1] = 2
        g[1][3] = g[3][1] = -1
    elif s == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        g[0][1] = g[1][0] = -2
        g[1][2] = g[2][1] = -2
        g[2][3] = g[3][2] = -1
    elif s == "G":
        g[0][0], g[1][1] = 2, 6
        g[0][1] = g[1][0] = -3
    return g


def _height(v: Sequence[int]) -> int:
    return sum(v)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum of a simple Lie algebra.

    Attributes
    ----------
    cartan_type : CartanType
    cartan_matrix : tuple of tuples
        ``A[i][j] = <alpha_j, alpha_i^vee>``.
    gram : tuple of tuples
        Integer-valued symmetric form ``(alpha_i, alpha_j)`` (a fixed positive
        multiple of the Killing form restricted to the span of the roots).
    symmetrizer : tuple of Fraction
        ``d_i = (alpha_i, alpha_i) / 2``; ``diag(d) @ A`` equals ``gram``.
    positive_roots : tuple of Vector
        Sorted by height, then lexicographically on coordinates.
    """

    cartan_type: CartanType
    cartan_matrix: Tuple[Vector, ...]
    gram: Tuple[Vector, ...]
    symmetrizer: Tuple[Fraction, ...]
    positive_roots: Tuple[Vector, ...]
    _index: Dict[Vector, int] = field(repr=False, compare=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def roots(self) -> Tuple[Vector, ...]:
        """All roots: positive roots followed by their negatives."""
        return self.positive_roots + tuple(neg(a) for a in self.positive_roots)

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self._index or neg(v) in self._index

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._index

    def root_index(self, v: Sequence[int]) -> int:
        return self._index[tuple(v)]

    def simple_root(self, i: int) -> Vector:
        """Simple root ``sigma_i`` (1-based ``i``) in the simple-root basis."""
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def inner(self, x: Sequence, y: Sequence):
        """Symmetrized pairing of two vectors given in simple-root coordinates."""
        n = self.rank
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    def coroot_pairing(self, x: Sequence[int], i: int) -> int:
        """``<x, alpha_i^vee>`` for ``x`` in simple-root coordinates (0-based ``i``)."""
        return sum(self.cartan_matrix[i][j] * x[j] for j in range(self.rank))

    def highest_root(self) -> Vector:
        return self.positive_roots[-1]

    @cached_property
    def inverse_cartan(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in _rational_inverse(self.cartan_matrix))

    @cached_property
    def rho(self) -> Vector:
        """Half-sum of positive roots in weight coordinates (all ones)."""
        return (1,) * self.rank

    def weyl_group_order(self) -> int:
        """``|W|`` as the product of the degrees.

        Degrees are ``m + 1`` over the exponents ``m``, which are read off the
        height distribution of positive roots (the exponent ``m`` occurs
        ``#height(m) - #height(m+1)`` times).
        """
        return _weyl_order_from_heights([_height(a) for a in self.positive_roots])


def _weyl_order_from_heights(heights: Sequence[int]) -> int:
    counts: Dict[int, int] = {}
    for h in heights:
        counts[h] = counts.get(h, 0) + 1
    order = 1
    top = max(counts, default=0)
    for m in range(1, top + 1):
        mult = counts.get(m, 0) - counts.get(m + 1, 0)
        order *= (m + 1) ** mult
    return order


def neg(v: Sequence[int]) -> Vector:
    return tuple(-x for x in v)


def add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def _rational_inverse(m: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _saturate(cartan: Sequence[Sequence[int]]) -> List[Vector]:
    """Positive roots by closure under adding simple roots along root strings."""
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - p alpha_i ... beta + q alpha_i, p - q = <beta, alpha_i^vee>
                if beta == simple[i]:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - sum(cartan[i][j] * beta[j] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        nxt.add(up)
        found |= nxt
        layer = sorted(nxt)
    return sorted(found, key=lambda v: (_height(v), v))


def build(cartan_type: CartanType) -> RootSystem:
    """Build the root system of ``cartan_type``.

    >>> len(build(CartanType("G", 2)).positive_roots)
    6
    """
    gram = _gram_matrix(cartan_type)
    n = cartan_type.rank
    cartan = tuple(tuple(2 * gram[i][j] // gram[i][i] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if 2 * gram[i][j] % gram[i][i]:
                raise AssertionError("non-integral Cartan entry")  # construction bug
    sym = tuple(Fraction(gram[i][i], 2) for i in range(n))
    pos = tuple(_saturate(cartan))
    index = {a: k for k, a in enumerate(pos)}
    return RootSystem(
        cartan_type=cartan_type,
        cartan_matrix=cartan,
        gram=tuple(tuple(r) for r in gram),
        symmetrizer=sym,
        positive_roots=pos,
        _index=index,
    )


def root_system(series: str, rank: int) -> RootSystem:
    return build(CartanType(series, rank))


def root_to_weight_coords(rs: RootSystem, root: Sequence[int]) -> Vector:
    """Express a root-lattice vector in fundamental-weight coordinates."""
    n = rs.rank
    return tuple(sum(rs.cartan_matrix[i][j] * root[j] for j in range(n)) for i in range(n))


def weight_to_root_coords(rs: RootSystem, weight: Sequence[int]) -> Tuple[Fraction, ...]:
    """Inverse of :func:`root_to_weight_coords`; rational in general."""
    inv = rs.inverse_cartan
    n = rs.rank
    return tuple(sum(inv[j][i] * weight[i] for i in range(n)) for j in range(n))


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple index {i} out of range 1..{rs.rank}")


def simple_reflection(rs: RootSystem, i: int, weight: Sequence[int]) -> Vector:
    """``s_i(lambda)`` for a weight in omega-coordinates (1-based ``i``)."""
    _check_index(rs, i)
    k = weight[i - 1]
    if k == 0:
        return tuple(weight)
    col = [rs.cartan_matrix[r][i - 1] for r in range(rs.rank)]
    return tuple(w - k * c for w, c in zip(weight, col))


def reflect_root(rs: RootSystem, i: int, root: Sequence[int]) -> Vector:
    """``s_i`` acting on a vector in simple-root coordinates (1-based ``i``)."""
    _check_index(rs, i)
    k = rs.coroot_pairing(root, i - 1)
    out = list(root)
    out[i - 1] -= k
    return tuple(out)


def eval_on_coweight(rs: RootSystem, vec: Sequence[int], j: int) -> int:
    """``lambda(S^j)`` for ``lambda`` in simple-root coordinates (1-based ``j``)."""
    _check_index(rs, j)
    return vec[j - 1]


def leading_principal_minors(m: Sequence[Sequence]) -> List[Fraction]:
    """Exact leading principal minors, used for the positive-definiteness check."""
    out = []
    for k in range(1, len(m) + 1):
        sub_m = [[Fraction(m[i][j]) for j in range(k)] for i in range(k)]
        out.append(_det(sub_m))
    return out


def _det(a: List[List[Fraction]]) -> Fraction:
    n = len(a)
    a = [row[:] for row in a]
    det = Fraction(1)
    for c in range(n):
        p: Optional[int] = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det
