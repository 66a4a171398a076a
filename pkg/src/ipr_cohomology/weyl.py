"""Minimal-length coset representatives ``W^p`` of a parabolic.

Elements of ``W^p`` are found by breadth-first search on the orbit of
``rho_0 = sum_{i in I} omega_i``: the orbit point ``w^{-1} rho_0`` is reached
from ``v^{-1} rho_0`` by the simple reflection ``s_i`` exactly when
``w = v s_i`` and ``|w| = |v| + 1``, so BFS depth is the length.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .root_system import (
    RootSystem,
    Vector,
    reflect_root,
    root_to_weight_coords,
    simple_reflection,
    sub,
)

DEFAULT_MAX_WEYL = 10**7
MAX_WEYL_ENV = "IPR_MAX_WEYL"


class WeylGroupTooLarge(RuntimeError):
    """Raised when ``|W|`` exceeds the configured enumeration bound."""


def max_weyl_bound(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(MAX_WEYL_ENV)
    return int(env) if env else DEFAULT_MAX_WEYL


@dataclass(frozen=True)
class ParabolicSpec:
    """A parabolic subalgebra given by ``I``, the simple roots *not* in the Levi.

    ``I`` uses 1-based Bourbaki node labels.
    """

    root_system: RootSystem
    I: FrozenSet[int]

    def __init__(self, root_system: RootSystem, I: Iterable[int]):
        I = frozenset(int(i) for i in I)
        if not I:
            raise ValueError("parabolic index set I must be nonempty")
        bad = [i for i in I if not 1 <= i <= root_system.rank]
        if bad:
            raise ValueError(f"parabolic indices {sorted(bad)} out of range 1..{root_system.rank}")
        object.__setattr__(self, "root_system", root_system)
        object.__setattr__(self, "I", I)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.I))

    @property
    def levi_indices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.root_system.rank + 1) if i not in self.I)

    def grade(self, root: Sequence[int]) -> int:
        """E-eigenvalue of a root: sum of its coordinates at the nodes of ``I``."""
        return sum(root[i - 1] for i in self.I)

    def label(self) -> str:
        return f"{self.root_system.cartan_type}/{{{','.join(map(str, self.indices))}}}"


@dataclass(frozen=True)
class WeylElement:
    """A minimal coset representative with its combinatorial data.

    ``rho_w`` is in simple-root coordinates.
    """

    reduced_word: Tuple[int, ...]
    inversion_set: FrozenSet[Vector]
    rho_w: Vector

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    @property
    def word_str(self) -> str:
        return "(" + "".join(map(str, self.reduced_word)) + ")" if self.reduced_word else "e"


def apply_word_to_weight(rs: RootSystem, word: Sequence[int], weight: Sequence[int]) -> Vector:
    """Apply ``(i_1 i_2 ... i_t)`` to a weight; the rightmost reflection acts first."""
    out = tuple(weight)
    for i in reversed(word):
        out = simple_reflection(rs, i, out)
    return out


def apply_word_to_root(rs: RootSystem, word: Sequence[int], root: Sequence[int]) -> Vector:
    out = tuple(root)
    for i in reversed(word):
        out = reflect_root(rs, i, out)
    return out


def inversion_set(word: Sequence[int], rs: RootSystem) -> FrozenSet[Vector]:
    """``Delta(w) = {alpha > 0 : w^{-1} alpha < 0}``.

    ``w^{-1}`` is the reversed word, so its first letter acts first.
    """
    inv = tuple(reversed(word))
    out = []
    for a in rs.positive_roots:
        b = apply_word_to_root(rs, inv, a)
        if all(x <= 0 for x in b):
            out.append(a)
    return frozenset(out)


def rho_w_from_inversions(inversions: Iterable[Vector], rank: int) -> Vector:
    tot = [0] * rank
    for a in inversions:
        for k in range(rank):
            tot[k] += a[k]
    return tuple(tot)


def rho_w_via_reflections(word: Sequence[int], rs: RootSystem) -> Vector:
    """``rho - w(rho)`` computed in omega-coordinates, returned in sigma-coordinates."""
    rho = rs.rho
    diff = sub(rho, apply_word_to_weight(rs, word, rho))
    inv = rs.inverse_cartan
    n = rs.rank
    coords = [sum(inv[j][i] * diff[i] for i in range(n)) for j in range(n)]
    if any(c.denominator != 1 for c in coords):
        raise AssertionError(f"rho - w(rho) not in the root lattice for word {word}")
    return tuple(int(c) for c in coords)


def rho_w(w: WeylElement, rs: RootSystem) -> Vector:
    return w.rho_w


def _is_minimal(rs: RootSystem, p: ParabolicSpec, word: Sequence[int]) -> bool:
    # w(Lambda^+(g)) in Lambda^+(g_0)  <=>  w^{-1} sigma_j > 0 for every j not in I
    inv = tuple(reversed(word))
    for j in p.levi_indices:
        img = apply_word_to_root(rs, inv, rs.simple_root(j))
        if not all(x >= 0 for x in img):
            return False
    return True


def orbit_bfs(rs: RootSystem, start: Vector, generators: Sequence[int]) -> dict:
    """Orbit of ``start`` under the reflections in ``generators``; weight -> BFS word."""
    seen = {start: ()}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        word = seen[lam]
        for i in generators:
            mu = simple_reflection(rs, i, lam)
            if mu not in seen:
                seen[mu] = word + (i,)
                queue.append(mu)
    return seen


def minimal_coset_reps(p: ParabolicSpec, max_weyl: int | None = None, check: bool = True) -> List[WeylElement]:
    """Enumerate ``W^p`` sorted by (length, word).

    Raises :class:`WeylGroupTooLarge` when ``|W|`` exceeds ``max_weyl``
    (default ``10**7`` or the ``IPR_MAX_WEYL`` environment variable).
    """
    rs = p.root_system
    bound = max_weyl_bound(max_weyl)
    order = rs.weyl_group_order()
    if order > bound:
        raise WeylGroupTooLarge(f"|W({rs.cartan_type})| = {order} exceeds the bound {bound}")
    rho0 = tuple(1 if i + 1 in p.I else 0 for i in range(rs.rank))
    # Only descend along s_i with lambda_i > 0: each step then raises length by one.
    # The BFS word w satisfies w^{-1} rho_0 = lambda, and Delta(w s_i) = Delta(w) + {w sigma_i}.
    words = {rho0: ()}
    inversions = {rho0: frozenset()}
    frontier = [rho0]
    while frontier:
        nxt = []
        for lam in frontier:
            word = words[lam]
            for i in range(1, rs.rank + 1):
                if lam[i - 1] > 0:
                    mu = simple_reflection(rs, i, lam)
                    if mu not in words:
                        words[mu] = word + (i,)
                        new_root = apply_word_to_root(rs, word, rs.simple_root(i))
                        if not rs.is_positive_root(new_root):
                            raise AssertionError(f"word {word + (i,)} is not reduced")
                        inversions[mu] = inversions[lam] | {new_root}
                        nxt.append(mu)
        frontier = nxt
    out = []
    for lam, word in words.items():
        inv_set = inversions[lam]
        rw = rho_w_from_inversions(inv_set, rs.rank)
        if check:
            if len(inv_set) != len(word):
                raise AssertionError(f"word {word} is not reduced")
            if rw != rho_w_via_reflections(word, rs):
                raise AssertionError(f"rho_w mismatch for word {word}")
            if not _is_minimal(rs, p, word):
                raise AssertionError(f"word {word} is not a minimal coset representative")
        out.append(WeylElement(reduced_word=word, inversion_set=inv_set, rho_w=rw))
    out.sort(key=lambda w: (w.length, w.reduced_word))
    return out


def levi_weyl_order(p: ParabolicSpec) -> int:
    """``|W_p|`` by counting the orbit of the regular weight rho under ``W_p``."""
    rs = p.root_system
    return len(orbit_bfs(rs, rs.rho, p.levi_indices))


def lowest_weight_omega(w: WeylElement, rs: RootSystem) -> Vector:
    return root_to_weight_coords(rs, w.rho_w)
