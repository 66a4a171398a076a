from functools import lru_cache
from itertools import combinations

from ipr_cohomology.ce_oracle import build_lie_structure
from ipr_cohomology.kostant import cohomology_table
from ipr_cohomology.root_system import root_system
from ipr_cohomology.weyl import ParabolicSpec

# every simple type of rank <= 4
SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
               ("C", 3), ("C", 4), ("D", 4), ("G", 2)]


def parabolics(rank):
    return [c for k in range(1, rank + 1) for c in combinations(range(1, rank + 1), k)]


SWEEP = [(s, r, I) for s, r in SMALL_TYPES for I in parabolics(r)]


@lru_cache(maxsize=None)
def rs_of(series, rank):
    return root_system(series, rank)


@lru_cache(maxsize=None)
def spec(series, rank, I):
    return ParabolicSpec(rs_of(series, rank), tuple(I))


@lru_cache(maxsize=None)
def table(series, rank, I):
    return cohomology_table(spec(series, rank, tuple(I)))


@lru_cache(maxsize=None)
def lie(series, rank):
    return build_lie_structure(rs_of(series, rank))


@lru_cache(maxsize=None)
def oracle(series, rank, I):
    from ipr_cohomology.ce_oracle import ce_cohomology_dims

    return ce_cohomology_dims(lie(series, rank), spec(series, rank, tuple(I)))
