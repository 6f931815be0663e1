"""Membership in the table of 1-planar complete multipartite graphs and the patterns it forbids"""
from functools import lru_cache
from typing import Iterator, Tuple

from model.graph import PartitionSpec
from .exceptions import DomainError

FACTOR_PARTS = {
    'P1': (1,),
    '2P1': (2,),
    'P2': (1, 1),
}

MAX_PATTERN_VERTICES = 8


def _between(value: int, low: int, high: float = float('inf')) -> bool:
    return low <= value <= high


def in_multipartite_table(spec: PartitionSpec) -> bool:
    """True iff the complete multipartite graph with these part sizes is 1-planar"""
    p = spec.parts
    k = spec.k
    if k == 1:
        return True
    if k == 2:
        a, b = p
        return b in (1, 2) or (b == 3 and _between(a, 3, 6)) or p == (4, 4)
    if k == 3:
        a, b, c = p
        return ((b, c) == (1, 1) or ((b, c) == (2, 1) and _between(a, 2, 6))
                or ((b, c) == (2, 2) and _between(a, 2, 4)) or p == (3, 3, 1))
    if k == 4:
        a = p[0]
        return ((p[1:] == (1, 1, 1) and _between(a, 1, 6)) or (p[1:] == (2, 1, 1) and _between(a, 2, 3))
                or p[:3] == (2, 2, 2))
    if k == 5:
        return p[0] <= 2 and p[2:] == (1, 1, 1)
    if k == 6:
        return p == (1,) * 6
    return False


def partitions(total: int, largest: int = None) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of total in non-increasing order"""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def _deletions(parts: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    for i in range(len(parts)):
        shrunk = list(parts)
        shrunk[i] -= 1
        yield tuple(sorted((x for x in shrunk if x), reverse=True))


@lru_cache(maxsize=None)
def table_forbidden_patterns(factor: str) -> Tuple[PartitionSpec, ...]:
    """Minimal complete multipartite graphs P (up to eight vertices) such that P joined with the
    factor lies outside the table"""
    if factor not in FACTOR_PARTS:
        raise DomainError(f'factor must be one of {", ".join(FACTOR_PARTS)}, got "{factor}"')
    extra = PartitionSpec.of(*FACTOR_PARTS[factor])

    def forbidden(parts: Tuple[int, ...]) -> bool:
        return bool(parts) and not in_multipartite_table(PartitionSpec(parts).merged(extra))

    result = []
    for total in range(1, MAX_PATTERN_VERTICES + 1):
        for parts in partitions(total):
            if forbidden(parts) and not any(forbidden(smaller) for smaller in _deletions(parts)):
                result.append(PartitionSpec(parts))
    return tuple(result)
