"""Basin grouping of a subkey sequence into a permutation.

The sequence ``r`` defines a functional graph ``n -> r[n]``.  A basin is a
weakly connected component of that graph.  Basins are discovered in
ascending order of their smallest unvisited index and listed in
breadth-first order, which yields a permutation of ``[0, N)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ContractError, ShapeError, ValidationError


@dataclass(frozen=True)
class BasinPermutation:
    order: tuple
    basins: tuple
    source_digits: int

    def __post_init__(self):
        order = tuple(int(i) for i in self.order)
        basins = tuple(tuple(int(i) for i in b) for b in self.basins)
        if sorted(order) != list(range(len(order))):
            raise ValidationError("order is not a permutation of [0, N)")
        if tuple(i for b in basins for i in b) != order:
            raise ValidationError("basins do not concatenate to order")
        if len(order) != 3**self.source_digits:
            raise ShapeError(f"permutation length {len(order)} != 3**{self.source_digits}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "basins", basins)

    def __len__(self):
        return len(self.order)

    def to_dict(self):
        return {
            "digits": self.source_digits,
            "order": list(self.order),
            "basins": [list(b) for b in self.basins],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["order"], d["basins"], d["digits"])

    @classmethod
    def identity(cls, digits):
        n = 3**digits
        return cls(range(n), [[i] for i in range(n)], digits)


def preimages(r, v):
    """Ascending indices ``i`` with ``r[i] == v``."""
    if not 0 <= v < len(r):
        raise ValidationError(f"value {v} out of range [0, {len(r)})")
    return [i for i, x in enumerate(r) if x == v]


def _preimage_table(r):
    table = [[] for _ in range(len(r))]
    for i, x in enumerate(r):
        table[x].append(i)
    return table


def basin_of(r, start, visited, _table=None):
    """Breadth-first basin of ``start``; ``visited`` is updated in place.

    Each dequeued element contributes its forward image first, then its
    preimages in ascending order.
    """
    if start in visited:
        raise ContractError(f"basin start {start} was already visited")
    table = _table if _table is not None else _preimage_table(r)
    basin = [start]
    visited.add(start)
    queue = deque(basin)
    while queue:
        e = queue.popleft()
        for nxt in [r[e], *table[e]]:
            if nxt not in visited:
                visited.add(nxt)
                basin.append(nxt)
                queue.append(nxt)
    return basin


def permutation_from_sequence(r):
    values = list(r)
    digits = getattr(r, "digits", None)
    if digits is None:
        digits = _log3(len(values))
    n = len(values)
    if any(not 0 <= v < n for v in values):
        raise ValidationError(f"sequence values must lie in [0, {n - 1}]")
    table = _preimage_table(values)
    visited = set()
    basins = []
    for start in range(n):
        if start not in visited:
            basins.append(basin_of(values, start, visited, table))
    order = [i for b in basins for i in b]
    return BasinPermutation(order, basins, digits)


def _log3(n):
    k = 0
    while 3**k < n:
        k += 1
    if 3**k != n:
        raise ShapeError(f"sequence length {n} is not a power of 3")
    return k


def invert(p):
    """Inverse permutation ``q`` with ``q[p.order[i]] == i``."""
    order = p.order if isinstance(p, BasinPermutation) else tuple(p)
    q = [0] * len(order)
    for i, x in enumerate(order):
        q[x] = i
    return q
