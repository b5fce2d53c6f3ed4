"""Subkey sequence generation from a ternary sign transform.

Every index ``n`` in ``[0, 3**k)`` is written as ``k`` ternary digits
(most significant first), shifted into balanced form ``{-1, 0, 1}``,
dotted against each row of the key matrix, passed through the sign
function, shifted back to ``{0, 1, 2}`` and read again as a base-3
number.  The result ``r[n]`` is the subkey sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import KeyOverflowError, ShapeError, ValidationError

ENTRY_LIMIT = 2**31 - 1
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class KeyMatrix:
    """Square integer key of size ``digits x digits``."""

    digits: int
    entries: tuple

    def __post_init__(self):
        k = self.digits
        if isinstance(k, bool) or not isinstance(k, int) or k < 2:
            raise ValidationError(f"digits must be an integer >= 2, got {k!r}")
        rows = tuple(tuple(row) for row in self.entries)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise ShapeError(f"key matrix must be {k}x{k}")
        for row in rows:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                    raise ValidationError(f"key entries must be integers, got {x!r}")
                if abs(int(x)) > ENTRY_LIMIT:
                    raise KeyOverflowError(f"key entry {int(x)} exceeds +/-{ENTRY_LIMIT}")
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_rows(cls, rows):
        rows = [list(row) for row in rows]
        return cls(len(rows), rows)

    @property
    def size(self):
        """Length of the generated sequence, ``3**digits``."""
        return 3**self.digits

    def to_array(self):
        return np.array(self.entries, dtype=np.int64)

    def __neg__(self):
        return KeyMatrix(self.digits, [[-x for x in row] for row in self.entries])


@dataclass(frozen=True)
class SubKeySequence:
    values: tuple
    digits: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        n = 3**self.digits
        if len(values) != n:
            raise ShapeError(f"sequence length {len(values)} != 3**{self.digits}")
        if any(v < 0 or v >= n for v in values):
            raise ValidationError(f"sequence values must lie in [0, {n - 1}]")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def distinct_values(self):
        return len(set(self.values))

    def fixed_points(self):
        return sum(1 for i, v in enumerate(self.values) if i == v)


def to_balanced_digits(n, k):
    """Return the ``k`` ternary digits of ``n`` shifted into ``{-1, 0, 1}``."""
    size = 3**k
    if not 0 <= n < size:
        raise ValidationError(f"n={n} out of range [0, {size}) for 3**{k}")
    out = []
    for _ in range(k):
        n, d = divmod(n, 3)
        out.append(d - 1)
    return tuple(reversed(out))


def from_balanced_digits(d):
    n = 0
    for x in d:
        if x not in (-1, 0, 1):
            raise ValidationError(f"balanced digit {x!r} not in {{-1, 0, 1}}")
        n = 3 * n + (x + 1)
    return n


def sign(x):
    return (x > 0) - (x < 0)


def row_transform(t, key):
    """Dot ``t`` against each row of ``key``.

    Component ``j`` is ``sum(t[i] * key[j][i])``, i.e. the row vector times
    the transposed key.  This orientation is the one that reproduces the
    published worked example.
    """
    if len(t) != key.digits:
        raise ShapeError(f"digit vector of length {len(t)} does not match {key.digits}x{key.digits} key")
    out = []
    for row in key.entries:
        s = sum(a * b for a, b in zip(t, row))
        if abs(s) > INT64_MAX:
            raise KeyOverflowError(f"dot product {s} overflows int64")
        out.append(s)
    return tuple(out)


def balanced_matrix(k):
    """All ``3**k`` balanced digit vectors as an ``(3**k, k)`` int64 array."""
    n = np.arange(3**k, dtype=np.int64)
    powers = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (n[:, None] // powers[None, :]) % 3 - 1


def product_matrix(key):
    """Row transform of every index at once; shape ``(3**k, k)``."""
    bound = key.digits * max(abs(x) for row in key.entries for x in row)
    if bound > INT64_MAX:
        raise KeyOverflowError(f"products up to {bound} would overflow int64")
    return balanced_matrix(key.digits) @ key.to_array().T


def sign_matrix(key):
    return np.sign(product_matrix(key))


def generate_sequence(key):
    """Compute the subkey sequence ``r`` for ``key``.

    >>> key = KeyMatrix.from_rows([[2, 5, -6], [3, 1, 3], [4, -2, -3]])
    >>> generate_sequence(key).values[:6]
    (2, 0, 0, 18, 0, 3)
    """
    k = key.digits
    powers = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    r = (sign_matrix(key) + 1) @ powers
    return SubKeySequence(tuple(r.tolist()), k)
