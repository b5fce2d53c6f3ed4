"""Statistical battery for integer sequences.

Chi-square goodness of fit against the uniform distribution, the
non-overlapping pair scatter, an adjacent repetition count and an LZ78
phrase count as a compressibility measure.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .errors import ValidationError

_EPS = 1e-15
_TINY = 1e-300
_MAX_ITER = 10_000


def _gamma_series(a, x):
    # lower regularized P(a, x), valid for x < a + 1
    term = total = 1.0 / a
    ap = a
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_cf(a, x):
    # upper regularized Q(a, x) by modified Lentz, valid for x >= a + 1
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def gammaincc(a, x):
    """Regularized upper incomplete gamma function ``Q(a, x)``."""
    if a <= 0:
        raise ValidationError(f"shape parameter must be positive, got {a}")
    if x < 0:
        raise ValidationError(f"x must be nonnegative, got {x}")
    if x == 0:
        return 1.0
    if x < a + 1.0:
        return min(1.0, max(0.0, 1.0 - _gamma_series(a, x)))
    return min(1.0, max(0.0, _gamma_cf(a, x)))


def chi2_sf(stat, df):
    """Upper tail probability of the chi-square distribution."""
    return gammaincc(df / 2.0, stat / 2.0)


def _check_symbols(seq, alphabet_size):
    if alphabet_size < 2:
        raise ValidationError(f"alphabet size must be >= 2, got {alphabet_size}")
    for i, v in enumerate(seq):
        if not 0 <= v < alphabet_size:
            raise ValidationError(f"element {v} at position {i} outside [0, {alphabet_size})")


def chi_square_uniform(seq, alphabet_size):
    """Return ``(chi_square, degrees_of_freedom, p_value)``.

    Every symbol of the alphabet is a bin, including those never observed.
    """
    seq = list(seq)
    if not seq:
        raise ValidationError("chi-square needs a nonempty sequence")
    _check_symbols(seq, alphabet_size)
    counts = Counter(seq)
    expected = len(seq) / alphabet_size
    stat = sum((counts.get(v, 0) - expected) ** 2 for v in range(alphabet_size)) / expected
    df = alphabet_size - 1
    return stat, df, chi2_sf(stat, df)


def pair_points(seq):
    seq = list(seq)
    if len(seq) < 2:
        raise ValidationError("pair points need at least two elements")
    return [(seq[i], seq[i + 1]) for i in range(0, len(seq) - 1, 2)]


def repetition_stat(seq, alphabet_size):
    """Adjacent equal symbols, with the count expected under uniformity."""
    seq = list(seq)
    if len(seq) < 2:
        raise ValidationError("repetition test needs at least two elements")
    if alphabet_size < 1:
        raise ValidationError(f"alphabet size must be positive, got {alphabet_size}")
    count = sum(1 for a, b in zip(seq, seq[1:]) if a == b)
    return count, (len(seq) - 1) / alphabet_size


def lz78_phrases(seq):
    """LZ78 incremental parse; a trailing partial phrase is kept."""
    seen = set()
    phrases = []
    current = ()
    for s in seq:
        current = current + (s,)
        if current not in seen:
            seen.add(current)
            phrases.append(current)
            current = ()
    if current:
        phrases.append(current)
    return phrases


def lz_compressibility(seq):
    seq = list(seq)
    if not seq:
        raise ValidationError("compressibility needs a nonempty sequence")
    count = len(lz78_phrases(seq))
    return count, count / len(seq)


@dataclass
class TestReport:
    chi_square: float
    degrees_of_freedom: int
    p_value: float
    pair_points: list
    repetition_count: int
    repetition_expected: float
    lz_phrase_count: int
    compression_ratio: float
    # expected count per bin below 5 makes the chi-square p-value unreliable
    small_expected_counts: bool = field(default=False, compare=False)

    __test__ = False  # keep pytest from collecting this class

    def to_dict(self):
        return {
            "chi_square": self.chi_square,
            "degrees_of_freedom": self.degrees_of_freedom,
            "p_value": self.p_value,
            "pair_points": [list(p) for p in self.pair_points],
            "repetition_count": self.repetition_count,
            "repetition_expected": self.repetition_expected,
            "lz_phrase_count": self.lz_phrase_count,
            "compression_ratio": self.compression_ratio,
        }


def analyze(seq, alphabet_size):
    seq = list(seq)
    chi, df, p = chi_square_uniform(seq, alphabet_size)
    count, expected = repetition_stat(seq, alphabet_size)
    phrases, ratio = lz_compressibility(seq)
    return TestReport(
        chi_square=chi,
        degrees_of_freedom=df,
        p_value=p,
        pair_points=pair_points(seq),
        repetition_count=count,
        repetition_expected=expected,
        lz_phrase_count=phrases,
        compression_ratio=ratio,
        small_expected_counts=len(seq) / alphabet_size < 5,
    )
