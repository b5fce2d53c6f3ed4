"""SplitMix64 generator and the key generator built on it."""

from .errors import ValidationError
from .sequence import KeyMatrix

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        if not 0 <= seed <= MASK64:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, span):
        """Uniform integer in ``[0, span)`` by modulo rejection."""
        if span <= 0:
            raise ValidationError(f"span must be positive, got {span}")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            z = self.next()
            if z < limit:
                return z % span

    def integers(self, lo, hi, size):
        return [lo + self.below(hi - lo) for _ in range(size)]


def random_key(seed, digits, lo=-9, hi=10):
    """Key with entries uniform on ``[lo, hi)``, filled row by row."""
    if lo >= hi:
        raise ValidationError(f"need lo < hi, got lo={lo} hi={hi}")
    if digits < 2:
        raise ValidationError(f"digits must be >= 2, got {digits}")
    draws = SplitMix64(seed).integers(lo, hi, digits * digits)
    return KeyMatrix(digits, [draws[i * digits:(i + 1) * digits] for i in range(digits)])
