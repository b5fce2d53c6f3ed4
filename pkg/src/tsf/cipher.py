"""Poly-alphabetic substitution keyed by a basin permutation.

Symbol ``p`` at position ``i`` encrypts to ``P[(p + i) mod N]`` where ``P``
is the permutation order and ``N = 3**k``.  Decryption applies the inverse
permutation and removes the position shift.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basins import invert
from .errors import EncodingError, KeyMismatchError, ValidationError

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ "
TEXT_DIGITS = 3
_INDEX = {c: i for i, c in enumerate(ALPHABET)}


@dataclass(frozen=True)
class SymbolText:
    symbols: tuple
    alphabet_digits: int

    def __post_init__(self):
        symbols = tuple(int(s) for s in self.symbols)
        n = 3**self.alphabet_digits
        for i, s in enumerate(symbols):
            if not 0 <= s < n:
                raise ValidationError(f"symbol {s} at position {i} outside [0, {n})")
        object.__setattr__(self, "symbols", symbols)

    def __len__(self):
        return len(self.symbols)


def encode_text(text, k=TEXT_DIGITS, lenient=False):
    """Map ``A-Z`` (any case) to 0..25 and space to 26."""
    if k != TEXT_DIGITS:
        raise ValidationError(f"text mapping is only defined for k={TEXT_DIGITS}, got k={k}")
    out = []
    for pos, ch in enumerate(text):
        idx = _INDEX.get(ch.upper())
        if idx is None:
            if lenient:
                continue
            raise EncodingError(ch, pos)
        out.append(idx)
    return SymbolText(out, k)


def decode_text(symbols):
    if symbols.alphabet_digits != TEXT_DIGITS:
        raise ValidationError(f"text mapping is only defined for k={TEXT_DIGITS}")
    return "".join(ALPHABET[s] for s in symbols.symbols)


def _check_key(text, subkey):
    if text.alphabet_digits != subkey.source_digits:
        raise KeyMismatchError(
            f"text uses k={text.alphabet_digits} but subkey was built for k={subkey.source_digits}"
        )


def encrypt(plain, subkey):
    _check_key(plain, subkey)
    n = len(subkey.order)
    p = np.asarray(plain.symbols, dtype=np.int64)
    shifted = (p + np.arange(len(p), dtype=np.int64)) % n
    return SymbolText(np.asarray(subkey.order, dtype=np.int64)[shifted].tolist(), plain.alphabet_digits)


def decrypt(cipher, subkey):
    _check_key(cipher, subkey)
    n = len(subkey.order)
    q = np.asarray(invert(subkey), dtype=np.int64)
    c = np.asarray(cipher.symbols, dtype=np.int64)
    plain = (q[c] - np.arange(len(c), dtype=np.int64)) % n
    return SymbolText(plain.tolist(), cipher.alphabet_digits)
