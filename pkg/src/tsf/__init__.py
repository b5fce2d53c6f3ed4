"""Matrix-keyed ternary sign subkeys, basin permutations and a randomness battery."""

from .basins import BasinPermutation, basin_of, invert, permutation_from_sequence, preimages
from .cipher import SymbolText, decode_text, decrypt, encode_text, encrypt
from .errors import (
    ContractError,
    EncodingError,
    KeyMismatchError,
    KeyOverflowError,
    ShapeError,
    TSFError,
    ValidationError,
)
from .rng import SplitMix64, random_key
from .sequence import (
    KeyMatrix,
    SubKeySequence,
    from_balanced_digits,
    generate_sequence,
    row_transform,
    sign,
    to_balanced_digits,
)
from .stats import (
    TestReport,
    analyze,
    chi_square_uniform,
    lz_compressibility,
    pair_points,
    repetition_stat,
)

__version__ = "0.1.0"
