"""Command line entry point: ``tsf <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import formats
from .basins import BasinPermutation, permutation_from_sequence
from .cipher import SymbolText, decode_text, decrypt, encode_text, encrypt
from .errors import KeyOverflowError, TSFError, ValidationError
from .rng import random_key
from .sequence import KeyMatrix, balanced_matrix, generate_sequence, product_matrix, sign_matrix
from .stats import analyze

MAX_CLI_DIGITS = 12

EXIT_FILE = 2
EXIT_VALIDATION = 3
EXIT_OVERFLOW = 4

CASE1_KEY = ((2, 5, -6), (3, 1, 3), (4, -2, -3))


class FileProblem(TSFError):
    pass


def _diagnose(msg):
    use_color = sys.stderr.isatty() and not os.environ.get("TSF_NO_COLOR")
    prefix = "\x1b[31merror:\x1b[0m" if use_color else "error:"
    print(f"{prefix} {msg}", file=sys.stderr)


def _read_text(path):
    if path is None:
        raise FileProblem("missing required --in path")
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileProblem(f"cannot read {path}: {exc.strerror}") from exc


def _load_key(path):
    if path is None:
        raise FileProblem("missing required --key path")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileProblem(f"cannot read {path}: {exc.strerror}") from exc
    try:
        json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileProblem(f"{path} is not valid JSON: {exc}") from exc
    key = formats.loads_key(text)
    if key.digits > MAX_CLI_DIGITS:
        raise ValidationError(f"digits={key.digits} exceeds the CLI limit of {MAX_CLI_DIGITS}")
    return key


def _require_out(args):
    if args.out is None:
        raise FileProblem("missing required --out path")
    parent = Path(args.out).parent
    if not parent.is_dir():
        raise FileProblem(f"output directory {parent} does not exist")
    return args.out


def _subkey(key):
    return permutation_from_sequence(generate_sequence(key))


def cmd_keygen(args):
    out = _require_out(args)
    if not 2 <= args.digits <= MAX_CLI_DIGITS:
        raise ValidationError(f"--digits must be in [2, {MAX_CLI_DIGITS}]")
    key = random_key(args.seed, args.digits, args.lo, args.hi)
    formats.write_key(out, key)


def cmd_gen(args):
    key = _load_key(args.key)
    out = _require_out(args)
    formats.atomic_write(out, formats.dumps_sequence(generate_sequence(key)))


def cmd_perm(args):
    key = _load_key(args.key)
    out = _require_out(args)
    formats.atomic_write(out, formats.dumps_permutation(_subkey(key)))


def cmd_analyze(args):
    seq = formats.loads_sequence(_read_text(args.inp))
    out = _require_out(args)
    n = args.alphabet_size if args.alphabet_size is not None else len(seq)
    report = analyze(seq, n)
    formats.atomic_write(out, json.dumps(report.to_dict(), indent=2) + "\n")


def cmd_plot(args):
    """Write ``<out>.csv`` with the pair points and ``<out>.svg``."""
    from .stats import pair_points

    seq = formats.loads_sequence(_read_text(args.inp))
    out = Path(_require_out(args))
    points = pair_points(seq)
    extent = (args.alphabet_size - 1) if args.alphabet_size else max(seq)
    formats.atomic_write(out.with_suffix(".csv"), formats.dumps_pairs(points))
    formats.atomic_write(out.with_suffix(".svg"), formats.scatter_svg(points, extent))


def _parse_symbols(text, digits):
    body = text.strip()
    items = [s for s in body.split(",")] if body else []
    try:
        return SymbolText([int(s) for s in items], digits)
    except ValueError as exc:
        raise ValidationError(f"symbol file must hold comma-separated integers: {exc}") from exc


def _read_message(args, digits):
    text = _read_text(args.inp)
    if args.format == "text":
        return encode_text(text, digits, lenient=args.lenient)
    return _parse_symbols(text, digits)


def _render_message(symbols, fmt):
    if fmt == "text":
        return decode_text(symbols)
    return ",".join(str(s) for s in symbols.symbols)


def cmd_encrypt(args):
    key = _load_key(args.key)
    out = _require_out(args)
    plain = _read_message(args, key.digits)
    formats.atomic_write(out, _render_message(encrypt(plain, _subkey(key)), args.format))


def cmd_decrypt(args):
    key = _load_key(args.key)
    out = _require_out(args)
    cipher = _read_message(args, key.digits)
    formats.atomic_write(out, _render_message(decrypt(cipher, _subkey(key)), args.format))


def _print_matrix(title, rows):
    print(title)
    for row in rows:
        print(" ".join(f"{int(x):d}" for x in row))
    print()


def cmd_demo(args):
    key = KeyMatrix.from_rows(CASE1_KEY)
    n = key.size
    pre = balanced_matrix(key.digits) + 1
    _print_matrix(f"Step 1-3: indices 0..{n - 1} as {key.digits}-digit ternary rows", pre)
    _print_matrix("Step 4: subtract 1 from every digit", balanced_matrix(key.digits))
    _print_matrix("Step 5: key matrix", key.entries)
    _print_matrix("Step 6: each row dotted with the key rows", product_matrix(key))
    _print_matrix("Step 7: sign of every entry", sign_matrix(key))
    _print_matrix("Step 8: add 1", sign_matrix(key) + 1)
    r = generate_sequence(key)
    print("Step 9: subkey sequence r")
    print(" ".join(str(v) for v in r))
    print()
    perm = permutation_from_sequence(r)
    print("Step 10: basins")
    for b in perm.basins:
        print("(" + ", ".join(str(i) for i in b) + ")")
    print("permutation:", ",".join(str(i) for i in perm.order))


COMMANDS = {
    "keygen": cmd_keygen,
    "gen": cmd_gen,
    "perm": cmd_perm,
    "analyze": cmd_analyze,
    "plot": cmd_plot,
    "encrypt": cmd_encrypt,
    "decrypt": cmd_decrypt,
    "demo": cmd_demo,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="tsf", description="Ternary sign subkey generator and test battery.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, *flags):
        p = sub.add_parser(name, help=help)
        for flag in flags:
            flag(p)
        return p

    key = lambda p: p.add_argument("--key", help="key file (JSON)")
    inp = lambda p: p.add_argument("--in", dest="inp", help="input file")
    out = lambda p: p.add_argument("--out", help="output file")
    alpha = lambda p: p.add_argument("--alphabet-size", type=int, help="number of symbols N")

    def keygen_flags(p):
        p.add_argument("--seed", type=int, default=0, help="SplitMix64 seed (unsigned 64-bit)")
        p.add_argument("--digits", type=int, default=3, help="ternary digits k")
        p.add_argument("--lo", type=int, default=-9, help="smallest entry (inclusive)")
        p.add_argument("--hi", type=int, default=10, help="entry bound (exclusive)")

    def cipher_flags(p):
        p.add_argument("--lenient", action="store_true", help="skip characters outside A-Z and space")
        p.add_argument("--format", choices=("text", "symbols"), default="text")

    add("keygen", "write a random key file", out, keygen_flags)
    add("gen", "write the subkey sequence as CSV", key, out)
    add("perm", "write the basin permutation as JSON", key, out)
    add("analyze", "run the statistical battery on a sequence CSV", inp, out, alpha)
    add("plot", "write pair-point CSV and SVG scatter", inp, out, alpha)
    add("encrypt", "encrypt a message file", key, inp, out, cipher_flags)
    add("decrypt", "decrypt a message file", key, inp, out, cipher_flags)
    add("demo", "print every step of the worked example")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except FileProblem as exc:
        _diagnose(str(exc))
        return EXIT_FILE
    except KeyOverflowError as exc:
        _diagnose(str(exc))
        return EXIT_OVERFLOW
    except (ValidationError, KeyError, TypeError) as exc:
        _diagnose(str(exc))
        return EXIT_VALIDATION
    return 0


if __name__ == "__main__":
    sys.exit(main())
