"""Command-line front end.

Subcommands: capacity, encode, decode, pauli-verify, saturate, niven,
uncertainty, reduce.  Output is a pure function of the arguments, seed,
precision and constants file; --format selects text, json (single document
with a schema_version field) or csv (saturate only).  Exit codes: 0 success,
1 verified-property failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional

import numpy as np

from . import bitstring, gravity, nested, signed_perm
from .qubit import DiscretisedQubit, coarsen, niven_admissible

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    fmt: str
    seed: int
    precision: int
    constants: gravity.PhysicalConstants


def _config(args: argparse.Namespace) -> RunConfig:
    precision = args.precision
    if args.constants:
        constants = gravity.PhysicalConstants.from_file(args.constants, precision=precision)
    else:
        constants = gravity.constants_from_env(precision=precision)
    return RunConfig(fmt=args.format, seed=args.seed, precision=precision, constants=constants)


def _emit(cfg: RunConfig, doc: dict, text_lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, **doc}))
    else:
        for line in text_lines:
            print(line)


def _require_text_or_json(cfg: RunConfig, command: str) -> None:
    if cfg.fmt == "csv":
        raise ValueError(f"csv format is only available for saturate, not {command}")


def _decimal(text: str, what: str) -> Decimal:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise ValueError(f"{what} must be a decimal number, got {text!r}")
    return value


def cmd_capacity(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "capacity")
    scenario = gravity.Scenario(
        M=_decimal(args.mass, "--mass"),
        b=_decimal(args.sep, "--sep"),
        qubit_multiplier=args.qubits,
        R_override=_decimal(args.radius, "--radius") if args.radius else None,
    )
    report = gravity.scenario_report(scenario, cfg.constants)
    doc = {
        "command": "capacity",
        "mass": str(scenario.M),
        "separation": str(scenario.b),
        "qubit_multiplier": scenario.qubit_multiplier,
        **report.to_dict(),
    }
    text = [
        f"M = {scenario.M} kg x {scenario.qubit_multiplier}, b = {scenario.b} m",
        f"R      = {report.R:.6E} m",
        f"beta   = {report.beta:.6E}",
        f"E_G    = {report.E_G:.6E} J",
        f"tau_DP = {report.tau_DP:.6E} s",
        f"tau_M  = {report.tau_M:.6E} s",
        f"log10 L = {report.log10_L:.6f}",
        f"log2 L  = {report.log2_L:.6f}",
        f"n_max   = {report.n_max}",
    ]
    _emit(cfg, doc, text)
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "encode")
    q = DiscretisedQubit(args.m, args.n, args.L)
    s = bitstring.encode(q)
    doc = {
        "command": "encode",
        "m": q.m,
        "n": q.n,
        "L": q.L,
        "bits": bitstring.to_text(s),
    }
    _emit(cfg, doc, [bitstring.to_text(s)])
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "decode")
    decoded = bitstring.decode(bitstring.from_text(args.bits))
    q = decoded.qubit
    doc = {
        "command": "decode",
        "m": q.m,
        "n": q.n,
        "L": q.L,
        "degenerate": decoded.degenerate,
    }
    text = f"m={q.m} n={q.n} L={q.L}"
    if decoded.degenerate:
        text += " (degenerate: phase unobservable)"
    _emit(cfg, doc, [text])
    return 0


def cmd_pauli_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "pauli-verify")
    L = args.L
    quaternion = signed_perm.verify_quaternion(L)
    spin = signed_perm.verify_spin_identities(L)
    split = signed_perm.self_similar_split(L) if L % 8 == 0 else None
    checks = {"quaternion": quaternion, "spin": spin, "split": split}
    all_pass = all(v for v in checks.values() if v is not None)
    doc = {"command": "pauli-verify", "L": L, **checks, "all_pass": all_pass}
    text = [
        f"L = {L}",
        f"quaternion identities: {'pass' if quaternion else 'FAIL'}",
        f"spin identities:       {'pass' if spin else 'FAIL'}",
        "self-similar split:    "
        + ("skipped (needs 8 | L)" if split is None else ("pass" if split else "FAIL")),
    ]
    _emit(cfg, doc, text)
    return 0 if all_pass else 1


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    single = int(text)
    return single, single


def cmd_saturate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    n_lo, n_hi = _parse_range(args.n)
    rows = nested.saturation_experiment(args.L, n_lo, n_hi, args.samples, cfg.seed)
    if cfg.fmt == "json":
        doc = {
            "command": "saturate",
            "L": args.L,
            "samples": args.samples,
            "seed": cfg.seed,
            "rows": [row._asdict() for row in rows],
        }
        print(json.dumps({"schema_version": SCHEMA_VERSION, **doc}))
    else:
        print("N,median_fidelity,p10_fidelity,min_segment_len")
        for row in rows:
            print(
                f"{row.N},{row.median_fidelity!r},{row.p10_fidelity!r},{row.min_segment_len}"
            )
    return 0


def cmd_niven(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "niven")
    try:
        c = Fraction(args.cos)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"--cos must be a rational like 1/2, got {args.cos!r}")
    admissible = niven_admissible(c)
    doc = {"command": "niven", "cos": str(c), "admissible": admissible}
    _emit(cfg, doc, ["admissible" if admissible else "not admissible"])
    return 0


def cmd_uncertainty(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "uncertainty")
    if args.samples < 1:
        raise ValueError("--samples must be >= 1")
    rng = np.random.default_rng(cfg.seed & ((1 << 64) - 1))
    vecs = rng.normal(size=(args.samples, 3))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    lhs = np.sqrt(np.maximum(0.0, 1.0 - vecs[:, 0] ** 2)) * np.sqrt(
        np.maximum(0.0, 1.0 - vecs[:, 1] ** 2)
    )
    rhs = np.abs(vecs[:, 2])
    satisfied = int(np.count_nonzero(lhs >= rhs - 1e-12))
    worst = float(np.min(lhs - rhs))
    all_ok = satisfied == args.samples
    doc = {
        "command": "uncertainty",
        "samples": args.samples,
        "seed": cfg.seed,
        "satisfied": satisfied,
        "all_ok": all_ok,
        "min_margin": worst,
    }
    _emit(cfg, doc, [f"{satisfied}/{args.samples} satisfied"])
    return 0 if all_ok else 1


def cmd_reduce(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require_text_or_json(cfg, "reduce")
    q = coarsen(DiscretisedQubit(args.m, args.n, args.L), args.to)
    doc = {"command": "reduce", "m": q.m, "n": q.n, "L": q.L}
    _emit(cfg, doc, [f"m={q.m} n={q.n} L={q.L}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text; csv for saturate only)",
    )
    common.add_argument("--seed", type=int, default=0, help="64-bit experiment seed")
    common.add_argument("--precision", type=int, default=120, help="significant decimal digits")
    common.add_argument("--constants", default=None, help="path to a key=value constants file")

    parser = argparse.ArgumentParser(
        prog="qgrain",
        description="Granular qubit states, bit-string codecs and capacity bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", parents=[common], help="scenario capacity report")
    p.add_argument("--mass", required=True, help="mass in kg")
    p.add_argument("--sep", required=True, help="superposition separation in m")
    p.add_argument("--qubits", type=int, default=1, help="entangled-qubit mass multiplier")
    p.add_argument("--radius", default=None, help="override characteristic radius in m")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("encode", parents=[common], help="grid state to bit string")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="bit string to grid state")
    p.add_argument("--bits", required=True, help="string over + and -")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("pauli-verify", parents=[common], help="check the operator identities")
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(func=cmd_pauli_verify)

    p = sub.add_parser("saturate", parents=[common], help="fidelity saturation sweep")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--n", required=True, help="qubit range, e.g. 1..14")
    p.add_argument("--samples", type=int, required=True)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("niven", parents=[common], help="rational-cosine admissibility")
    p.add_argument("--cos", required=True, help="rational cosine, e.g. 1/2")
    p.set_defaults(func=cmd_niven)

    p = sub.add_parser("uncertainty", parents=[common], help="sample the spread-product bound")
    p.add_argument("--samples", type=int, required=True)
    p.set_defaults(func=cmd_uncertainty)

    p = sub.add_parser("reduce", parents=[common], help="coarsen a grid state")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--to", type=int, required=True, help="target granularity")
    p.set_defaults(func=cmd_reduce)

    return parser


_LEADING_DASH_VALUE_FLAGS = ("--bits", "--cos")


def _merge_bits_value(argv: list[str]) -> list[str]:
    # "--bits --++" or "--cos -1/2" would be read as missing arguments;
    # fold such values into flag=value form.
    merged = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in _LEADING_DASH_VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            merged.append(token)
    return merged


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = _merge_bits_value(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
