"""Experiment command line.

Subcommands emit CSV (or key=value report lines) with the fully
resolved configuration echoed as '#' comment lines, so every output
file documents how it was produced.  Rates are printed with exactly six
decimals and stochastic commands derive all randomness from --seed, so
reruns are byte-identical.

Exit status: 0 on success, 1 when a verification check fails, 2 on
invalid configuration.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from math import comb

from .channels import BEC, BSC, estimate_block_error
from .coset import (
    bsc_threshold,
    build_plan,
    coset_rate_lower_bound,
    crossover_capacity,
    decode,
    encode,
)
from .gf2 import BinaryMatrix
from .ordering import (
    gray_ordering,
    lexicographic_ordering,
    permutation_bound_experiment,
    run_profile,
    subcode_dimension_bound,
)
from .rll import RllSpec, noiseless_capacity
from .rm import RmCode, complement_basis
from .subcodes import build_subcode, largest_linear_rll_subcode

__all__ = ["main", "lemma_checks"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Invalid or missing configuration; maps to exit status 2."""


@dataclass(frozen=True)
class Opt:
    name: str
    typ: type
    default: object = None
    required: bool = False
    choices: tuple = ()
    help: str = ""


COMMANDS: dict[str, tuple[str, tuple[Opt, ...]]] = {
    "rate-curves": (
        "tabulate achievable-rate bounds against channel capacity",
        (
            Opt("d", int, required=True, help="minimum zeros between 1s"),
            Opt("part_exponent", int, default=50, help="tail part-size exponent"),
            Opt("grid", float, default=0.01, help="capacity step in (0, 0.1]"),
        ),
    ),
    "verify-lemmas": (
        "verify structural identities exhaustively over small sizes",
        (
            Opt(
                "m_max",
                int,
                required=True,
                help="largest code exponent for the rank checks (at most 12); "
                "span checks cap at m=8 and run-count checks always cover m<=12",
            ),
        ),
    ),
    "subcode-oracle": (
        "compare the subcode construction against the exhaustive oracle",
        (
            Opt("m", int, required=True, help="code exponent"),
            Opt("r", int, required=True, help="code order"),
            Opt("d", int, required=True, help="minimum zeros between 1s"),
        ),
    ),
    "coset-trial": (
        "Monte-Carlo block-error trial of the coset transmission scheme",
        (
            Opt("m", int, required=True, help="outer code exponent"),
            Opt("r", int, required=True, help="outer code order"),
            Opt("d", int, required=True, help="minimum zeros between 1s"),
            Opt("part_exponent", int, required=True, help="tail part-size exponent"),
            Opt("inner_order", int, help="inner code order (default: selection rule)"),
            Opt("channel", str, required=True, choices=("bec", "bsc"), help="channel kind"),
            Opt("param", float, required=True, help="erasure or flip probability"),
            Opt("trials", int, required=True, help="number of Monte-Carlo trials"),
            Opt("seed", int, required=True, help="master seed"),
        ),
    ),
    "crossover": (
        "capacity at which the coset bound overtakes the subcode bound",
        (
            Opt("d", int, required=True, help="minimum zeros between 1s"),
            Opt("part_exponent", int, default=50, help="tail part-size exponent"),
            Opt("tol", float, default=1e-6, help="bisection tolerance"),
        ),
    ),
    "perm-sweep": (
        "dimension-bound statistics over random coordinate orderings",
        (
            Opt("m", int, required=True, help="code exponent (at most 14)"),
            Opt("r", int, required=True, help="code order"),
            Opt("d", int, required=True, help="minimum zeros between 1s"),
            Opt("samples", int, required=True, help="number of sampled orderings"),
            Opt("seed", int, required=True, help="master seed"),
        ),
    ),
}


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _parse_config_file(path: str) -> dict[str, str]:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, _, value = line.partition("=")
                out[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    return out


def _resolve(args: argparse.Namespace, opts: tuple[Opt, ...]) -> dict:
    file_vals = _parse_config_file(args.config) if args.config else {}
    known = {o.name for o in opts}
    for key in file_vals:
        if key not in known:
            raise UsageError(f"unknown config key '{key}'")
    resolved = {}
    for o in opts:
        v = getattr(args, o.name)
        if v is None and o.name in file_vals:
            try:
                v = o.typ(file_vals[o.name])
            except ValueError as exc:
                raise UsageError(f"bad value for '{o.name}': {file_vals[o.name]}") from exc
        if v is None:
            v = o.default
        if v is None and o.required:
            raise UsageError(f"missing required option --{o.name.replace('_', '-')}")
        if o.choices and v is not None and v not in o.choices:
            raise UsageError(f"'{o.name}' must be one of {', '.join(o.choices)}")
        resolved[o.name] = v
    return resolved


def _header(command: str, params: dict, out_path: str) -> list[str]:
    lines = [f"# command={command}"]
    for key in sorted(params):
        lines.append(f"# {key}={params[key]}")
    lines.append(f"# out={out_path}")
    return lines


def _emit(out_path: str, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_rate_curves(p: dict) -> tuple[list[str], int]:
    if p["d"] < 0:
        raise UsageError("d must be nonnegative")
    if p["part_exponent"] < 1:
        raise UsageError("part exponent must be at least 1")
    if not 0.0 < p["grid"] <= 0.1:
        raise UsageError("grid must lie in (0, 0.1]")
    spec = RllSpec(p["d"])
    c0 = noiseless_capacity(spec)
    scale = 2.0 ** (-spec.anchor_count)
    lines = ["capacity,subcode_bound,coset_bound,coset_averaging_bound"]
    steps = int(1.0 / p["grid"] + 1e-9)
    for k in range(1, steps + 1):
        c = min(k * p["grid"], 1.0)
        coset = coset_rate_lower_bound(c0, c, spec, p["part_exponent"])
        averaging = max(0.0, c0 + c - 1.0)
        lines.append(
            f"{_fmt(c)},{_fmt(c * scale)},{_fmt(coset)},{_fmt(averaging)}"
        )
    return lines, EXIT_OK


def lemma_checks(m_max: int, fault: bool = False) -> tuple[list[str], bool]:
    """Structural verification report; ``fault`` corrupts one generator
    as a negative control for the exit-status contract."""
    if not 1 <= m_max <= 12:
        raise UsageError("m-max must lie in 1..12")
    lines = []
    all_ok = True

    for m in range(1, m_max + 1):
        ok = True
        for r in range(m + 1):
            code = RmCode(m, r)
            gen = code.gen
            if fault and (m, r) == (1, 0):
                gen = BinaryMatrix([0], code.n)  # negative-control corruption
            info = sorted(code.information_set())
            if len(info) != code.k or gen.rank_of_columns(info) != code.k:
                ok = False
        lines.append(f"check=info-set-rank m={m} status={'ok' if ok else 'FAIL'}")
        all_ok &= ok

    for m in range(1, min(m_max, 8) + 1):
        ok = True
        n = 1 << m
        for r in range(m + 1):
            basis = complement_basis(m, r)
            expected = sum(comb(m, i) for i in range(r + 1, m + 1))
            units = BinaryMatrix(
                [1 << i for i in range(n) if i.bit_count() >= r + 1], n
            )
            if not (
                basis.nrows == expected
                and basis.rank() == expected
                and basis.stack(units).rank() == expected
            ):
                ok = False
        lines.append(f"check=complement-span m={m} status={'ok' if ok else 'FAIL'}")
        all_ok &= ok

    spec = RllSpec(1)  # run structure does not depend on d
    for m in range(1, max(m_max, 12) + 1):
        ok_lex = True
        ok_gray = True
        lex = lexicographic_ordering(m)
        gray = gray_ordering(m)
        for r in range(m):
            info = frozenset(i for i in range(1 << m) if i.bit_count() <= r)
            if run_profile(info, lex, spec).bounded_runs != comb(m - 1, r):
                ok_lex = False
            if run_profile(info, gray, spec).bounded_runs > comb(m, r + 1):
                ok_gray = False
        lines.append(f"check=lex-run-count m={m} status={'ok' if ok_lex else 'FAIL'}")
        lines.append(f"check=gray-run-bound m={m} status={'ok' if ok_gray else 'FAIL'}")
        all_ok &= ok_lex and ok_gray

    lines.append(f"result={'pass' if all_ok else 'fail'}")
    return lines, all_ok


def cmd_verify_lemmas(p: dict, fault: bool = False) -> tuple[list[str], int]:
    lines, ok = lemma_checks(p["m_max"], fault=fault)
    return lines, EXIT_OK if ok else EXIT_FAIL


def cmd_subcode_oracle(p: dict) -> tuple[list[str], int]:
    m, r, d = p["m"], p["r"], p["d"]
    if m < 1 or not 0 <= r <= m or d < 0:
        raise UsageError("need m >= 1, 0 <= r <= m, d >= 0")
    spec = RllSpec(d)
    if m < spec.anchor_count:
        raise UsageError(f"need m >= {spec.anchor_count} for d={d}")
    k = sum(comb(m, i) for i in range(r + 1))
    if k > 20:
        raise UsageError(f"oracle needs dimension <= 20, got {k}")
    code = RmCode(m, r)
    prof = run_profile(code.information_set(), lexicographic_ordering(m), spec)
    bound = subcode_dimension_bound(code.k, prof.tuple_count, spec)
    oracle_dim, _ = largest_linear_rll_subcode(code, spec)
    construction_dim = build_subcode(code, spec).k
    lines = [
        "m,r,d,k,dimension_bound,oracle_dim,construction_dim",
        f"{m},{r},{d},{k},{bound},{oracle_dim},{construction_dim}",
    ]
    ok = construction_dim <= oracle_dim <= bound
    if not ok:
        lines.append("# violation=construction<=oracle<=bound")
    return lines, EXIT_OK if ok else EXIT_FAIL


def cmd_coset_trial(p: dict) -> tuple[list[str], int]:
    spec = RllSpec(p["d"]) if p["d"] >= 0 else None
    if spec is None:
        raise UsageError("d must be nonnegative")
    try:
        plan = build_plan(p["m"], p["r"], spec, p["part_exponent"], p["inner_order"])
    except ValueError as exc:
        raise UsageError(f"infeasible plan: {exc}") from exc
    try:
        channel = BEC(p["param"]) if p["channel"] == "bec" else BSC(p["param"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if p["channel"] == "bsc" and (plan.payload_bits > 20 or plan.inner.k > 16):
        raise UsageError(
            "bsc decoding is exhaustive and needs payload_bits <= 20 and "
            f"inner dimension <= 16 (plan has {plan.payload_bits} and {plan.inner.k})"
        )
    if p["trials"] < 1:
        raise UsageError("trials must be positive")

    k = plan.k

    def enc(index: int):
        return encode(index, plan).transmitted

    def dec(obs):
        result = decode(obs[:k], obs[k:], plan, channel)
        return result.message if result.is_message else None

    est = estimate_block_error(
        enc, dec, 1 << plan.payload_bits, channel, p["trials"], p["seed"]
    )
    lines = [
        "m,r,d,part_exponent,inner_order,k,part_count,part_length,payload_bits,"
        "realized_rate,channel,param,trials,block_errors,p_hat,halfwidth",
        f"{plan.m},{plan.r},{spec.d},{plan.part_exponent},{plan.inner_order},"
        f"{plan.k},{plan.part_count},{plan.part_length},{plan.payload_bits},"
        f"{_fmt(plan.realized_rate)},{p['channel']},{_fmt(p['param'])},"
        f"{est.trials},{est.errors},{_fmt(est.p_hat)},{_fmt(est.halfwidth)}",
    ]
    return lines, EXIT_OK


def cmd_crossover(p: dict) -> tuple[list[str], int]:
    if p["d"] < 0:
        raise UsageError("d must be nonnegative")
    if p["part_exponent"] < 1:
        raise UsageError("part exponent must be at least 1")
    if not 0.0 < p["tol"] <= 0.01:
        raise UsageError("tol must lie in (0, 0.01]")
    spec = RllSpec(p["d"])
    cstar = crossover_capacity(spec, p["part_exponent"], p["tol"])
    if cstar is None:
        return ["crossover=none"], EXIT_OK
    lines = [
        f"capacity_crossover={_fmt(cstar)}",
        f"erasure_threshold={_fmt(1.0 - cstar)}",
        f"bsc_threshold={_fmt(bsc_threshold(cstar))}",
    ]
    return lines, EXIT_OK


def cmd_perm_sweep(p: dict) -> tuple[list[str], int]:
    m, r, d = p["m"], p["r"], p["d"]
    if not 1 <= m <= 14:
        raise UsageError("m must lie in 1..14 (run profiles scan 2**m positions)")
    if not 0 <= r <= m or d < 0:
        raise UsageError("need 0 <= r <= m and d >= 0")
    if p["samples"] < 1:
        raise UsageError("samples must be positive")
    spec = RllSpec(d)
    exp = permutation_bound_experiment(RmCode(m, r), spec, p["samples"], p["seed"])
    lines = ["m,r,d,kind,seed,k,runs,bounded_runs,tuples,bound"]
    for s in exp.samples:
        lines.append(
            f"{m},{r},{d},sampled,{p['seed']}:{s.index},{exp.k},{s.run_count},"
            f"{s.bounded_runs},{s.tuple_count},{_fmt(s.rate_bound)}"
        )
    reference = (exp.k / (1 << m)) / (d + 1) + 0.05
    above = sum(1 for s in exp.samples if s.rate_bound > reference)
    lines.append(f"# mean_bound={_fmt(exp.mean_bound)}")
    lines.append(f"# max_bound={_fmt(exp.max_bound)}")
    lines.append(f"# fraction_above_reference={_fmt(above / len(exp.samples))}")
    return lines, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmrll",
        description="experiments on gap-constrained Reed-Muller transmission",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (help_text, opts) in COMMANDS.items():
        cp = sub.add_parser(name, help=help_text)
        cp.add_argument("--out", default="-", help="output path (default: stdout)")
        cp.add_argument(
            "--config", default=None, help="file of key=value defaults; flags win"
        )
        for o in opts:
            cp.add_argument(
                "--" + o.name.replace("_", "-"),
                dest=o.name,
                type=o.typ,
                default=None,
                help=o.help,
            )
        if name == "verify-lemmas":
            cp.add_argument(
                "--inject-fault",
                action="store_true",
                default=False,
                help=argparse.SUPPRESS,  # negative-control hook for tests
            )
    return parser


_RUNNERS = {
    "rate-curves": cmd_rate_curves,
    "verify-lemmas": cmd_verify_lemmas,
    "subcode-oracle": cmd_subcode_oracle,
    "coset-trial": cmd_coset_trial,
    "crossover": cmd_crossover,
    "perm-sweep": cmd_perm_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        params = _resolve(args, COMMANDS[args.command][1])
        if args.command == "verify-lemmas":
            body, status = cmd_verify_lemmas(params, fault=args.inject_fault)
        else:
            body, status = _RUNNERS[args.command](params)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args.out, _header(args.command, params, args.out) + body)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
