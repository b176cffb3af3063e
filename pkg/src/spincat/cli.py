"""Command-line front door.

Exit codes: 0 success, 1 contract/self-check failure, 2 usage error,
3 I/O error.  Machine-readable one-line JSON summaries go to stdout;
human-readable logs go to stderr (ANSI styling only on a tty and when
NO_COLOR is unset).  CSV-producing commands write to --out when given,
otherwise stream the CSV to stdout.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .coherent import BlochDirection, StereoLabel, coherent_expansion, husimi_grid, stereographic
from .dynamics import (
    KerrHamiltonianSpec,
    cat_scan,
    fit_two_component,
    quarter_period_evolve,
    write_cat_scan_csv,
)
from .errors import SpinCatError, StateFileError
from .halfint import HalfInteger
from .metrology import scaling_table, write_scaling_csv
from .schwinger import make_noon, noon_fidelity, off_support_mass
from .statefile import load_spin_state, save_state
from .verify import all_passed, format_table, run_suite, sections

EXIT_OK = 0
EXIT_CONTRACT = 1
EXIT_USAGE = 2
EXIT_IO = 3

NOON_SELF_CHECK = 1e-8


def _eprint(msg: str):
    print(msg, file=sys.stderr)


def _style(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stderr.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _emit(payload: dict):
    print(json.dumps(payload))


def parse_complex(text: str) -> complex:
    """Accept '0.3+0.4i', '1j', '2', 'inf' (the pole)."""
    cleaned = text.strip().lower().replace(" ", "")
    if cleaned in ("inf", "+inf", "infinity"):
        return complex(float("inf"), 0.0)
    try:
        return complex(cleaned.replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad float list {text!r}") from exc


def _resolve_label(parser, args) -> StereoLabel:
    has_angles = args.theta is not None
    has_gamma = args.gamma is not None
    if has_angles == has_gamma:
        parser.error("give exactly one of --theta [--phi] or --gamma")
    if has_gamma:
        g = args.gamma
        return StereoLabel.pole() if math.isinf(abs(g)) else StereoLabel.finite(g)
    try:
        return stereographic(BlochDirection(args.theta, args.phi))
    except ValueError as exc:
        parser.error(str(exc))


def _save(state, path, metadata) -> int:
    try:
        save_state(state, path, metadata)
    except OSError as exc:
        _eprint(f"cannot write {path}: {exc}")
        return EXIT_IO
    return EXIT_OK


def _write_csv(writer, rows, out_path, summary: dict) -> int:
    if out_path is None:
        writer(rows, sys.stdout)
        return EXIT_OK
    try:
        with open(out_path, "w", newline="", encoding="utf-8") as fh:
            writer(rows, fh)
    except OSError as exc:
        _eprint(f"cannot write {out_path}: {exc}")
        return EXIT_IO
    _emit({**summary, "path": str(out_path)})
    return EXIT_OK


def cmd_coherent(parser, args) -> int:
    label = _resolve_label(parser, args)
    j = HalfInteger(args.twice_j)
    state = coherent_expansion(j, label)
    meta = {"kind": "coherent", "twice_j": str(j.twice_value), "label": "pole" if label.at_pole else repr(label.gamma)}
    rc = _save(state, args.out, meta)
    if rc == EXIT_OK:
        _emit({"twice_j": j.twice_value, "dim": j.dim, "path": str(args.out)})
    return rc


def cmd_cat(parser, args) -> int:
    label = _resolve_label(parser, args)
    if label.at_pole or label.gamma == 0:
        parser.error("the cat construction needs a finite nonzero gamma")
    j = HalfInteger(args.twice_j)
    spec = KerrHamiltonianSpec(j, omega=args.omega, lam=1.0, axis="z")
    evolved = quarter_period_evolve(spec, coherent_expansion(j, label))
    fid, c_plus, c_minus = fit_two_component(evolved, label)
    meta = {"kind": "quarter-period-cat", "omega": repr(args.omega), "gamma": repr(label.gamma)}
    rc = _save(evolved, args.out, meta)
    if rc == EXIT_OK:
        _emit(
            {
                "twice_j": j.twice_value,
                "omega": args.omega,
                "two_component_fidelity": fid,
                "coeff_plus": [c_plus.real, c_plus.imag],
                "coeff_minus": [c_minus.real, c_minus.imag],
                "path": str(args.out),
            }
        )
    return rc


def cmd_noon(parser, args) -> int:
    if args.n < 1:
        parser.error(f"--n must be >= 1, got {args.n}")
    state = make_noon(args.n, omega=args.omega, gamma_choice=args.gamma_choice)
    fid, best_phi = noon_fidelity(state)
    meta = {"kind": "noon-pipeline", "n": str(args.n), "gamma_choice": args.gamma_choice}
    rc = _save(state, args.out, meta)
    if rc != EXIT_OK:
        return rc
    _emit(
        {
            "n": args.n,
            "fidelity": fid,
            "best_phi": best_phi,
            "off_support_mass": off_support_mass(state),
            "path": str(args.out),
        }
    )
    if args.n % 2 == 0 and fid < 1.0 - NOON_SELF_CHECK:
        _eprint(_style(f"self-check failed: even N={args.n} fidelity {fid!r}", "31"))
        return EXIT_CONTRACT
    return EXIT_OK


def cmd_husimi(parser, args) -> int:
    try:
        state = load_spin_state(args.input)
    except StateFileError as exc:
        _eprint(f"bad input state: {exc}")
        return EXIT_IO
    thetas, phis, grid = husimi_grid(state, args.n_theta, args.n_phi)

    def writer(_rows, fh):
        fh.write("theta,phi,q\n")
        for it, theta in enumerate(thetas):
            for ip, phi in enumerate(phis):
                fh.write(f"{float(theta)!r},{float(phi)!r},{float(grid[it, ip])!r}\n")

    return _write_csv(
        writer,
        None,
        args.out,
        {"twice_j": state.j.twice_value, "n_theta": args.n_theta, "n_phi": args.n_phi, "q_max": float(grid.max())},
    )


def cmd_scan(parser, args) -> int:
    try:
        j_list = [HalfInteger(tj) for tj in args.twice_j_list]
    except ValueError as exc:
        parser.error(str(exc))
    rows = cat_scan(j_list, args.omega, gamma=args.gamma)
    return _write_csv(write_cat_scan_csv, rows, args.out, {"rows": len(rows)})


def cmd_metrology(parser, args) -> int:
    if any(n < 1 for n in args.n_list):
        parser.error("--n-list entries must be >= 1")
    rows = scaling_table(args.n_list)
    return _write_csv(write_scaling_csv, rows, args.out, {"rows": len(rows)})


def cmd_verify(parser, args) -> int:
    results = run_suite(max_twice_j=args.max_twice_j)
    for line in format_table(results).splitlines():
        if line.startswith("[PASS]"):
            _eprint(_style("[PASS]", "32") + line[6:])
        else:
            _eprint(_style("[FAIL]", "31") + line[6:])
    failures = [f"{r.section}: {r.name}" for r in results if not r.passed]
    _emit(
        {
            "passed": all_passed(results),
            "max_twice_j": args.max_twice_j,
            "sections": len(sections(results)),
            "checks": len(results),
            "failures": failures,
        }
    )
    return EXIT_OK if all_passed(results) else EXIT_CONTRACT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincat",
        description="Spin coherent states, quarter-period cats, N00N states, and phase-estimation scaling.",
    )
    parser.add_argument("--version", action="version", version=f"spincat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_label_args(p):
        p.add_argument("--theta", type=float, default=None, help="polar Bloch angle in [0, pi]")
        p.add_argument("--phi", type=float, default=0.0, help="azimuthal Bloch angle")
        p.add_argument("--gamma", type=parse_complex, default=None, help="stereographic label, e.g. 0+1i or inf")

    p = sub.add_parser("coherent", help="write a coherent state file")
    p.add_argument("--twice-j", type=int, required=True)
    add_label_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_coherent)

    p = sub.add_parser("cat", help="quarter-period evolve a coherent state and write it")
    p.add_argument("--twice-j", type=int, required=True)
    add_label_args(p)
    p.add_argument("--omega", type=float, default=0.0)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_cat)

    p = sub.add_parser("noon", help="run the full N00N pipeline")
    p.add_argument("--n", type=int, required=True, help="total photon number")
    p.add_argument("--omega", type=float, default=0.0)
    p.add_argument("--gamma-choice", choices=("i", "1"), default="i")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_noon)

    p = sub.add_parser("husimi", help="export an overlap-squared Bloch grid as CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--n-theta", type=int, default=61)
    p.add_argument("--n-phi", type=int, default=120)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_husimi)

    p = sub.add_parser("scan", help="two-component fidelity scan over j and omega")
    p.add_argument("--twice-j-list", type=_int_list, required=True)
    p.add_argument("--omega", type=_float_list, default=[0.0], help="comma-separated omega values")
    p.add_argument("--gamma", type=parse_complex, default=1j)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("metrology", help="phase-uncertainty scaling table")
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_metrology)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--max-twice-j", type=int, default=60)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(parser, args)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except StateFileError as exc:
        _eprint(f"state file error: {exc}")
        return EXIT_IO
    except OSError as exc:
        _eprint(f"I/O error: {exc}")
        return EXIT_IO
    except SpinCatError as exc:
        _eprint(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
