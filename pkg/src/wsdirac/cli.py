"""Command-line surface: reference tables, single solves, wavefunction samples
and a self-consistency verification suite.  All outputs machine-readable.

Exit codes: 0 success, 1 verification/table-cell failure, 2 argument or
validation error, 3 degenerate superpotential, 4 no real energy root,
5 non-normalizable wavefunction.
"""
from __future__ import annotations

import argparse
import datetime
import json
import sys

import numpy as np

from .errors import (
    DegenerateSuperpotential,
    NoEigenvalueInBracket,
    NotBoundRegime,
    WsdiracError,
)
from . import oracle
from .params import PhysicalParams, QuantumState, derive_coefficients
from .pekeris import pekeris_coefficients, taylor_match_report
from .spectrum import (
    SpectrumResult,
    closed_form_vs_bracketing_gap,
    ground_state_energy,
    solve_energy,
    sweep,
)
from .susyqm import closed_form_A, slope_parameter, solve_susy_parameters
from .wavefunction import evaluate, normalize

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_NO_REAL_ROOT = 4
EXIT_NOT_NORMALIZABLE = 5

CSV_HEADER = ("alpha_prime,dim,ell,n,e_upper,e_lower,e_binding,"
              "branch,roots_real,normalizable,error")

TABLE_ALPHAS = [0.0, 0.001, 0.005, 0.01]
TABLE1_DIMS = [1, 2, 3, 4, 5]
TABLE2_ELLS = [20, 21, 22, 23, 24]

_PHYSICS_KEYS = {
    "mass": float,
    "surface_thickness": float,
    "radius": float,
    "depth": float,
    "e0": float,
    "alpha_prime": float,
    "ell": int,
    "dim": int,
    "n": int,
}


def _num(x) -> str:
    return "%.10g" % x


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    phys = common.add_argument_group("physical parameters")
    phys.add_argument("--mass", type=float, default=10.0,
                      help="fermion mass M (fm^-1)")
    phys.add_argument("--surface-thickness", type=float, default=0.5,
                      help="surface thickness a (fm)")
    phys.add_argument("--radius", type=float, default=7.0,
                      help="potential width R (fm)")
    phys.add_argument("--depth", type=float, default=-10.0,
                      help="potential depth V0 (fm^-1)")
    phys.add_argument("--e0", type=float, default=10.0,
                      help="zeroth-order energy E0 (fm^-1)")
    phys.add_argument("--alpha-prime", type=float, default=0.0,
                      help="deformation parameter alpha' (fm^2)")
    phys.add_argument("--ell", type=int, default=20,
                      help="azimuthal quantum number")
    phys.add_argument("--dim", type=int, default=3, help="spatial dimension D")
    phys.add_argument("--n", type=int, default=0,
                      help="principal quantum number")
    io = common.add_argument_group("input/output")
    io.add_argument("--config", metavar="FILE",
                    help="key=value configuration file; flags override it")
    io.add_argument("--format", choices=["csv", "json-lines"], default="csv")
    io.add_argument("--output", metavar="FILE",
                    help="write to FILE instead of stdout")
    io.add_argument("--timestamp", action="store_true",
                    help="include a generation timestamp in the output")

    parser = argparse.ArgumentParser(
        prog="wsdirac",
        description="Bound-state spectra of a deformed Woods-Saxon Dirac problem",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[common],
                             help="reproduce a reference 5x4 grid")
    p_table.add_argument("which", type=int, choices=[1, 2],
                         help="1: dimension grid at ell=20; 2: ell grid at D=3")

    p_solve = sub.add_parser("solve", parents=[common],
                             help="solve one configuration and print the record")

    p_wf = sub.add_parser("wavefunction", parents=[common],
                          help="emit normalized ground-state samples (r, F)")
    p_wf.add_argument("--samples", type=int, default=1000,
                      help="number of equally spaced radii on [0, r_max]")

    p_ver = sub.add_parser("verify", parents=[common],
                           help="run the self-consistency checks")
    p_ver.add_argument("--with-oracle", action="store_true",
                       help="also cross-check against the shooting solver")
    # subparsers parse into a fresh namespace, so config-file defaults must
    # be installed on each of them, not on the root parser
    parser.command_parsers = [p_table, p_solve, p_wf, p_ver]
    return parser


def _apply_config_file(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Load key=value defaults from a --config file, if given."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return argv
    defaults = {}
    try:
        with open(known.config, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"line {lineno}: expected key=value")
                key, value = (s.strip() for s in line.split("=", 1))
                key = key.replace("-", "_")
                if key in _PHYSICS_KEYS:
                    defaults[key] = _PHYSICS_KEYS[key](value)
                elif key in ("format", "output"):
                    defaults[key] = value
                else:
                    raise ValueError(f"line {lineno}: unknown key '{key}'")
    except OSError as exc:
        parser.error(f"cannot read config file: {exc}")
    except ValueError as exc:
        parser.error(f"bad config file: {exc}")
    for sub in parser.command_parsers:
        sub.set_defaults(**defaults)
    return argv


def _physical_params(args, alpha_prime: float | None = None) -> PhysicalParams:
    return PhysicalParams(
        M=args.mass,
        a=args.surface_thickness,
        R=args.radius,
        V0=args.depth,
        E0=args.e0,
        alpha_prime=args.alpha_prime if alpha_prime is None else alpha_prime,
    )


class _Writer:
    def __init__(self, args):
        self._path = getattr(args, "output", None)
        self._fh = open(self._path, "w", encoding="utf-8") if self._path else sys.stdout
        self.fmt = args.format
        self._wrote_header = False
        if args.timestamp:
            stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
            if self.fmt == "csv":
                self._fh.write(f"# generated {stamp}\n")
            else:
                self._fh.write(json.dumps({"timestamp": stamp}) + "\n")

    def spectrum_row(self, alpha: float, dim: int, ell: int, n: int,
                     result: SpectrumResult | None, error: str | None):
        fields = {
            "alpha_prime": alpha, "dim": dim, "ell": ell, "n": n,
            "e_upper": None, "e_lower": None, "e_binding": None,
            "branch": None, "roots_real": False, "normalizable": False,
            "error": error or "",
        }
        if result is not None:
            fields.update(
                e_upper=result.e_upper, e_lower=result.e_lower,
                e_binding=result.e_binding, branch=result.branch,
                roots_real=result.roots_real, normalizable=result.normalizable,
            )
        if self.fmt == "json-lines":
            self._fh.write(json.dumps(fields) + "\n")
            return
        if not self._wrote_header:
            self._fh.write(CSV_HEADER + "\n")
            self._wrote_header = True
        cells = [
            _num(fields["alpha_prime"]), str(dim), str(ell), str(n),
            _num(fields["e_upper"]) if fields["e_upper"] is not None else "",
            _num(fields["e_lower"]) if fields["e_lower"] is not None else "",
            _num(fields["e_binding"]) if fields["e_binding"] is not None else "",
            fields["branch"] or "",
            str(bool(fields["roots_real"])).lower(),
            str(bool(fields["normalizable"])).lower(),
            fields["error"],
        ]
        self._fh.write(",".join(cells) + "\n")

    def sample_row(self, r: float, F: float):
        if self.fmt == "json-lines":
            self._fh.write(json.dumps({"r": r, "F": F}) + "\n")
            return
        if not self._wrote_header:
            self._fh.write("r,F\n")
            self._wrote_header = True
        self._fh.write(f"{_num(r)},{_num(F)}\n")

    def line(self, text: str):
        self._fh.write(text + "\n")

    def close(self):
        if self._path:
            self._fh.close()


def _cmd_table(args) -> int:
    if args.which == 1:
        dims, ells = TABLE1_DIMS, [20]
    else:
        dims, ells = [3], TABLE2_ELLS
    try:
        base = _physical_params(args, alpha_prime=0.0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    writer = _Writer(args)
    failed = False
    # rows are D (table 1) or ell (table 2), columns the deformation values
    for dim in dims:
        for ell in ells:
            for cell in sweep(base, TABLE_ALPHAS, [dim], [ell], [args.n]):
                writer.spectrum_row(cell.alpha_prime, cell.D, cell.ell,
                                    cell.n, cell.result, cell.error)
                failed = failed or cell.error is not None
    writer.close()
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _solve_one(args) -> tuple[PhysicalParams, QuantumState, SpectrumResult]:
    p = _physical_params(args)
    state = QuantumState(n=args.n, ell=args.ell, D=args.dim)
    return p, state, solve_energy(p, state)


def _cmd_solve(args) -> int:
    try:
        _, _, result = _solve_one(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateSuperpotential as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except WsdiracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    writer = _Writer(args)
    writer.spectrum_row(args.alpha_prime, args.dim, args.ell, args.n,
                        result, None if result.roots_real else "NoRealRoot")
    writer.close()
    return EXIT_OK if result.roots_real else EXIT_NO_REAL_ROOT


def _cmd_wavefunction(args) -> int:
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        p, state, result = _solve_one(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateSuperpotential as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if not result.roots_real:
        print("error: no real energy root for this configuration", file=sys.stderr)
        return EXIT_NO_REAL_ROOT
    dc = derive_coefficients(p, state)
    pk = pekeris_coefficients(p.R, p.a)
    sp = solve_susy_parameters(dc, pk, p, result.e_upper)
    if sp.A >= 0.0:
        print(f"error: selected root has A = {_num(sp.A)} >= 0; "
              "ground state not normalizable", file=sys.stderr)
        return EXIT_NOT_NORMALIZABLE
    wf = normalize(sp.A, sp.B, p.a, p.R)
    writer = _Writer(args)
    for r in np.linspace(0.0, wf.r_max, args.samples):
        writer.sample_row(float(r), evaluate(wf, float(r)))
    writer.close()
    return EXIT_OK


def _cmd_verify(args) -> int:
    writer = _Writer(args)
    failures = 0

    def report(name: str, ok: bool | None, detail: str):
        nonlocal failures
        status = "skip" if ok is None else ("pass" if ok else "fail")
        if ok is False:
            failures += 1
        writer.line(f"{status} {name} {detail}")

    try:
        p = _physical_params(args)
        state = QuantumState(n=args.n, ell=args.ell, D=args.dim)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    pk = pekeris_coefficients(p.R, p.a)
    t = taylor_match_report(pk)
    gap = max(abs(t[0] - 1.0), abs(t[1] + 2.0), abs(t[2] - 3.0))
    report("centrifugal-surrogate-taylor-match", gap < 1e-10, f"max_gap={gap:.3e}")

    dc = derive_coefficients(p, state)
    try:
        result = solve_energy(p, state)
    except DegenerateSuperpotential as exc:
        report("energy-solve", False, f"degenerate: {exc}")
        writer.close()
        return EXIT_CHECK_FAILED

    if not result.roots_real:
        report("energy-solve", False, "no real root")
        writer.close()
        return EXIT_CHECK_FAILED
    report("energy-solve", True, f"e_binding={_num(result.e_binding)}")

    E = result.e_upper
    sp = solve_susy_parameters(dc, pk, p, E)
    g = dc.gamma / p.R**2
    o_term = dc.ml_quartic - (E * E - p.M * p.M)
    kap = dc.kappa_const - dc.kappa_slope * (E + p.M)
    res = (
        abs(sp.A**2 - (o_term + g * pk.c0)),
        abs(2 * sp.A * sp.B - sp.B / p.a - (kap + g * pk.c1)),
        abs(sp.B**2 + sp.B / p.a - (dc.v + g * pk.c2)),
    )
    report("superpotential-matching-residuals", max(res) < 1e-10,
           f"max_residual={max(res):.3e}")

    a_gap = abs(closed_form_A(dc, pk, p, E) - sp.A)
    report("superpotential-elimination-agreement", a_gap < 1e-10,
           f"gap={a_gap:.3e}")

    if args.n == 0:
        gs = ground_state_energy(p, state)
        gs_gap = abs(gs.e_upper - result.e_upper)
        report("ground-state-route-agreement", gs_gap < 1e-10,
               f"gap={gs_gap:.3e}")
    else:
        report("ground-state-route-agreement", None, "n > 0")

    br_gap = closed_form_vs_bracketing_gap(p, state)
    report("closed-form-vs-bracketing", br_gap < 1e-10, f"gap={br_gap:.3e}")

    if getattr(args, "with_oracle", False):
        try:
            cfg = oracle.default_config(p, (E - 0.5, E + 0.5))
            eigs = oracle.find_eigenvalues(cfg, p, state, count=1)
            o_gap = min(abs(e - E) for e in eigs)
            report("shooting-cross-check", o_gap < 1e-3, f"gap={o_gap:.3e}")
        except (NoEigenvalueInBracket, NotBoundRegime) as exc:
            report("shooting-cross-check", False, f"{type(exc).__name__}: {exc}")
    else:
        report("shooting-cross-check", None, "oracle disabled")

    writer.close()
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    argv = _apply_config_file(parser, argv)
    args = parser.parse_args(argv)
    handler = {
        "table": _cmd_table,
        "solve": _cmd_solve,
        "wavefunction": _cmd_wavefunction,
        "verify": _cmd_verify,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
