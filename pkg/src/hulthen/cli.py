"""Command-line surface: spectrum, wavefunction, verify, compare, degeneracy.

Outputs are deterministic CSV or JSON (schema 1): identical configuration
produces byte-identical output.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .errors import HulthenError, NotBoundError
from .model import DEFAULT_C0, PhysicalParams, QuantumNumbers
from .oracle import DEFAULT_M, Grid, solve_bound_states
from .spectrum import degeneracy_partner, energy_level, energy_value, epsilon_tilde
from .verify import SUITE_NAMES, run_verification
from .wavefn import normalization_numeric, radial_wavefunction

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

_CONFIG_KEYS = {
    "alpha": float, "Z": float, "D": int, "c0": float, "units": str,
    "hbar": float, "mu": float, "e2": float,
    "nmax": int, "lmax": int, "format": str, "out": str, "pretty": bool,
    "grid_m": int, "rmax": float, "tol": float,
}


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.16e}"  # 17 significant digits, round-trip safe
    return str(x)


def load_config(path: str) -> dict:
    """Parse the `key = value` config format; unknown keys are rejected."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            caster = _CONFIG_KEYS[key]
            if caster is bool:
                out[key] = value.lower() in ("1", "true", "yes", "on")
            else:
                out[key] = caster(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hulthen",
        description="Bound states of the D-dimensional Hulthen potential: "
                    "closed forms, quantization rule, and numerical oracle.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, oracle=False):
        sp.add_argument("--config", help="key = value config file; flags override")
        sp.add_argument("--alpha", type=float, default=0.1, help="screening parameter")
        sp.add_argument("--Z", type=float, default=1.0, help="charge number")
        sp.add_argument("--D", type=int, default=3, help="spatial dimension >= 2")
        sp.add_argument("--c0", type=float, default=DEFAULT_C0,
                        help="centrifugal constant (0 for the usual approximation)")
        sp.add_argument("--units", choices=("paper", "custom"), default="paper",
                        help="paper: hbar=1, mu=1/2, e2=1")
        sp.add_argument("--hbar", type=float, default=1.0)
        sp.add_argument("--mu", type=float, default=0.5)
        sp.add_argument("--e2", type=float, default=1.0)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.add_argument("--pretty", action="store_true",
                        help="human-readable table instead of 17-digit CSV")
        if oracle:
            sp.add_argument("--grid-m", type=int, default=DEFAULT_M,
                            help="interior grid points of the eigensolver")
            sp.add_argument("--rmax", type=float, default=None,
                            help="override the automatic box size")
        sp.add_argument("--tol", type=float,
                        default=float(os.environ.get("HULTHEN_TOL", "1e-10")),
                        help="numerical tolerance (env HULTHEN_TOL)")

    sp = sub.add_parser("spectrum", help="tabulate closed-form bound levels")
    add_common(sp)
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument("--lmax", type=int, default=2)

    sp = sub.add_parser("wavefunction", help="sample a radial eigenfunction")
    add_common(sp)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--rmin", type=float, default=None)
    sp.add_argument("--rmax", type=float, default=None)
    sp.add_argument("--points", type=int, default=200)

    sp = sub.add_parser("verify", help="run the self-verification suites")
    add_common(sp)
    sp.add_argument("--suite", action="append", choices=SUITE_NAMES,
                    help="restrict to named suites (repeatable)")
    sp.add_argument("--perturb-c0", type=float, default=1.0,
                    help=argparse.SUPPRESS)  # sensitivity canary hook

    sp = sub.add_parser("compare", help="closed forms vs the finite-difference oracle")
    add_common(sp, oracle=True)
    sp.add_argument("--nmax", type=int, default=1)
    sp.add_argument("--lmax", type=int, default=2)
    sp.add_argument("--alphas", type=float, nargs="+", default=None,
                    help="alpha sweep (defaults to --alpha)")
    sp.add_argument("--modes", nargs="+",
                    default=["closed_c0", "closed_c0zero", "oracle_approx",
                             "oracle_exact"],
                    choices=["closed_c0", "closed_c0zero", "oracle_approx",
                             "oracle_exact"])

    sp = sub.add_parser("degeneracy", help="interdimensional degeneracy pairs")
    add_common(sp)
    sp.add_argument("--nmax", type=int, default=2)
    sp.add_argument("--lmax", type=int, default=2)
    sp.add_argument("--dmax", type=int, default=6)
    return parser


def make_params(args, c0=None) -> PhysicalParams:
    if args.units == "paper":
        return PhysicalParams.paper_units(args.alpha, Z=args.Z, D=args.D,
                                          c0=args.c0 if c0 is None else c0)
    return PhysicalParams(alpha=args.alpha, Z=args.Z, mu=args.mu, hbar=args.hbar,
                          e2=args.e2, D=args.D, c0=args.c0 if c0 is None else c0)


def meta_from(args, extra=None) -> dict:
    skip = {"command", "config", "out", "func"}
    meta = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    meta.update({"schema": 1, "version": __version__})
    if extra:
        meta.update(extra)
    return meta


def emit(args, meta: dict, columns: list, rows: list) -> None:
    """Write rows as CSV/JSON (or --pretty table) to stdout or --out."""
    if args.pretty:
        widths = [max(len(c), 12) for c in columns]
        lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
        for row in rows:
            lines.append("  ".join(
                (f"{v:.8g}" if isinstance(v, float) else str(v)).ljust(w)
                for v, w in zip(row, widths)))
        text = "\n".join(lines) + "\n"
    elif args.format == "json":
        payload = {"meta": meta,
                   "rows": [dict(zip(columns, row)) for row in rows]}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    p = make_params(args)
    rows = []
    for l in range(args.lmax + 1):
        for n in range(args.nmax + 1):
            q = QuantumNumbers(n, l)
            if epsilon_tilde(p, q) <= 0:
                continue
            lvl = energy_level(p, q)
            rows.append([n, l, p.D, p.alpha, p.c0, lvl.energy, lvl.eps_tilde,
                         lvl.bound])
    if not rows:
        print("warning: no bound states for this configuration", file=sys.stderr)
    emit(args, meta_from(args),
         ["n", "l", "D", "alpha", "c0", "energy", "eps_tilde", "bound"], rows)
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    import numpy as np

    p = make_params(args)
    q = QuantumNumbers(args.n, args.l)
    wf = radial_wavefunction(p, q, normalized=True)  # NotBoundError -> exit 3
    r_lo = args.rmin if args.rmin is not None else 0.05 / p.alpha
    r_hi = args.rmax if args.rmax is not None else (
        (20.0 / wf.eps_tilde + 20.0) / p.alpha)
    r = np.linspace(r_lo, r_hi, args.points)
    vals = wf(r)
    rows = [[float(ri), float(vi), float(vi * vi)] for ri, vi in zip(r, vals)]
    check = abs(wf.norm - normalization_numeric(p, q)) / wf.norm
    emit(args, meta_from(args, {"norm_closed": wf.norm,
                                "norm_numeric_reldev": check}),
         ["r", "R", "R_squared"], rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(suites=args.suite, c0=args.c0,
                              canary=args.perturb_c0)
    meta = meta_from(args)
    rows = []
    for suite in report["suites"]:
        for check in suite["checks"]:
            rows.append([suite["name"], check["name"], check["passed"],
                         check["value"], check["tolerance"]])
    if args.format == "json" and not args.pretty:
        payload = {"meta": meta, "passed": report["passed"],
                   "suites": report["suites"]}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        emit(args, meta, ["suite", "check", "passed", "value", "tolerance"], rows)
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def cmd_compare(args) -> int:
    alphas = args.alphas if args.alphas else [args.alpha]
    rows = []
    for alpha in sorted(alphas):
        base = make_params(args).with_alpha(alpha)
        for l in range(args.lmax + 1):
            oracle_cache = {}
            for mode in ("oracle_approx", "oracle_exact"):
                if mode not in args.modes:
                    continue
                grid = Grid(args.rmax, args.grid_m) if args.rmax else None
                try:
                    levels = solve_bound_states(
                        base, QuantumNumbers(0, l),
                        mode=mode.removeprefix("oracle_"),
                        count=args.nmax + 1, grid=grid, m=args.grid_m)
                except HulthenError:
                    levels = []
                oracle_cache[mode] = {lv.n: lv.energy for lv in levels}
            for n in range(args.nmax + 1):
                q = QuantumNumbers(n, l)
                if epsilon_tilde(base, q) <= 0:
                    continue
                e_c0 = energy_value(base, q)
                e_c0zero = energy_value(base.with_c0(0.0), q)
                e_approx = oracle_cache.get("oracle_approx", {}).get(n)
                e_exact = oracle_cache.get("oracle_exact", {}).get(n)
                dev_c0 = abs(e_c0 - e_exact) if e_exact is not None else None
                dev_c0zero = (abs(e_c0zero - e_exact)
                              if e_exact is not None else None)
                ratio = (dev_c0 / dev_c0zero
                         if dev_c0 is not None and dev_c0zero else None)
                rows.append([n, l, base.D, alpha, e_c0, e_c0zero, e_approx,
                             e_exact, dev_c0, dev_c0zero, ratio])
    emit(args, meta_from(args),
         ["n", "l", "D", "alpha", "E_closed_c0", "E_closed_c0zero",
          "E_oracle_approx", "E_oracle_exact", "dev_c0", "dev_c0zero",
          "improvement_ratio"], rows)
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    p0 = make_params(args)
    rows = []
    notes = 0
    for D in range(3, args.dmax + 1):
        for l in range(args.lmax + 1):
            for n in range(args.nmax + 1):
                q = QuantumNumbers(n, l)
                try:
                    q2, D2 = degeneracy_partner(q, D, +1)
                except HulthenError:
                    notes += 1
                    continue
                pa = PhysicalParams.paper_units(p0.alpha, Z=p0.Z, D=D, c0=p0.c0)
                pb = PhysicalParams.paper_units(p0.alpha, Z=p0.Z, D=D2, c0=p0.c0)
                if epsilon_tilde(pa, q) <= 0:
                    continue
                rows.append([n, l, D, q2.l, D2, energy_value(pa, q),
                             energy_value(pb, q2)])
    if notes:
        print(f"note: {notes} boundary rows omitted (D-2 < 2)", file=sys.stderr)
    emit(args, meta_from(args),
         ["n", "l", "D", "l_partner", "D_partner", "energy", "energy_partner"],
         rows)
    return EXIT_OK


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "compare": cmd_compare,
    "degeneracy": cmd_degeneracy,
}


def main(argv=None) -> int:
    parser = build_parser()
    # two-phase parse so --config supplies defaults that flags still override
    pre, _ = parser.parse_known_args(argv)
    if getattr(pre, "config", None):
        try:
            cfg = load_config(pre.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))  # exits 2
        for sub_action in parser._subparsers._group_actions:
            sp = sub_action.choices.get(pre.command)
            if sp is not None:
                known = {a.dest for a in sp._actions}
                sp.set_defaults(**{k: v for k, v in cfg.items() if k in known})
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NotBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except HulthenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
