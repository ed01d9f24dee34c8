"""Command-line front end: figure data, time scans and the validation suite.

Subcommands::

    qbm-ohmic fig1      interference exponents vs gamma*t (both preparations)
    qbm-ohmic fig2      purity vs gamma*t for a ground-state packet
    qbm-ohmic scan Q    one row per time point for quantity Q
    qbm-ohmic validate  run the oracle cross-checks; exit 2 if any fails

Parameters come from built-in defaults (hbar = m = gamma = 1, kT = 5,
sigma = lambda_th/4, d = 10 lambda_th), then ``--config`` (``key = value``
lines, ``#`` comments), then command-line flags.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass, fields

import numpy as np

from .cat import CatInit, attenuation, attenuation_shorttime, interference_measure, interference_shorttime
from .columns import COLUMNS
from .core import Prep, SimParams, fluctuation_moments
from .densmat import negativity_witness, purity, purity_shorttime
from .errors import NumericalFailure, ParameterError
from .gaussian import GaussianInit, mean_trajectory, second_moments
from .validation import ValidationConfig, run_validation

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2
QUANTITIES = ("moments", "second-moments", "interference", "attenuation", "purity", "witness")


class UsageError(Exception):
    pass


@dataclass
class ScenarioConfig:
    m: float = 1.0
    gamma: float = 1.0
    kT: float = 5.0
    hbar: float = 1.0
    state: str = "gaussian"
    x0: float = 0.0
    d: float | None = None  # default 10 lambda_th
    sigma: float | None = None  # default lambda_th / 4
    prep: str = "zero"
    t0: float | None = None
    t1: float | None = None
    n: int | None = None
    spacing: str = "linear"
    out: str | None = None

    @property
    def params(self) -> SimParams:
        return SimParams(m=self.m, gamma=self.gamma, kT=self.kT, hbar=self.hbar)

    def resolved_sigma(self) -> float:
        return self.sigma if self.sigma is not None else self.params.lambda_th / 4.0

    def resolved_d(self) -> float:
        return self.d if self.d is not None else 10.0 * self.params.lambda_th

    def init(self):
        if self.state == "cat":
            return CatInit(d=self.resolved_d(), sigma=self.resolved_sigma(), prep=Prep(self.prep))
        return GaussianInit(x0=self.x0, sigma=self.resolved_sigma(), prep=Prep(self.prep))

    def times(self, t0: float, t1: float, n: int) -> np.ndarray:
        t0 = t0 if self.t0 is None else self.t0
        t1 = t1 if self.t1 is None else self.t1
        n = n if self.n is None else self.n
        if n < 2 or t0 < 0 or not t1 > t0:
            raise UsageError(f"need n >= 2 and 0 <= t0 < t1 (got t0={t0}, t1={t1}, n={n})")
        if self.spacing == "log":
            if t0 <= 0:
                raise UsageError("log spacing needs t0 > 0")
            return np.geomspace(t0, t1, n)
        if self.spacing != "linear":
            raise UsageError(f"unknown spacing {self.spacing!r}")
        return np.linspace(t0, t1, n)


_TYPES = {f.name: f.type for f in fields(ScenarioConfig)}


def _coerce(key: str, raw: str):
    kind = _TYPES[key]
    if "int" in kind:
        return int(raw)
    if "float" in kind:
        return float(raw)
    return raw


def read_config(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = (s.strip() for s in line.split("=", 1))
            if key not in _TYPES:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                values[key] = _coerce(key, raw)
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: bad value for {key}: {raw!r}") from exc
    return values


def build_config(args: argparse.Namespace) -> ScenarioConfig:
    values = read_config(args.config) if args.config else {}
    for key in _TYPES:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    cfg = ScenarioConfig(**values)
    if cfg.state not in ("gaussian", "cat"):
        raise UsageError(f"unknown state {cfg.state!r}")
    try:
        Prep(cfg.prep)
        cfg.params
    except (ValueError, ParameterError) as exc:
        raise UsageError(str(exc)) from exc
    return cfg


def write_csv(header, rows, out: str | None) -> None:
    """Write rows with floats in shortest round-trip form; byte-identical for identical input."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
    text = buf.getvalue()
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def fig1_rows(cfg: ScenarioConfig):
    p = cfg.params
    sigma, d = cfg.resolved_sigma(), cfg.resolved_d()
    scale = p.lambda_th**2 / d**2
    zero, bath = CatInit(d, sigma, Prep.ZERO), CatInit(d, sigma, Prep.BATH)
    rows = []
    for gt in cfg.times(0.0, 3.0, 200):
        t = gt / p.gamma
        rows.append((gt, interference_measure(t, p, zero).a_of_t * scale, interference_measure(t, p, bath).a_of_t * scale))
    return ["gamma_t", "A0_scaled", "AT_scaled"], rows


def fig2_rows(cfg: ScenarioConfig):
    p = cfg.params
    init = GaussianInit(0.0, cfg.resolved_sigma(), Prep(cfg.prep))
    return ["gamma_t", "purity"], [(gt, purity(gt / p.gamma, p, init)) for gt in cfg.times(0.0, 0.5, 400)]


def scan_rows(cfg: ScenarioConfig, quantity: str):
    p = cfg.params
    init = cfg.init()
    ts = cfg.times(0.0, 3.0 / p.gamma, 200)
    if quantity == "moments":
        header = ["t", "x2", "xxd", "xd2"]
        rows = [(t, *(lambda f: (f.x2, f.xxd, f.xd2))(fluctuation_moments(t, p))) for t in ts]
    elif quantity == "second-moments":
        header = ["t", "mean_x", "mean_p", "A11", "A12", "A22", "det"]
        x0 = getattr(init, "x0", 0.0)
        rows = []
        for t in ts:
            sm = second_moments(t, p, init)
            rows.append((t, *mean_trajectory(t, p, x0), sm.a11, sm.a12, sm.a22, sm.det))
    elif quantity in ("interference", "attenuation"):
        if not isinstance(init, CatInit):
            raise UsageError(f"{quantity} scan needs --state cat")
        if quantity == "interference":
            header = ["t", "A", "A_short", "phi_q", "phi_p"]
            rows = []
            for t in ts:
                mu = interference_measure(t, p, init)
                rows.append((t, mu.a_of_t, interference_shorttime(t, p, init), mu.phi_q, mu.phi_p))
        else:
            header = ["t", "attenuation", "attenuation_short"]
            rows = [(t, attenuation(t, p, init), attenuation_shorttime(t, p, init)) for t in ts]
    elif quantity == "purity":
        if isinstance(init, CatInit):
            raise UsageError("closed-form purity is for single packets (--state gaussian)")
        header = ["t", "purity", "purity_short"]
        rows = [(t, purity(t, p, init), purity_shorttime(t, p, init.sigma)) for t in ts]
    elif quantity == "witness":
        sigma, prep = cfg.resolved_sigma(), Prep(cfg.prep)
        header = ["t", "witness", "purity", "det_ratio"]
        g = GaussianInit(0.0, sigma, prep)
        rows = []
        for t in ts:
            rows.append(
                (t, negativity_witness(t, p, sigma, prep), purity(t, p, g), 4.0 * second_moments(t, p, g).det / p.hbar**2)
            )
    else:
        raise UsageError(f"unknown quantity {quantity!r}; choose from {', '.join(QUANTITIES)}")
    assert all(h in COLUMNS for h in header)
    return header, rows


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def create_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("scenario")
    g.add_argument("--m", type=float, help="mass (default 1)")
    g.add_argument("--gamma", type=float, help="friction rate (default 1)")
    g.add_argument("--kT", type=float, help="bath thermal energy (default 5)")
    g.add_argument("--hbar", type=float, help="reduced Planck constant (default 1)")
    g.add_argument("--sigma", type=float, help="packet rms width (default lambda_th/4)")
    g.add_argument("--d", type=float, help="cat separation (default 10 lambda_th)")
    g.add_argument("--x0", type=float, help="single-packet centre (default 0)")
    g.add_argument("--prep", choices=[p.value for p in Prep], help="initial preparation (default zero)")
    g.add_argument("--state", choices=["gaussian", "cat"], help="state for scans (default gaussian)")
    g.add_argument("--t0", type=float, help="first time point")
    g.add_argument("--t1", type=float, help="last time point")
    g.add_argument("--n", type=int, help="number of time points")
    g.add_argument("--spacing", choices=["linear", "log"], help="time-grid spacing (default linear)")
    g.add_argument("--out", help="output path (default stdout)")
    g.add_argument("--config", help="key = value configuration file")

    parser = _Parser(prog="qbm-ohmic", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("fig1", parents=[common], help="interference exponents (time flags in units of 1/gamma)")
    sub.add_parser("fig2", parents=[common], help="purity of a single packet (time flags in units of 1/gamma)")
    scan = sub.add_parser("scan", parents=[common], help="tabulate a quantity over time")
    scan.add_argument("quantity", help=f"one of: {', '.join(QUANTITIES)}")
    val = sub.add_parser("validate", parents=[common], help="run the oracle cross-checks")
    val.add_argument("--skip", action="append", default=[], help="skip a check group (closed, quadrature, fp) or a check name")
    val.add_argument("--fp-nq", type=int, default=256, help="Fokker-Planck grid points in q")
    val.add_argument("--fp-np", type=int, default=256, help="Fokker-Planck grid points in p")
    return parser


def cmd_validate(cfg: ScenarioConfig, args) -> int:
    vcfg = ValidationConfig(cfg.params, cfg.resolved_sigma(), cfg.resolved_d(), fp_nq=args.fp_nq, fp_np=args.fp_np)
    results = run_validation(vcfg, skip=args.skip)
    lines = ["check,error,tolerance,status", *(r.line() for r in results)]
    text = "\n".join(lines) + "\n"
    if cfg.out and cfg.out != "-":
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERICAL


def main(argv=None) -> int:
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = build_config(args)
        if args.command == "validate":
            return cmd_validate(cfg, args)
        if args.command == "fig1":
            header, rows = fig1_rows(cfg)
        elif args.command == "fig2":
            header, rows = fig2_rows(cfg)
        else:
            header, rows = scan_rows(cfg, args.quantity)
        write_csv(header, rows, cfg.out)
    except (UsageError, ParameterError, OSError) as exc:
        print(f"qbm-ohmic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"qbm-ohmic: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
