"""Command-line driver: validate models, solve spectra, and emit result files.

Commands (all take ``--model <path>``, a JSON model config):

  validate   check the model invariants; exit 0 iff valid
  spectrum   scan for eigenvalues; write <stem>_spectrum.json/.csv
  verify     recognize a closed-form family and cross-check it against the scan
  simulate   evolve the initial state to time t; write the distribution CSV,
             plus the running time average when --T is given
  limitdist  scan, then write the time-averaged limit distribution CSV

Exit codes: 0 ok, 1 invalid model, 2 parse error, 3 no matching closed form,
4 closed form and scan disagree.

Model files may carry an ``initial_state`` key: a list of ``[x, [re, im],
[re, im]]`` triples.  States off unit norm by more than 1e-12 are normalized
with a warning.  All outputs are plain JSON/CSV with fixed formatting, so a
rerun with the same config and seed is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import closed_forms, dynamics, spectrum
from .catalog import caption_initial_state
from .model import ModelSpec, StateVector, load_model, validate

EXIT_OK = 0
EXIT_INVALID_MODEL = 1
EXIT_PARSE_ERROR = 2
EXIT_NO_PROPOSITION = 3
EXIT_ORACLE_DISAGREEMENT = 4

#: closed form vs scan agreement threshold (radians)
VERIFY_TOL = 1e-7


@dataclass
class RunConfig:
    model_path: Path
    grid: int = 16384
    tol: float | None = None  # scan residual tol (default 1e-10) or, for
    # validate, the unitarity tolerance (default 1e-12)
    t: int = 70
    T: int | None = None
    window: tuple[int, int] | None = None
    out_dir: Path = Path(".")
    seed: int = 0

    @property
    def scan_tol(self) -> float:
        return 1e-10 if self.tol is None else self.tol


def _parse_window(text: str) -> tuple[int, int]:
    # windows with a negative lower edge are passed as --window=-15:15
    lo_s, _, hi_s = text.strip().partition(":")
    lo, hi = int(lo_s), int(hi_s)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qws", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "spectrum", "verify", "simulate", "limitdist"):
        p = sub.add_parser(name)
        p.add_argument("--model", required=True, type=Path)
        p.add_argument("--grid", type=int, default=16384)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--t", type=int, default=70)
        p.add_argument("--T", type=int, default=None)
        p.add_argument("--window", type=_parse_window, default=None)
        p.add_argument("--out", type=Path, default=Path("."))
        p.add_argument("--seed", type=int, default=0)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        model_path=args.model,
        grid=args.grid,
        tol=args.tol,
        t=args.t,
        T=args.T,
        window=args.window,
        out_dir=args.out,
        seed=args.seed,
    )


class _ParseError(Exception):
    pass


class _InvalidModel(Exception):
    pass


def _load(config: RunConfig) -> tuple[ModelSpec, StateVector]:
    """Parse the model file; returns (model, initial state)."""
    try:
        with open(config.model_path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        spec = load_model(config.model_path)
        state = _initial_state(raw)
    except (OSError, json.JSONDecodeError, KeyError, IndexError, TypeError, ValueError) as exc:
        raise _ParseError(f"error reading {config.model_path}: {exc}") from exc
    return spec, state


def _initial_state(raw: dict) -> StateVector:
    triples = raw.get("initial_state")
    if not triples:
        return caption_initial_state()
    points = [
        (int(x), complex(left[0], left[1]), complex(right[0], right[1]))
        for x, left, right in triples
    ]
    state = StateVector.from_points(points)
    norm = math.sqrt(state.norm_sq())
    if abs(norm - 1.0) > 1e-12:
        print(f"warning: initial state norm {norm:.12g} != 1; normalizing", file=sys.stderr)
        state = state.normalized()
    return state


def _angle_str(lam: float) -> str:
    return f"{lam:.12g}"


def cmd_validate(config: RunConfig) -> int:
    spec, _ = _load(config)
    violations = validate(spec) if config.tol is None else validate(spec, tol=config.tol)
    if violations:
        for v in violations:
            print(f"violation: {v}")
        return EXIT_INVALID_MODEL
    print("model valid")
    return EXIT_OK


def _checked_model(config: RunConfig) -> tuple[ModelSpec, StateVector]:
    spec, state = _load(config)
    violations = validate(spec)
    if violations:
        for v in violations:
            print(f"violation: {v}", file=sys.stderr)
        raise _InvalidModel()
    return spec, state


def cmd_spectrum(config: RunConfig) -> int:
    spec, _ = _checked_model(config)
    report = spectrum.scan_spectrum(spec, grid=config.grid, tol=config.scan_tol)
    stem = config.model_path.stem
    config.out_dir.mkdir(parents=True, exist_ok=True)
    json_path = config.out_dir / f"{stem}_spectrum.json"
    csv_path = config.out_dir / f"{stem}_spectrum.csv"
    payload = spectrum.report_to_json_dict(report)
    payload["seed"] = config.seed
    json_path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    csv_path.write_text("\n".join(spectrum.report_csv_lines(report)) + "\n", encoding="utf-8")
    if not report.eigenpoints:
        print("no eigenvalues: model does not localize")
    else:
        print(f"{len(report.eigenpoints)} eigenvalues")
        for p in report.eigenpoints:
            print(f"  lambda = {_angle_str(p.lam)}  residual = {p.residual:.3e}")
    print(f"wrote {json_path} and {csv_path}")
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    spec, _ = _checked_model(config)
    try:
        name, closed = closed_forms.match_proposition(spec)
    except closed_forms.NoMatchingProposition as exc:
        print(f"no matching closed form: {exc}")
        return EXIT_NO_PROPOSITION
    report = spectrum.scan_spectrum(spec, grid=config.grid, tol=config.scan_tol)
    scanned = [p.lam for p in report.eigenpoints]
    print(f"matched family: {name} (branch {closed.case_label})")
    ok = len(scanned) == len(closed.eigen_lambdas)
    two_pi = 2.0 * math.pi
    for lam in closed.eigen_lambdas:
        best = min(
            (min(abs(s - lam) % two_pi, two_pi - abs(s - lam) % two_pi) for s in scanned),
            default=math.inf,
        )
        agree = best <= VERIFY_TOL
        ok = ok and agree
        print(
            f"  closed form lambda = {_angle_str(lam)}  "
            f"{'matched' if agree else 'MISSING'} (nearest scan offset {best:.3e})"
        )
    extras = len(scanned) - len(closed.eigen_lambdas)
    if extras > 0:
        print(f"  scan found {extras} extra eigenvalue(s)")
    if ok:
        print(f"agreement: {len(closed.eigen_lambdas)}/{len(closed.eigen_lambdas)} eigenvalues")
        return EXIT_OK
    print("closed form and scan disagree")
    return EXIT_ORACLE_DISAGREEMENT


def cmd_simulate(config: RunConfig) -> int:
    spec, state = _checked_model(config)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    stem = config.model_path.stem
    final = dynamics.evolve(spec, state, config.t)
    mu = dynamics.distribution(final, t=config.t)
    if config.window is not None:
        lo, hi = config.window
        mu = dynamics.DistributionSeries(
            lo, [mu.value_at(x) for x in range(lo, hi + 1)], mu.kind, mu.t_or_T
        )
    mu_path = config.out_dir / f"{stem}_mu_t{config.t}.csv"
    dynamics.write_distribution_csv(mu, mu_path)
    print(f"t = {config.t}: total probability {mu.total():.12g}")
    print(f"wrote {mu_path}")
    if config.T is not None:
        window = config.window or (final.lo, final.hi)
        avg = dynamics.time_average(spec, state, config.T, window)
        avg_path = config.out_dir / f"{stem}_avg_T{config.T}.csv"
        dynamics.write_distribution_csv(avg, avg_path)
        print(f"wrote {avg_path}")
    return EXIT_OK


def cmd_limitdist(config: RunConfig) -> int:
    spec, state = _checked_model(config)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    stem = config.model_path.stem
    report = spectrum.scan_spectrum(spec, grid=config.grid, tol=config.scan_tol)
    window = config.window or (-50, 50)
    nu = dynamics.limit_distribution(spec, state, report, window)
    nu_path = config.out_dir / f"{stem}_limit.csv"
    dynamics.write_distribution_csv(nu, nu_path)
    print(f"{len(report.eigenpoints)} eigenvalues; limit mass on window {nu.total():.12g}")
    print(f"wrote {nu_path}")
    return EXIT_OK


_COMMANDS = {
    "validate": cmd_validate,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "limitdist": cmd_limitdist,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = _config_from_args(args)
    try:
        return _COMMANDS[args.command](config)
    except _InvalidModel:
        return EXIT_INVALID_MODEL
    except _ParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
