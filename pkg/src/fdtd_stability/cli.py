"""Batch front-end: analyze points, scan ranges, run simulations, verify
analyzer against simulator, and reproduce the reference stability tables.

Configuration is a flat ``key = value`` text file ('#' starts a comment);
command-line flags override file keys.  All reports are CSV with
full-precision scientific notation so every value round-trips exactly.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from . import __version__
from .analyzer import (
    classify_at_q,
    classify_point,
    classify_point_2d,
    reproduce_argument_table,
    stability_boundary_k,
    worst_case_verdict,
)
from .errors import InvalidInputError, NumericalFailureError
from .polyloc import max_root_modulus
from .schemes import (
    EPS0,
    MU0,
    MediumModel,
    Scheme,
    Wavenumber,
    char_poly_2d,
    char_poly_closed,
    courant_q,
    dimensionless_params,
)
from .simulator import empirical_verdict, linear_fit_residual, run_growth

OUTPUT_DIR_ENV = "FDTD_STABILITY_OUT"

VERDICT_HEADER = ("scheme", "eps_inf", "eps_s", "t_r_or_omega1", "nu", "k", "h",
                  "xi", "q", "stable", "argument", "max_root_modulus")
GROWTH_HEADER = ("step", "norm", "ratio")
VERIFY_HEADER = ("scheme", "medium", "dim", "polarization", "k", "h", "xi_x",
                 "xi_y", "q", "q_boundary", "in_margin_band", "analytic_stable",
                 "empirical_stable", "agree", "regime")

# |q - q_boundary| below this is the declared margin band where finite runs
# cannot resolve growth; disagreements inside it are reported, not fatal.
VERIFY_MARGIN_BAND = 1e-3


@dataclass(frozen=True)
class RunConfig:
    """Validated run description; every command reads a subset of fields."""

    command: str
    scheme: str | None = None
    eps_inf: float | None = None
    eps_s: float | None = None
    t_r: float | None = None
    omega1: float | None = None
    nu: float | None = None
    k: float | None = None
    h: float | None = None
    h_y: float | None = None
    dim: int = 1
    polarization: str | None = None
    xi: float | None = None
    xi_y: float | None = None
    steps: int = 1000
    grid: int = 64
    output: str | None = None
    empirical: bool = False
    vary: str | None = None
    start: float | None = None
    stop: float | None = None
    count: int = 33
    samples: int = 0
    seed: int = 0


_FLOAT_KEYS = {"eps_inf", "eps_s", "t_r", "omega1", "nu", "k", "h", "h_y",
               "xi", "xi_y", "start", "stop"}
_INT_KEYS = {"dim", "steps", "grid", "count", "samples", "seed"}
_BOOL_KEYS = {"empirical"}
_STR_KEYS = {"command", "scheme", "polarization", "output", "vary"}
_ALL_KEYS = _FLOAT_KEYS | _INT_KEYS | _BOOL_KEYS | _STR_KEYS


def parse_config(text: str) -> RunConfig:
    """Parse a flat key = value document into a RunConfig."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidInputError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _ALL_KEYS:
            raise InvalidInputError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise InvalidInputError(f"line {lineno}: duplicate key {key!r}")
        try:
            if key in _FLOAT_KEYS:
                values[key] = float(val)
            elif key in _INT_KEYS:
                values[key] = int(val)
            elif key in _BOOL_KEYS:
                if val not in ("true", "false"):
                    raise ValueError(val)
                values[key] = val == "true"
            else:
                values[key] = val
        except ValueError as exc:
            raise InvalidInputError(
                f"line {lineno}: bad value for {key!r}: {val!r}") from exc
    if "command" not in values:
        raise InvalidInputError("missing required key 'command'")
    return RunConfig(**values)  # type: ignore[arg-type]


def serialize_config(cfg: RunConfig) -> str:
    """Inverse of parse_config: emits every non-None field."""
    lines = []
    for f in fields(RunConfig):
        v = getattr(cfg, f.name)
        if v is None:
            continue
        if isinstance(v, bool):
            v = "true" if v else "false"
        elif isinstance(v, float):
            v = format(v, ".17g")
        lines.append(f"{f.name} = {v}")
    return "\n".join(lines) + "\n"


def _fmt_csv(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".16e")
    return str(v)


def emit_csv(rows, path: str, header) -> str:
    """Write rows as UTF-8 CSV with a header; floats carry 17 significant
    digits so they parse back to the exact double.  Returns the final path
    (after any output-directory override)."""
    out_dir = os.environ.get(OUTPUT_DIR_ENV)
    if out_dir and not os.path.isabs(path):
        path = os.path.join(out_dir, path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt_csv(v) for v in row) + "\n")
    except OSError as exc:
        raise InvalidInputError(f"cannot write {path!r}: {exc}") from exc
    return path


def _medium_from_config(cfg: RunConfig) -> MediumModel:
    if cfg.scheme is None:
        raise InvalidInputError("missing field: scheme")
    scheme = Scheme.from_name(cfg.scheme)
    for name in ("eps_inf", "eps_s"):
        if getattr(cfg, name) is None:
            raise InvalidInputError(f"missing field: {name}")
    if scheme.kind == "debye":
        if cfg.t_r is None:
            raise InvalidInputError("missing field: t_r (Debye schemes)")
        return MediumModel.debye(cfg.eps_inf, cfg.eps_s, cfg.t_r)
    if cfg.omega1 is None:
        raise InvalidInputError("missing field: omega1 (Lorentz schemes)")
    return MediumModel.lorentz(cfg.eps_inf, cfg.eps_s, cfg.omega1, cfg.nu or 0.0)


def _medium_scale(medium: MediumModel) -> float:
    return medium.t_r if medium.kind == "debye" else medium.omega1


def _verdict_row(scheme: Scheme, medium: MediumModel, k: float, h: float,
                 xi: float | None, q: float, stable: bool, argument: str,
                 root_mod: float):
    return (scheme.value, medium.eps_inf, medium.eps_s, _medium_scale(medium),
            medium.nu or 0.0, k, h, xi, q, stable, argument, root_mod)


def _require(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise InvalidInputError(f"missing field: {name}")


def _cmd_analyze(cfg: RunConfig) -> int:
    _require(cfg, "k", "h")
    medium = _medium_from_config(cfg)
    scheme = Scheme.from_name(cfg.scheme)
    params = dimensionless_params(medium, cfg.k, cfg.h)
    xi = cfg.xi if cfg.xi is not None else math.pi
    if cfg.dim == 1:
        wn = Wavenumber(xi)
        verdict = classify_point(scheme, params, wn)
        q = courant_q(params, wn)
        poly = char_poly_closed(scheme, params, q)
    else:
        if cfg.polarization not in ("te", "tm"):
            raise InvalidInputError("2D analysis needs polarization te or tm")
        wn = Wavenumber(xi, cfg.xi_y if cfg.xi_y is not None else xi,
                        h_x=cfg.h, h_y=cfg.h_y if cfg.h_y else cfg.h)
        verdict = classify_point_2d(scheme, params, wn, cfg.polarization)
        q = courant_q(params, wn)
        poly = char_poly_2d(scheme, params, wn, cfg.polarization)
    root_mod = max_root_modulus(poly)
    print(f"{scheme.value}: {'stable' if verdict.stable else 'unstable'} "
          f"[{verdict.argument.value}] at xi={xi:.6g}, q={q:.6g} "
          f"(max root modulus {root_mod:.12g})")
    print(f"  {verdict.detail}")
    if cfg.empirical:
        rep = run_growth(scheme, medium, cfg.k, cfg.h, _harmonic_wn(wn, cfg.grid),
                         max(cfg.steps, 100), polarization=cfg.polarization,
                         grid=cfg.grid if cfg.dim == 1 else (cfg.grid, cfg.grid),
                         h_y=cfg.h_y)
        emp = empirical_verdict(rep)
        print(f"  empirical: {'stable' if emp.stable else 'unstable'} - {emp.detail}")
    if cfg.output:
        row = _verdict_row(scheme, medium, cfg.k, cfg.h, xi, q, verdict.stable,
                           verdict.argument.value, root_mod)
        path = emit_csv([row], cfg.output, VERDICT_HEADER)
        print(f"  wrote {path}")
    return 0


def _harmonic_wn(wn: Wavenumber, n: int) -> Wavenumber:
    """Snap a wavenumber onto the nearest exact grid harmonic."""
    def snap(xi):
        return 2.0 * math.pi * round(xi * n / (2.0 * math.pi)) / n
    if wn.is_2d:
        return Wavenumber(snap(wn.xi_x), snap(wn.xi_y), h_x=wn.h_x, h_y=wn.h_y)
    return Wavenumber(snap(wn.xi_x))


def _cmd_scan(cfg: RunConfig) -> int:
    _require(cfg, "vary", "start", "stop")
    medium = _medium_from_config(cfg)
    scheme = Scheme.from_name(cfg.scheme)
    if cfg.vary not in ("k", "xi", "q"):
        raise InvalidInputError("vary must be one of k, xi, q")
    grid = np.linspace(cfg.start, cfg.stop, cfg.count)
    rows = []
    for value in grid:
        if cfg.vary == "k":
            k = float(value)
            _require(cfg, "h")
            xi = cfg.xi if cfg.xi is not None else math.pi
        elif cfg.vary == "xi":
            _require(cfg, "k", "h")
            k, xi = cfg.k, float(value)
        else:
            _require(cfg, "k", "h")
            k, xi = cfg.k, None
        params = dimensionless_params(medium, k, cfg.h)
        if cfg.vary == "q":
            q = float(value)
            verdict = classify_at_q(scheme, params, q)
            lam = params.lam
            arg = math.sqrt(q) / (2.0 * lam) if q >= 0 else None
            xi_out = 2.0 * math.asin(arg) if arg is not None and arg <= 1 else None
        else:
            wn = Wavenumber(xi)
            verdict = classify_point(scheme, params, wn)
            q = courant_q(params, wn)
            xi_out = xi
        poly = char_poly_closed(scheme, params, q)
        rows.append(_verdict_row(scheme, medium, k, cfg.h, xi_out, q,
                                 verdict.stable, verdict.argument.value,
                                 max_root_modulus(poly)))
    n_stable = sum(1 for r in rows if r[9])
    print(f"scanned {len(rows)} points varying {cfg.vary}: "
          f"{n_stable} stable, {len(rows) - n_stable} unstable")
    if cfg.output:
        path = emit_csv(rows, cfg.output, VERDICT_HEADER)
        print(f"wrote {path}")
    return 0


def _cmd_simulate(cfg: RunConfig) -> int:
    _require(cfg, "k", "h")
    medium = _medium_from_config(cfg)
    scheme = Scheme.from_name(cfg.scheme)
    xi = cfg.xi if cfg.xi is not None else math.pi
    if cfg.dim == 1:
        wn = _harmonic_wn(Wavenumber(xi), cfg.grid)
        grid = cfg.grid
    else:
        if cfg.polarization not in ("te", "tm"):
            raise InvalidInputError("2D simulation needs polarization te or tm")
        wn = _harmonic_wn(Wavenumber(xi, cfg.xi_y if cfg.xi_y is not None else xi,
                                     h_x=cfg.h, h_y=cfg.h_y if cfg.h_y else cfg.h),
                          cfg.grid)
        grid = (cfg.grid, cfg.grid)
    rep = run_growth(scheme, medium, cfg.k, cfg.h, wn, max(cfg.steps, 100),
                     polarization=cfg.polarization, grid=grid, h_y=cfg.h_y)
    emp = empirical_verdict(rep)
    print(f"{scheme.value}: {rep.verdict} after {rep.steps} steps "
          f"(per-step factor {rep.per_step_factor:.8f}, "
          f"max norm ratio {rep.max_norm_ratio:.6g})")
    print(f"  {emp.detail}")
    if cfg.output:
        rows = [(i, float(n), float(n / rep.norms[0]))
                for i, n in enumerate(rep.norms)]
        path = emit_csv(rows, cfg.output, GROWTH_HEADER)
        print(f"  wrote {path}")
    return 0


def _cmd_tables(cfg: RunConfig) -> int:
    schemes = [Scheme.from_name(cfg.scheme)] if cfg.scheme else list(Scheme)
    failures = 0
    for scheme in schemes:
        rows = reproduce_argument_table(scheme)
        regimes = {r.regime for r in rows}
        bad = [r for r in rows if not r.ok]
        failures += len(bad)
        print(f"{scheme.value}: {len(regimes)} regimes, {len(rows)} points, "
              f"{len(bad)} mismatches")
        for r in rows:
            mark = "ok " if r.ok else "BAD"
            print(f"  [{mark}] {r.regime:58s} expected="
                  f"{'stable' if r.expected_stable else 'unstable':8s} "
                  f"computed={'stable' if r.verdict.stable else 'unstable':8s} "
                  f"[{r.verdict.argument.value}] ({r.point})")
            if r.note:
                print(f"        note: {r.note}")
    return 1 if failures else 0


@dataclass(frozen=True)
class _VerifyPoint:
    scheme: Scheme
    medium: MediumModel
    medium_name: str
    k: float
    h: float
    dim: int
    polarization: str | None
    m_x: int
    m_y: int
    grid: int
    steps: int
    q_boundary: float
    regime: str


def _verify_media(kind: str) -> list[tuple[str, MediumModel]]:
    if kind == "debye":
        return [("water", MediumModel.debye(1.8, 81.0, 9.4e-12)),
                ("foam", MediumModel.debye(1.01, 1.16, 6.497e-10))]
    return [("optical-a", MediumModel.lorentz(1.0, 2.25, 4e16, 0.56e16)),
            ("radio-b", MediumModel.lorentz(1.5, 3.0, 2 * math.pi * 5e10, 1e10)),
            ("harmonic", MediumModel.lorentz(1.0, 2.25, 4e16, 0.0))]


_Q_LIMIT = {
    Scheme.DEBYE_JOSEPH: 4.0,
    Scheme.DEBYE_YOUNG: 4.0,
    Scheme.LORENTZ_JOSEPH: 2.0,
    Scheme.LORENTZ_KASHIWA: 4.0,
    Scheme.LORENTZ_YOUNG: 2.0,
}


def build_verify_plan(grid: int = 24, steps: int = 700) -> list[_VerifyPoint]:
    """Deterministic stratified sample plan: every scheme, 1D and both 2D
    polarizations, stable / unstable / near-boundary regimes, plus the
    degenerate-resonance instabilities of the harmonic Lorentz schemes."""
    plan: list[_VerifyPoint] = []
    geometries = [(1, None), (2, "te"), (2, "tm")]
    for scheme in Scheme:
        q_lim = _Q_LIMIT[scheme]
        for name, medium in _verify_media(scheme.kind):
            # Space scale chosen so the normalized oscillator frequency near
            # the q boundary is O(0.1): a vanishing omega leaves the
            # polarization eigenvalues nearly coincident with 1 and the
            # bounded transient exceeds any finite growth threshold.
            if scheme.kind == "debye":
                h_ref = 1e-5
            else:
                h_ref = medium.c_inf * math.sqrt(0.6) / medium.omega1
            for dim, pol in geometries:
                ndir = 1 if dim == 1 else 2
                for frac, regime in ((0.35, "stable"), (0.70, "stable"),
                                     (1.0 - 2.0e-4, "near-boundary"),
                                     (1.25, "unstable"), (1.60, "unstable")):
                    if scheme is Scheme.LORENTZ_YOUNG and frac > 1.0:
                        # The Young scheme's damped boundary is soft; drive
                        # it clearly past the limit instead.
                        frac = 1.0 + 0.9 * (frac - 1.0) + 0.8
                    elif scheme is Scheme.LORENTZ_JOSEPH and frac > 1.0:
                        # Weakly damped media leave only a ~1e-4 per-step
                        # growth just past q = 2; use stronger violations.
                        frac += 0.35
                    q_tot = frac * q_lim
                    lam_dir = math.sqrt(q_tot / (4.0 * ndir))
                    k = lam_dir * h_ref / medium.c_inf
                    plan.append(_VerifyPoint(
                        scheme, medium, name, k, h_ref, dim, pol,
                        m_x=grid // 2, m_y=grid // 2 if dim == 2 else 0,
                        grid=grid, steps=steps, q_boundary=q_lim,
                        regime=regime))
    # Degenerate-resonance points (harmonic media with eps_s = eps_inf).
    resonant = MediumModel.lorentz(1.0, 1.0, 4e16, 0.0)
    w = 0.5
    k = math.sqrt(2.0 * w) / resonant.omega1
    res_cases = [
        (Scheme.LORENTZ_JOSEPH, 2.0 * w / (1.0 + w), (1, None)),
        (Scheme.LORENTZ_JOSEPH, 2.0 * w / (1.0 + w), (2, "tm")),
        (Scheme.LORENTZ_YOUNG, 2.0 * w, (1, None)),
        (Scheme.LORENTZ_KASHIWA, 2.0 * w / (1.0 + 0.5 * w), (1, None)),
    ]
    for scheme, q_res, (dim, pol) in res_cases:
        m, n = 9, 64
        xi = 2.0 * math.pi * m / n
        ndir = 1 if dim == 1 else 2
        lam = math.sqrt(q_res / (ndir * 4.0 * math.sin(xi / 2.0) ** 2))
        h = resonant.c_inf * k / lam
        plan.append(_VerifyPoint(scheme, resonant, "resonant", k, h, dim, pol,
                                 m_x=m, m_y=m if dim == 2 else 0, grid=n,
                                 steps=4000, q_boundary=q_res,
                                 regime="resonance"))
        # A harmonic point safely below the degenerate value stays bounded.
        lam_s = math.sqrt(0.25 * q_res / (ndir * 4.0 * math.sin(xi / 2.0) ** 2))
        h_s = resonant.c_inf * k / lam_s
        plan.append(_VerifyPoint(scheme, resonant, "resonant", k, h_s, dim, pol,
                                 m_x=m, m_y=m if dim == 2 else 0, grid=n,
                                 steps=steps, q_boundary=q_res,
                                 regime="stable"))
    return plan


def run_verify(plan: list[_VerifyPoint]):
    """Classify and simulate every plan point; returns (rows, disagreements
    outside the margin band).

    When the two referees disagree the run is repeated with four times the
    steps (twice at most): weak instabilities and slow bounded beats both
    need longer horizons than the default probe.  The analytic verdict
    never changes; only the empirical evidence grows.
    """
    rows = []
    hard_disagreements = 0
    for pt in plan:
        params = dimensionless_params(pt.medium, pt.k, pt.h)
        xi_x = 2.0 * math.pi * pt.m_x / pt.grid
        if pt.dim == 1:
            wn = Wavenumber(xi_x)
            verdict = classify_point(pt.scheme, params, wn)
            grid = pt.grid
        else:
            xi_y = 2.0 * math.pi * pt.m_y / pt.grid
            wn = Wavenumber(xi_x, xi_y, h_x=pt.h, h_y=pt.h)
            verdict = classify_point_2d(pt.scheme, params, wn, pt.polarization)
            grid = (pt.grid, pt.grid)
        q = courant_q(params, wn)
        steps = pt.steps
        for _ in range(3):
            rep = run_growth(pt.scheme, pt.medium, pt.k, pt.h, wn, steps,
                             polarization=pt.polarization, grid=grid)
            emp = empirical_verdict(rep)
            if emp.stable == verdict.stable:
                break
            steps *= 4
        in_band = abs(q - pt.q_boundary) < VERIFY_MARGIN_BAND
        agree = verdict.stable == emp.stable
        if not agree and not in_band:
            hard_disagreements += 1
        rows.append((pt.scheme.value, pt.medium_name, pt.dim,
                     pt.polarization or "", pt.k, pt.h, wn.xi_x,
                     wn.xi_y if pt.dim == 2 else None, q, pt.q_boundary,
                     in_band, verdict.stable, emp.stable, agree, pt.regime))
    return rows, hard_disagreements


def _cmd_verify(cfg: RunConfig) -> int:
    plan = build_verify_plan()
    if cfg.samples and cfg.samples < len(plan):
        stride = max(1, len(plan) // cfg.samples)
        plan = plan[::stride][:cfg.samples]
    rows, hard = run_verify(plan)
    agree = sum(1 for r in rows if r[13])
    in_band = sum(1 for r in rows if r[10])
    print(f"verified {len(rows)} points: {agree} agree, "
          f"{len(rows) - agree} disagree ({in_band} inside the margin band, "
          f"{hard} hard disagreements)")
    if cfg.output:
        path = emit_csv(rows, cfg.output, VERIFY_HEADER)
        print(f"wrote {path}")
    return 1 if hard else 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fdtd-stability",
        description="Stability laboratory for FD-TD schemes in Debye and "
                    "Lorentz dispersive media.")
    parser.add_argument("--version", action="version",
                        version=f"fdtd-stability {__version__} "
                                f"(eps0={EPS0!r} F/m, mu0={MU0!r} H/m)")
    sub = parser.add_subparsers(dest="command")
    for name, help_ in (("analyze", "classify one parameter point"),
                        ("scan", "classify a range of points into CSV"),
                        ("simulate", "run the time-stepping growth probe"),
                        ("verify", "cross-check analyzer against simulator"),
                        ("tables", "reproduce the reference stability tables")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", help="flat key = value configuration file")
        p.add_argument("--scheme", help="one of " + ", ".join(s.value for s in Scheme))
        p.add_argument("--eps-inf", type=float, dest="eps_inf")
        p.add_argument("--eps-s", type=float, dest="eps_s")
        p.add_argument("--t-r", type=float, dest="t_r")
        p.add_argument("--omega1", type=float)
        p.add_argument("--nu", type=float)
        p.add_argument("--k", type=float, help="time step in seconds")
        p.add_argument("--h", type=float, help="space step in meters")
        p.add_argument("--h-y", type=float, dest="h_y")
        p.add_argument("--dim", type=int, choices=(1, 2))
        p.add_argument("--polarization", choices=("te", "tm"))
        p.add_argument("--xi", type=float, help="wavenumber in radians per cell")
        p.add_argument("--xi-y", type=float, dest="xi_y")
        p.add_argument("--steps", type=int)
        p.add_argument("--grid", type=int)
        p.add_argument("--output", help="CSV output path")
        p.add_argument("--empirical", action="store_true", default=None)
        p.add_argument("--vary", choices=("k", "xi", "q"))
        p.add_argument("--start", type=float)
        p.add_argument("--stop", type=float)
        p.add_argument("--count", type=int)
        p.add_argument("--samples", type=int)
        p.add_argument("--seed", type=int)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = parse_config(fh.read())
        except OSError as exc:
            raise InvalidInputError(f"cannot read config: {exc}") from exc
        cfg = replace(cfg, command=args.command)
    else:
        cfg = RunConfig(command=args.command)
    overrides = {}
    for f in fields(RunConfig):
        if f.name == "command":
            continue
        v = getattr(args, f.name, None)
        if v is not None:
            overrides[f.name] = v
    return replace(cfg, **overrides)


_COMMANDS = {
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
}


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 2
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[args.command](cfg)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailureError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
