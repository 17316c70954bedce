"""Time-stepping kernels for the five schemes on periodic grids.

The simulator is the empirical referee for the analyzer: it advances real
field arrays (1D, or 2D in TE/TM polarization) and reports how the sup-norm
of the state grows.  A single discrete harmonic evolves exactly by the
per-wavenumber update matrix, which the tests exploit as the central
cross-module check.

Fields live on the usual staggered grids, stored in the analyzer's
normalized units (c_inf*B, E, D/(eps0 eps_inf), P/(eps0 eps_inf),
k*J/(eps0 eps_inf)).  Array index j holds the value at the half-shifted
position for the staggered components, so the Fourier coefficients of the
arrays are directly the components of the analyzer's state vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .analyzer import Argument, StabilityVerdict
from .errors import InvalidInputError
from .schemes import DimensionlessParams, MediumModel, Scheme, Wavenumber, dimensionless_params

# A run is growing when the sup-norm exceeds GROWTH_NORM_FACTOR times the
# initial norm, or the tail-half geometric per-step factor exceeds
# 1 + GROWTH_RATE_TOL.
GROWTH_NORM_FACTOR = 1e3
GROWTH_RATE_TOL = 1e-4


@dataclass(frozen=True)
class FieldState:
    """Field arrays of one scheme at one time level."""

    scheme: Scheme
    dim: int
    polarization: str | None
    arrays: dict[str, np.ndarray]
    h_ratio: float = 1.0  # h_x / h_y
    n: int = 0

    @property
    def grid_shape(self) -> tuple[int, ...]:
        return next(iter(self.arrays.values())).shape

    def sup_norm(self) -> float:
        return max(float(np.max(np.abs(a))) for a in self.arrays.values())


@dataclass(frozen=True)
class GrowthReport:
    """Norm history of a run with the boundedness verdict."""

    steps: int
    per_step_factor: float
    max_norm_ratio: float
    verdict: str  # "bounded" | "growing"
    norms: np.ndarray
    overflow_step: int | None = None


def _aux_labels(scheme: Scheme) -> tuple[str, ...]:
    return tuple(l for l in scheme.state_labels if l not in ("b", "E"))


def _check_harmonic(xi: float, n: int) -> None:
    m = xi * n / (2.0 * math.pi)
    if abs(m - round(m)) > 1e-9:
        raise InvalidInputError(
            f"xi={xi!r} is not a harmonic of a {n}-cell periodic grid")


def init_plane_wave(scheme: Scheme, grid: int | tuple[int, int], wn: Wavenumber,
                    amplitude: float, polarization: str | None = None) -> FieldState:
    """All state variables set from one real sinusoid, each sampled on its
    own staggered grid.  The wavenumber must be an exact grid harmonic."""
    if amplitude == 0 or not math.isfinite(amplitude):
        raise InvalidInputError("amplitude must be nonzero and finite")
    aux = _aux_labels(scheme)
    if not wn.is_2d:
        if not isinstance(grid, int):
            raise InvalidInputError("1D runs take a single grid size")
        if grid < 4:
            raise InvalidInputError("grid size must be at least 4")
        _check_harmonic(wn.xi_x, grid)
        j = np.arange(grid, dtype=float)
        wave = lambda shift: amplitude * np.cos(wn.xi_x * (j + shift))
        arrays = {"b": wave(0.5), "E": wave(0.0)}
        for label in aux:
            arrays[label] = wave(0.0)
        return FieldState(scheme, 1, None, arrays)
    if polarization not in ("te", "tm"):
        raise InvalidInputError("2D runs need polarization 'te' or 'tm'")
    nx, ny = (grid, grid) if isinstance(grid, int) else grid
    if nx < 4 or ny < 4:
        raise InvalidInputError("grid sizes must be at least 4")
    _check_harmonic(wn.xi_x, nx)
    _check_harmonic(wn.xi_y, ny)
    ii = np.arange(nx, dtype=float)[:, None]
    jj = np.arange(ny, dtype=float)[None, :]

    def wave(sx, sy):
        return amplitude * np.cos(wn.xi_x * (ii + sx) + wn.xi_y * (jj + sy))

    h_ratio = wn.h_x / wn.h_y
    if polarization == "te":
        arrays = {"b_x": wave(0.0, 0.5), "b_y": wave(0.5, 0.0), "E": wave(0.0, 0.0)}
        for label in aux:
            arrays[label] = wave(0.0, 0.0)
        return FieldState(scheme, 2, "te", arrays, h_ratio=h_ratio)
    arrays = {"b_z": wave(0.5, 0.5), "E_x": wave(0.5, 0.0), "E_y": wave(0.0, 0.5)}
    for label in aux:
        arrays[label + "_x"] = wave(0.5, 0.0)
        arrays[label + "_y"] = wave(0.0, 0.5)
    return FieldState(scheme, 2, "tm", arrays, h_ratio=h_ratio)


def _dfwd(a: np.ndarray, axis: int = 0) -> np.ndarray:
    return np.roll(a, -1, axis=axis) - a


def _dback(a: np.ndarray, axis: int = 0) -> np.ndarray:
    return a - np.roll(a, 1, axis=axis)


def _material_core(scheme: Scheme, p: DimensionlessParams, E, aux, S, S_old):
    """One constitutive update for a single field component.

    E is the component's field array, aux its auxiliary arrays, S the
    normalized curl source entering its induction update (computed from the
    fresh magnetic field), S_old the same expression on the previous
    magnetic field (only the Joseph-style Lorentz scheme needs it, to
    reconstruct the previous flux density).
    """
    d = p.delta
    es = p.eps_s_prime
    if scheme is Scheme.DEBYE_JOSEPH:
        flux = aux["d"] + S
        E_new = ((1.0 - d * es) * E + (1.0 + d) * flux - (1.0 - d) * aux["d"]) \
            / (1.0 + d * es)
        return E_new, {"d": flux}
    if scheme is Scheme.DEBYE_YOUNG:
        a = p.alpha
        pol = ((1.0 - d) * aux["p"] + 2.0 * d * a * E) / (1.0 + d)
        E_new = ((1.0 - d * a) * E + S + 2.0 * d * pol) / (1.0 + d * a)
        return E_new, {"p": pol}
    w = p.omega
    if scheme is Scheme.LORENTZ_JOSEPH:
        A = 1.0 + d + w * es
        C = 1.0 - d + w * es
        flux = aux["d"] + S
        flux_prev = aux["d"] - S_old
        E_new = (2.0 * E - C * aux["E_prev"] + (1.0 + d + w) * flux
                 - 2.0 * aux["d"] + (1.0 - d + w) * flux_prev) / A
        return E_new, {"E_prev": E, "d": flux}
    if scheme is Scheme.LORENTZ_KASHIWA:
        a = p.alpha
        den = p.kashiwa_denominator
        cur = ((2.0 - den) * aux["j"] + 2.0 * w * a * E + w * a * S
               - 2.0 * w * aux["p"]) / den
        pol = aux["p"] + 0.5 * (cur + aux["j"])
        E_new = E + S - (pol - aux["p"])
        return E_new, {"p": pol, "j": cur}
    if scheme is Scheme.LORENTZ_YOUNG:
        a = p.alpha
        cur = ((1.0 - d) * aux["j"] + 2.0 * w * a * E - 2.0 * w * aux["p"]) / (1.0 + d)
        pol = aux["p"] + cur
        E_new = E + S - cur
        return E_new, {"p": pol, "j": cur}
    raise InvalidInputError(f"unknown scheme {scheme!r}")


def step(scheme: Scheme, state: FieldState, params: DimensionlessParams) -> FieldState:
    """One full leapfrog cycle: magnetic half-step, then field/material
    updates, periodic in every direction."""
    if state.scheme is not scheme:
        raise InvalidInputError("state was initialized for a different scheme")
    lam = params.lam
    arr = state.arrays
    aux_labels = _aux_labels(scheme)
    if state.dim == 1:
        b_old = arr["b"]
        b = b_old - lam * _dfwd(arr["E"])
        S = -lam * _dback(b)
        S_old = -lam * _dback(b_old) if scheme is Scheme.LORENTZ_JOSEPH else None
        E_new, aux_new = _material_core(scheme, params, arr["E"],
                                        {l: arr[l] for l in aux_labels}, S, S_old)
        out = {"b": b, "E": E_new, **aux_new}
        return replace(state, arrays=out, n=state.n + 1)
    lam_x = lam
    lam_y = lam * state.h_ratio
    if state.polarization == "te":
        bx = arr["b_x"] - lam_y * _dfwd(arr["E"], 1)
        by = arr["b_y"] + lam_x * _dfwd(arr["E"], 0)
        S = lam_x * _dback(by, 0) - lam_y * _dback(bx, 1)
        S_old = (lam_x * _dback(arr["b_y"], 0) - lam_y * _dback(arr["b_x"], 1)) \
            if scheme is Scheme.LORENTZ_JOSEPH else None
        E_new, aux_new = _material_core(scheme, params, arr["E"],
                                        {l: arr[l] for l in aux_labels}, S, S_old)
        out = {"b_x": bx, "b_y": by, "E": E_new, **aux_new}
        return replace(state, arrays=out, n=state.n + 1)
    # TM: one magnetic component, two field components with their own
    # auxiliary variables.
    bz_old = arr["b_z"]
    bz = bz_old - lam_x * _dfwd(arr["E_y"], 0) + lam_y * _dfwd(arr["E_x"], 1)
    out = {"b_z": bz}
    for comp, sign, axis in (("x", +1.0, 1), ("y", -1.0, 0)):
        lam_c = lam_y if comp == "x" else lam_x
        S = sign * lam_c * _dback(bz, axis)
        S_old = sign * lam_c * _dback(bz_old, axis) \
            if scheme is Scheme.LORENTZ_JOSEPH else None
        aux = {l: arr[f"{l}_{comp}"] for l in aux_labels}
        E_new, aux_new = _material_core(scheme, params, arr[f"E_{comp}"], aux,
                                        S, S_old)
        out[f"E_{comp}"] = E_new
        out.update({f"{l}_{comp}": v for l, v in aux_new.items()})
    return replace(state, arrays=out, n=state.n + 1)


def fourier_mode(state: FieldState, m: int) -> np.ndarray:
    """Complex amplitude of grid mode m for each state component, ordered
    like the scheme's update-matrix state vector (1D only)."""
    if state.dim != 1:
        raise InvalidInputError("fourier_mode is defined for 1D states")
    n = state.grid_shape[0]
    return np.array([np.fft.fft(state.arrays[l])[m] / n
                     for l in state.scheme.state_labels])


def _tail_factor(norms: np.ndarray) -> float:
    """Geometric per-step growth factor over the last half of the run,
    estimated by the least-squares slope of log(norm) (robust against the
    bounded oscillation of on-circle modes)."""
    tail = norms[len(norms) // 2:]
    tail = np.maximum(tail, 1e-300)
    if len(tail) < 2:
        return 1.0
    t = np.arange(len(tail), dtype=float)
    slope = np.polyfit(t, np.log(tail), 1)[0]
    return float(np.exp(slope))


def linear_fit_residual(norms: np.ndarray) -> float:
    """Relative residual of the best straight-line fit to the norm history;
    small values mean the growth is linear rather than exponential.

    Standing-wave initial data make the instantaneous sup-norm pulsate, so
    the fit runs on the running maximum (the growth envelope)."""
    if not np.all(np.isfinite(norms)):
        return float("inf")
    env = np.maximum.accumulate(norms)
    env = env / env[-1]
    t = np.arange(len(env), dtype=float)
    coeffs = np.polyfit(t, env, 1)
    resid = env - np.polyval(coeffs, t)
    return float(np.linalg.norm(resid) / np.linalg.norm(env))


def run_growth(scheme: Scheme, medium: MediumModel, k: float, h: float,
               wn: Wavenumber, steps: int, polarization: str | None = None,
               grid: int | tuple[int, int] = 64, amplitude: float = 1.0,
               h_y: float | None = None) -> GrowthReport:
    """Evolve a plane wave and record the sup-norm per step.

    Overflow (non-finite values) stops the run early and is reported as
    growth, not as an error.
    """
    if steps < 100:
        raise InvalidInputError("growth runs need at least 100 steps")
    if medium.kind != scheme.kind:
        raise InvalidInputError(f"{scheme.value} cannot run in a {medium.kind} medium")
    params = dimensionless_params(medium, k, h)
    state = init_plane_wave(scheme, grid, wn, amplitude, polarization=polarization)
    norms = np.empty(steps + 1)
    norms[0] = state.sup_norm()
    overflow_step = None
    used = steps
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(1, steps + 1):
            state = step(scheme, state, params)
            v = state.sup_norm()
            if not math.isfinite(v):
                overflow_step = i
                used = i - 1
                break
            norms[i] = v
    norms = norms[:used + 1]
    factor = _tail_factor(norms)
    max_ratio = float(np.max(norms) / norms[0])
    growing = (overflow_step is not None
               or max_ratio > GROWTH_NORM_FACTOR
               or factor > 1.0 + GROWTH_RATE_TOL)
    return GrowthReport(steps=used, per_step_factor=factor,
                        max_norm_ratio=max_ratio,
                        verdict="growing" if growing else "bounded",
                        norms=norms, overflow_step=overflow_step)


def empirical_verdict(report: GrowthReport) -> StabilityVerdict:
    """Bridge a growth report into the analyzer's verdict vocabulary."""
    if report.verdict == "bounded":
        return StabilityVerdict(True, Argument.EMPIRICAL,
                                f"bounded: max norm ratio {report.max_norm_ratio:.4g} "
                                f"over {report.steps} steps")
    if report.overflow_step is not None:
        return StabilityVerdict(False, Argument.EMPIRICAL,
                                f"overflow at step {report.overflow_step} "
                                "(exponential growth)")
    if report.per_step_factor < 1.001 and linear_fit_residual(report.norms) < 0.05:
        return StabilityVerdict(False, Argument.EMPIRICAL,
                                "norm grows linearly: matrix powers unbounded "
                                "(polynomial growth)")
    return StabilityVerdict(False, Argument.EMPIRICAL,
                            f"growing at {report.per_step_factor:.6f} per step")
