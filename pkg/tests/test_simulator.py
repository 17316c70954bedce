"""Simulator tests.

The decisive check is that a single grid harmonic evolves exactly by the
per-wavenumber update matrix; everything else (linearity, shift invariance,
growth verdicts, 2D reductions) builds on that.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from fdtd_stability import (
    InvalidInputError,
    MediumModel,
    Scheme,
    Wavenumber,
    amplification_matrix,
    dimensionless_params,
    empirical_verdict,
    init_plane_wave,
    run_growth,
    step,
)
from fdtd_stability.simulator import FieldState, fourier_mode, linear_fit_residual


def medium_for(scheme):
    if scheme.kind == "debye":
        return MediumModel.debye(1.8, 81.0, 9.4e-12), 1e-5
    return MediumModel.lorentz(1.0, 2.25, 4e16, 0.56e16), 1e-8


def stable_params(scheme, lam=0.6):
    medium, h = medium_for(scheme)
    k = lam * h / medium.c_inf
    return medium, k, h, dimensionless_params(medium, k, h)


# --- initialization ----------------------------------------------------------

def test_init_worst_mode():
    st = init_plane_wave(Scheme.DEBYE_JOSEPH, 64, Wavenumber(math.pi), 1.0)
    assert st.sup_norm() > 0
    np.testing.assert_allclose(st.arrays["E"], np.cos(math.pi * np.arange(64)))


def test_init_uniform_mode():
    st = init_plane_wave(Scheme.DEBYE_JOSEPH, 64, Wavenumber(0.0), 2.0)
    np.testing.assert_allclose(st.arrays["E"], 2.0)
    np.testing.assert_allclose(st.arrays["b"], 2.0)


def test_init_rejects_non_harmonic():
    with pytest.raises(InvalidInputError):
        init_plane_wave(Scheme.DEBYE_JOSEPH, 64, Wavenumber(1.0), 1.0)


def test_init_rejects_zero_amplitude():
    with pytest.raises(InvalidInputError):
        init_plane_wave(Scheme.DEBYE_JOSEPH, 64, Wavenumber(math.pi), 0.0)


def test_single_mode_stays_single_mode():
    scheme = Scheme.DEBYE_JOSEPH
    _, _, _, params = stable_params(scheme)
    n, m = 64, 16
    st = init_plane_wave(scheme, n, Wavenumber(2 * math.pi * m / n), 1.0)
    st = step(scheme, st, params)
    for arr in st.arrays.values():
        spec = np.abs(np.fft.fft(arr))
        live = {i for i in range(n) if spec[i] > 1e-12 * spec.max()}
        assert live <= {m, n - m}


# --- the central cross-module oracle -----------------------------------------

@pytest.mark.parametrize("scheme", list(Scheme))
def test_fourier_slice_follows_update_matrix(scheme):
    medium, k, h, params = stable_params(scheme, lam=0.7)
    n, m = 32, 5
    wn = Wavenumber(2 * math.pi * m / n)
    G = amplification_matrix(scheme, params, wn).entries
    st = init_plane_wave(scheme, n, wn, 1.0)
    vec = fourier_mode(st, m)
    worst_step = 0.0
    for _ in range(100):
        st = step(scheme, st, params)
        after = fourier_mode(st, m)
        predicted = G @ vec
        scale = max(np.max(np.abs(after)), 1e-30)
        worst_step = max(worst_step, np.max(np.abs(after - predicted)) / scale)
        vec = after
    assert worst_step < 1e-12
    # and over the full 100 steps against G^100
    st0 = init_plane_wave(scheme, n, wn, 1.0)
    expected = np.linalg.matrix_power(G, 100) @ fourier_mode(st0, m)
    np.testing.assert_allclose(vec, expected, rtol=1e-9, atol=1e-15)


@pytest.mark.parametrize("scheme", list(Scheme))
def test_step_linearity(scheme):
    _, _, _, params = stable_params(scheme)
    rng = np.random.default_rng(hash(scheme.value) % 2**32)
    n = 32
    st1 = init_plane_wave(scheme, n, Wavenumber(2 * math.pi * 3 / n), 1.0)
    st2 = init_plane_wave(scheme, n, Wavenumber(2 * math.pi * 7 / n), 0.7)
    a, b = rng.normal(), rng.normal()
    combo = replace(st1, arrays={k: a * st1.arrays[k] + b * st2.arrays[k]
                                 for k in st1.arrays})
    out_combo = step(scheme, combo, params)
    out1 = step(scheme, st1, params)
    out2 = step(scheme, st2, params)
    for key in out_combo.arrays:
        np.testing.assert_allclose(
            out_combo.arrays[key],
            a * out1.arrays[key] + b * out2.arrays[key],
            rtol=1e-12, atol=1e-13)


@pytest.mark.parametrize("scheme", list(Scheme))
def test_step_shift_invariance(scheme):
    _, _, _, params = stable_params(scheme)
    n = 32
    st = init_plane_wave(scheme, n, Wavenumber(2 * math.pi * 5 / n), 1.0)
    shifted = replace(st, arrays={k: np.roll(v, 1) for k, v in st.arrays.items()})
    out_shifted = step(scheme, shifted, params)
    out = step(scheme, st, params)
    for key in out.arrays:
        np.testing.assert_allclose(out_shifted.arrays[key],
                                   np.roll(out.arrays[key], 1),
                                   rtol=1e-12, atol=1e-14)


# --- vacuum limit ------------------------------------------------------------

@pytest.mark.parametrize("scheme,aux_setup", [
    (Scheme.DEBYE_JOSEPH, "flux-equals-field"),
    (Scheme.DEBYE_YOUNG, "zero-polarization"),
])
def test_vacuum_limit_conserves_staggered_energy(scheme, aux_setup):
    """Without dispersion contrast the schemes reduce to the bare leapfrog
    scheme, whose time-staggered quadratic form is conserved exactly."""
    medium = MediumModel.debye(1.0, 1.0, 9.4e-12)
    h = 1e-5
    k = 0.9 * h / medium.c_inf
    params = dimensionless_params(medium, k, h)
    n = 64
    st = init_plane_wave(scheme, n, Wavenumber(2 * math.pi * 8 / n), 1.0)
    arrays = dict(st.arrays)
    if aux_setup == "flux-equals-field":
        arrays["d"] = arrays["E"].copy()
    else:
        arrays["p"] = np.zeros(n)
    st = replace(st, arrays=arrays)
    lam = params.lam

    def energy(state):
        E, b = state.arrays["E"], state.arrays["b"]
        b_next = b - lam * (np.roll(E, -1) - E)
        return float(np.sum(E * E) + np.sum(b * b_next))

    e0 = energy(st)
    worst = 0.0
    for _ in range(1000):
        st = step(scheme, st, params)
        worst = max(worst, abs(energy(st) - e0) / e0)
    assert worst < 1e-10


# --- growth reports ----------------------------------------------------------

def test_growth_bounded_below_limit(water):
    h = 1e-5
    lam = math.sqrt(3.9 / 4.0)
    k = lam * h / water.c_inf
    rep = run_growth(Scheme.DEBYE_JOSEPH, water, k, h, Wavenumber(math.pi), 4000)
    assert rep.verdict == "bounded"
    assert empirical_verdict(rep).stable


def test_growth_rate_matches_root_modulus(water):
    h = 1e-5
    k = 1.05 * h / water.c_inf  # q = 4.41 at xi = pi
    rep = run_growth(Scheme.DEBYE_JOSEPH, water, k, h, Wavenumber(math.pi), 2000)
    assert rep.verdict == "growing"
    from fdtd_stability import char_poly_closed, courant_q
    from fdtd_stability.polyloc import max_root_modulus
    params = dimensionless_params(water, k, h)
    q = courant_q(params, Wavenumber(math.pi))
    expected = max_root_modulus(char_poly_closed(Scheme.DEBYE_JOSEPH, params, q))
    assert rep.per_step_factor == pytest.approx(expected, abs=1e-2)


def test_growth_factor_matches_spectral_radius_kashiwa(optical_lorentz):
    h = 1e-8
    k = 1.02 * h / optical_lorentz.c_inf
    params = dimensionless_params(optical_lorentz, k, h)
    wn = Wavenumber(math.pi)
    rep = run_growth(Scheme.LORENTZ_KASHIWA, optical_lorentz, k, h, wn, 500)
    G = amplification_matrix(Scheme.LORENTZ_KASHIWA, params, wn).entries
    rho = float(np.max(np.abs(np.linalg.eigvals(G))))
    assert rep.per_step_factor == pytest.approx(rho, abs=1e-3)


def test_resonance_linear_growth(resonant_lorentz):
    w = 0.5
    k = math.sqrt(2 * w) / resonant_lorentz.omega1
    q_res = 2 * w / (1 + w)
    m, n = 9, 64
    xi = 2 * math.pi * m / n
    lam = math.sqrt(q_res / (4 * math.sin(xi / 2) ** 2))
    h = resonant_lorentz.c_inf * k / lam
    rep = run_growth(Scheme.LORENTZ_JOSEPH, resonant_lorentz, k, h,
                     Wavenumber(xi), 3000, grid=n)
    assert rep.verdict == "growing"
    assert linear_fit_residual(rep.norms) < 0.05
    verdict = empirical_verdict(rep)
    assert not verdict.stable
    assert "polynomial growth" in verdict.detail


def test_overflow_reported_not_raised(water):
    h = 1e-5
    k = 1.5 * h / water.c_inf
    rep = run_growth(Scheme.DEBYE_JOSEPH, water, k, h, Wavenumber(math.pi), 3000)
    assert rep.verdict == "growing"
    assert rep.overflow_step is not None
    assert "overflow" in empirical_verdict(rep).detail


def test_empirical_verdict_trivial_mappings():
    from fdtd_stability.simulator import GrowthReport
    bounded = GrowthReport(100, 1.0, 1.2, "bounded", np.ones(101))
    assert empirical_verdict(bounded).stable
    grown = GrowthReport(100, 1.2, 2e3, "growing", np.geomspace(1, 2e3, 101))
    assert not empirical_verdict(grown).stable


# --- 2D ------------------------------------------------------------------------

@pytest.mark.parametrize("scheme", list(Scheme))
def test_2d_te_with_zero_xi_y_reproduces_1d(scheme):
    """Columns of a TE run with no transverse variation follow the 1D run
    exactly (the transverse magnetic component maps with opposite sign)."""
    medium, k, h, params = stable_params(scheme, lam=0.6)
    n, ny, m = 32, 6, 5
    xi = 2 * math.pi * m / n
    st1 = init_plane_wave(scheme, n, Wavenumber(xi), 1.0)
    st2 = init_plane_wave(scheme, (n, ny), Wavenumber(xi, 0.0, h_x=h, h_y=h),
                          1.0, polarization="te")
    arrays = {k_: np.tile(v[:, None], (1, ny)) for k_, v in st1.arrays.items()
              if k_ != "b"}
    arrays["b_y"] = np.tile(-st1.arrays["b"][:, None], (1, ny))
    arrays["b_x"] = np.zeros((n, ny))
    st2 = replace(st2, arrays=arrays)
    for _ in range(100):
        st1 = step(scheme, st1, params)
        st2 = step(scheme, st2, params)
    for label, arr in st1.arrays.items():
        col = st2.arrays["b_y"][:, 0] * -1.0 if label == "b" \
            else st2.arrays[label][:, 0]
        np.testing.assert_allclose(col, arr, rtol=0, atol=1e-9 * max(1.0, np.max(np.abs(arr))))
    assert np.max(np.abs(st2.arrays["b_x"])) == 0.0


@pytest.mark.parametrize("polarization", ["te", "tm"])
def test_2d_stable_point_bounded(polarization, optical_lorentz):
    h = 1e-8
    lam = math.sqrt(0.5 * 2.0 / 8.0)  # q_total = half the Joseph limit
    k = lam * h / optical_lorentz.c_inf
    wn = Wavenumber(math.pi, math.pi, h_x=h, h_y=h)
    rep = run_growth(Scheme.LORENTZ_JOSEPH, optical_lorentz, k, h, wn, 500,
                     polarization=polarization, grid=(16, 16))
    assert rep.verdict == "bounded"


def test_2d_unstable_point_grows(water):
    h = 1e-5
    k = 1.05 * h / (math.sqrt(2.0) * water.c_inf)
    wn = Wavenumber(math.pi, math.pi, h_x=h, h_y=h)
    rep = run_growth(Scheme.DEBYE_JOSEPH, water, k, h, wn, 900,
                     polarization="te", grid=(16, 16))
    assert rep.verdict == "growing"


def test_step_rejects_mismatched_scheme():
    _, _, _, params = stable_params(Scheme.DEBYE_JOSEPH)
    st = init_plane_wave(Scheme.DEBYE_JOSEPH, 16, Wavenumber(0.0), 1.0)
    with pytest.raises(InvalidInputError):
        step(Scheme.DEBYE_YOUNG, st, params)


def test_run_growth_requires_enough_steps(water):
    with pytest.raises(InvalidInputError):
        run_growth(Scheme.DEBYE_JOSEPH, water, 1e-15, 1e-5, Wavenumber(0.0), 10)
