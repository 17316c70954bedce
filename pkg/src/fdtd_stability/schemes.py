"""The five FD-TD schemes for Debye and Lorentz media.

Everything here is per-wavenumber linear algebra: physical constants map to
the dimensionless parameters (lam, delta, omega, eps_s_prime), each scheme
has a dense amplification matrix G advancing its Fourier-transformed state
one time step, and the characteristic polynomial of G is also available in
closed form.  Two-dimensional TE/TM polynomials factor as (Z - 1) times the
one-dimensional polynomial (times an extra polarization factor for TM), so
no 2D matrices are ever built.

State orderings (components normalized as c_inf*B, E, D/(eps0 eps_inf), ...):

    debye-joseph    (b, E, d)
    debye-young     (b, E, p)            p held at half time steps
    lorentz-joseph  (b, E, E_prev, d)
    lorentz-kashiwa (b, E, p, j)         j = k*J/(eps0 eps_inf)
    lorentz-young   (b, E, p, j)         j held at half time steps
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .polyloc import Polynomial

# CODATA 2018 values; c_inf is always derived, never hard-coded.
EPS0 = 8.8541878128e-12  # F/m
MU0 = 1.25663706212e-6   # H/m


class Scheme(enum.Enum):
    """The five discretizations under study."""

    DEBYE_JOSEPH = "debye-joseph"
    DEBYE_YOUNG = "debye-young"
    LORENTZ_JOSEPH = "lorentz-joseph"
    LORENTZ_KASHIWA = "lorentz-kashiwa"
    LORENTZ_YOUNG = "lorentz-young"

    @property
    def kind(self) -> str:
        return "debye" if self.value.startswith("debye") else "lorentz"

    @property
    def state_labels(self) -> tuple[str, ...]:
        return _STATE_LABELS[self]

    @classmethod
    def from_name(cls, name: str) -> "Scheme":
        for s in cls:
            if s.value == name:
                return s
        raise InvalidInputError(f"unknown scheme {name!r}; expected one of "
                                + ", ".join(s.value for s in cls))


_STATE_LABELS = {
    Scheme.DEBYE_JOSEPH: ("b", "E", "d"),
    Scheme.DEBYE_YOUNG: ("b", "E", "p"),
    Scheme.LORENTZ_JOSEPH: ("b", "E", "E_prev", "d"),
    Scheme.LORENTZ_KASHIWA: ("b", "E", "p", "j"),
    Scheme.LORENTZ_YOUNG: ("b", "E", "p", "j"),
}


@dataclass(frozen=True)
class MediumModel:
    """Physical description of a Debye or Lorentz medium.

    Debye media carry a relaxation time t_r; Lorentz media carry a resonance
    frequency omega1 and damping nu (nu = 0 is the harmonic case).
    """

    kind: str
    eps_inf: float
    eps_s: float
    t_r: float | None = None
    omega1: float | None = None
    nu: float | None = None

    def __post_init__(self):
        if self.kind not in ("debye", "lorentz"):
            raise InvalidInputError(f"unknown medium kind {self.kind!r}")
        if not (self.eps_inf > 0 and math.isfinite(self.eps_inf)):
            raise InvalidInputError("eps_inf must be positive and finite")
        if not (math.isfinite(self.eps_s) and self.eps_s >= self.eps_inf):
            raise InvalidInputError("eps_s must satisfy eps_s >= eps_inf")
        if self.kind == "debye":
            if self.t_r is None or not (self.t_r > 0 and math.isfinite(self.t_r)):
                raise InvalidInputError("Debye media require a relaxation time t_r > 0")
        else:
            if self.omega1 is None or not (self.omega1 > 0 and math.isfinite(self.omega1)):
                raise InvalidInputError("Lorentz media require omega1 > 0")
            if self.nu is None or not (self.nu >= 0 and math.isfinite(self.nu)):
                raise InvalidInputError("Lorentz media require nu >= 0")

    @classmethod
    def debye(cls, eps_inf: float, eps_s: float, t_r: float) -> "MediumModel":
        return cls("debye", eps_inf, eps_s, t_r=t_r)

    @classmethod
    def lorentz(cls, eps_inf: float, eps_s: float, omega1: float,
                nu: float = 0.0) -> "MediumModel":
        return cls("lorentz", eps_inf, eps_s, omega1=omega1, nu=nu)

    @property
    def c_inf(self) -> float:
        """Infinite-frequency light speed 1/sqrt(eps0 eps_inf mu0)."""
        return 1.0 / math.sqrt(EPS0 * self.eps_inf * MU0)

    @property
    def is_harmonic(self) -> bool:
        return self.kind == "lorentz" and self.nu == 0.0


@dataclass(frozen=True)
class DimensionlessParams:
    """The dimensionless parameters every amplification matrix depends on.

    lam          CFL number c_inf*k/h
    delta        normalized time step: k/(2 t_r) for Debye, nu*k/2 for Lorentz
    eps_s_prime  eps_s / eps_inf >= 1
    omega        normalized squared frequency omega1^2 k^2 / 2 (Lorentz only)
    """

    lam: float
    delta: float
    eps_s_prime: float
    omega: float | None = None

    def __post_init__(self):
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise InvalidInputError("lam must be positive and finite")
        if not (self.delta >= 0 and math.isfinite(self.delta)):
            raise InvalidInputError("delta must be nonnegative and finite")
        if not (self.eps_s_prime >= 1.0):
            raise InvalidInputError("eps_s_prime must be >= 1")
        if self.omega is not None and not (self.omega > 0 and math.isfinite(self.omega)):
            raise InvalidInputError("omega must be positive when present")

    @property
    def alpha(self) -> float:
        return self.eps_s_prime - 1.0

    @property
    def kashiwa_denominator(self) -> float:
        """Denominator 1 + delta + omega*eps_s_prime/2 of the implicit
        polarization solve; always above 1."""
        if self.omega is None:
            raise InvalidInputError("kashiwa_denominator requires Lorentz parameters")
        return 1.0 + self.delta + 0.5 * self.omega * self.eps_s_prime

    @property
    def kind(self) -> str:
        return "debye" if self.omega is None else "lorentz"


@dataclass(frozen=True)
class Wavenumber:
    """Discrete wavenumber(s) in radians per cell; 2D when xi_y is present.

    h_x and h_y are the space steps in meters; params.lam is always tied to
    h_x, and the y-direction CFL number follows from the ratio.
    """

    xi_x: float
    xi_y: float | None = None
    h_x: float = 1.0
    h_y: float = 1.0

    def __post_init__(self):
        for name, xi in (("xi_x", self.xi_x), ("xi_y", self.xi_y)):
            if xi is None:
                continue
            if not (0.0 <= xi < 2.0 * math.pi):
                raise InvalidInputError(f"{name} must lie in [0, 2*pi)")
        if not (self.h_x > 0 and self.h_y > 0):
            raise InvalidInputError("space steps must be positive")

    @property
    def is_2d(self) -> bool:
        return self.xi_y is not None


@dataclass(frozen=True)
class AmpMatrix:
    """Per-wavenumber update matrix with its state-component names."""

    entries: np.ndarray
    variable_labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def dimensionless_params(medium: MediumModel, k: float, h: float) -> DimensionlessParams:
    """Map physical medium and steps (k seconds, h meters) to the
    dimensionless parameter set."""
    if not (k > 0 and math.isfinite(k)):
        raise InvalidInputError("time step k must be positive and finite")
    if not (h > 0 and math.isfinite(h)):
        raise InvalidInputError("space step h must be positive and finite")
    lam = medium.c_inf * k / h
    es = medium.eps_s / medium.eps_inf
    if medium.kind == "debye":
        return DimensionlessParams(lam=lam, delta=k / (2.0 * medium.t_r), eps_s_prime=es)
    return DimensionlessParams(lam=lam, delta=medium.nu * k / 2.0, eps_s_prime=es,
                               omega=medium.omega1 ** 2 * k ** 2 / 2.0)


def courant_q(params: DimensionlessParams, wn: Wavenumber) -> float:
    """Per-wavenumber Courant quantity 4 lam^2 sin^2(xi/2), summed over
    directions in 2D (with per-direction CFL numbers)."""
    lam_x = params.lam
    q = 4.0 * lam_x ** 2 * math.sin(wn.xi_x / 2.0) ** 2
    if wn.is_2d:
        lam_y = lam_x * wn.h_x / wn.h_y
        q += 4.0 * lam_y ** 2 * math.sin(wn.xi_y / 2.0) ** 2
    return q


def _check_scheme_params(scheme: Scheme, params: DimensionlessParams) -> None:
    if scheme.kind != params.kind:
        raise InvalidInputError(
            f"{scheme.value} requires {scheme.kind} parameters, got {params.kind}")
    if scheme.kind == "debye" and params.delta <= 0:
        raise InvalidInputError("Debye schemes require delta > 0")


def _entries_uv(scheme: Scheme, params: DimensionlessParams, u: complex,
                v: complex, q: float) -> np.ndarray:
    """Matrix entries with the curl couplings abstracted: u multiplies E in
    the induction row, v multiplies b in the field rows, and u*v = -q.  Any
    factorization of -q gives a diagonally similar matrix, which is what the
    analyzer exploits to probe unreachable q values."""
    d = params.delta
    es = params.eps_s_prime
    if scheme is Scheme.DEBYE_JOSEPH:
        A = 1.0 + d * es
        return np.array([
            [1.0, -u, 0.0],
            [-(1.0 + d) * v / A, ((1.0 - d * es) - (1.0 + d) * q) / A, 2.0 * d / A],
            [-v, -q, 1.0],
        ], dtype=complex)
    if scheme is Scheme.DEBYE_YOUNG:
        a = params.alpha
        A = 1.0 + d * a
        B = 1.0 + d
        return np.array([
            [1.0, -u, 0.0],
            [-v / A, (1.0 + d - d * a + 3.0 * d * d * a - B * q) / (B * A),
             (1.0 - d) / B * 2.0 * d / A],
            [0.0, 2.0 * d * a / B, (1.0 - d) / B],
        ], dtype=complex)
    w = params.omega
    if scheme is Scheme.LORENTZ_JOSEPH:
        A = 1.0 + d + w * es
        C = 1.0 - d + w * es
        # The E_prev coupling is -C/A, the sign the second-order field
        # recurrence and the characteristic polynomial both require.
        return np.array([
            [1.0, -u, 0.0, 0.0],
            [-2.0 * d * v / A, (2.0 - q * (1.0 + d + w)) / A, -C / A, 2.0 * w / A],
            [0.0, 1.0, 0.0, 0.0],
            [-v, -q, 0.0, 1.0],
        ], dtype=complex)
    if scheme is Scheme.LORENTZ_KASHIWA:
        a = params.alpha
        D = params.kashiwa_denominator
        gwa = 0.5 * w * a
        return np.array([
            [1.0, -u, 0.0, 0.0],
            [-v * (D - gwa) / D, (D - q * D - (2.0 - q) * gwa) / D, w / D, -1.0 / D],
            [-v * gwa / D, (2.0 - q) * gwa / D, (D - w) / D, 1.0 / D],
            [-v * w * a / D, (2.0 - q) * w * a / D, -2.0 * w / D, (2.0 - D) / D],
        ], dtype=complex)
    if scheme is Scheme.LORENTZ_YOUNG:
        a = params.alpha
        B = 1.0 + d
        return np.array([
            [1.0, -u, 0.0, 0.0],
            [-v, ((1.0 - q) * B - 2.0 * w * a) / B, 2.0 * w / B, -(1.0 - d) / B],
            [0.0, 2.0 * w * a / B, (B - 2.0 * w) / B, (1.0 - d) / B],
            [0.0, 2.0 * w * a / B, -2.0 * w / B, (1.0 - d) / B],
        ], dtype=complex)
    raise InvalidInputError(f"unknown scheme {scheme!r}")


def amplification_matrix(scheme: Scheme, params: DimensionlessParams,
                         wn: Wavenumber) -> AmpMatrix:
    """One-dimensional amplification matrix at discrete wavenumber xi_x."""
    _check_scheme_params(scheme, params)
    if wn.is_2d:
        raise InvalidInputError("amplification matrices are built in 1D only")
    lam = params.lam
    xi = wn.xi_x
    phase = complex(math.cos(xi), math.sin(xi))
    u = lam * (phase - 1.0)
    v = lam * (1.0 - 1.0 / phase) if xi != 0.0 else 0.0j
    q = courant_q(params, wn)
    return AmpMatrix(_entries_uv(scheme, params, u, v, q), scheme.state_labels)


def amplification_matrix_at_q(scheme: Scheme, params: DimensionlessParams,
                              q: float) -> AmpMatrix:
    """Matrix diagonally similar to the physical one at Courant quantity q,
    built from the coupling split u = sqrt(q), v = -sqrt(q) (the physical
    couplings satisfy u*v = -q).  Valid for any q >= 0, even values no
    wavenumber of the current grid attains."""
    _check_scheme_params(scheme, params)
    if q < 0:
        raise InvalidInputError("q must be nonnegative")
    s = math.sqrt(q)
    return AmpMatrix(_entries_uv(scheme, params, s, -s, q), scheme.state_labels)


def char_poly_closed(scheme: Scheme, params: DimensionlessParams, q: float) -> Polynomial:
    """Closed-form characteristic polynomial (ascending coefficients, real,
    positive leading coefficient; cubic for Debye, quartic for Lorentz)."""
    _check_scheme_params(scheme, params)
    if q < 0:
        raise InvalidInputError("q must be nonnegative")
    d = params.delta
    es = params.eps_s_prime
    if scheme is Scheme.DEBYE_JOSEPH:
        return Polynomial((
            -(1.0 - d * es),
            3.0 - d * es - (1.0 - d) * q,
            -(3.0 + d * es - (1.0 + d) * q),
            1.0 + d * es,
        ))
    if scheme is Scheme.DEBYE_YOUNG:
        a = params.alpha
        return Polynomial((
            -(1.0 - d * a) * (1.0 - d),
            3.0 - d - d * a + 3.0 * d * d * a - (1.0 - d) * q,
            -(3.0 + d + d * a + 3.0 * d * d * a - (1.0 + d) * q),
            (1.0 + d * a) * (1.0 + d),
        ))
    w = params.omega
    if scheme is Scheme.LORENTZ_JOSEPH:
        return Polynomial((
            1.0 - d + w * es,
            -(4.0 - 2.0 * d + 2.0 * w * es - (1.0 - d + w) * q),
            6.0 + 2.0 * w * es - 2.0 * q,
            -(4.0 + 2.0 * d + 2.0 * w * es - (1.0 + d + w) * q),
            1.0 + d + w * es,
        ))
    if scheme is Scheme.LORENTZ_KASHIWA:
        return Polynomial((
            1.0 - d + 0.5 * w * es,
            -(4.0 - 2.0 * d - (1.0 - d + 0.5 * w) * q),
            6.0 - w * es + (w - 2.0) * q,
            -(4.0 + 2.0 * d - (1.0 + d + 0.5 * w) * q),
            1.0 + d + 0.5 * w * es,
        ))
    if scheme is Scheme.LORENTZ_YOUNG:
        return Polynomial((
            1.0 - d,
            -(4.0 - 2.0 * d - 2.0 * w * es - (1.0 - d) * q),
            2.0 * (3.0 - 2.0 * w * es + (w - 1.0) * q),
            -(4.0 + 2.0 * d - 2.0 * w * es - (1.0 + d) * q),
            1.0 + d,
        ))
    raise InvalidInputError(f"unknown scheme {scheme!r}")


def char_poly_from_matrix(G: AmpMatrix | np.ndarray) -> Polynomial:
    """Monic characteristic polynomial det(Z I - G), computed from the
    eigenvalues; the independent cross-check for char_poly_closed."""
    m = G.entries if isinstance(G, AmpMatrix) else np.asarray(G, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInputError("characteristic polynomial requires a square matrix")
    coeffs_desc = np.poly(m)
    return Polynomial(tuple(coeffs_desc[::-1]))


def tm_factor_2d(scheme: Scheme, params: DimensionlessParams) -> Polynomial:
    """The extra polynomial factor of the 2D transverse-magnetic system
    (degree 1 for Debye schemes, degree 2 for Lorentz schemes)."""
    _check_scheme_params(scheme, params)
    d = params.delta
    es = params.eps_s_prime
    if scheme is Scheme.DEBYE_JOSEPH:
        return Polynomial((-(1.0 - d * es), 1.0 + d * es))
    if scheme is Scheme.DEBYE_YOUNG:
        a = params.alpha
        return Polynomial((-(1.0 - a) * (1.0 - d * a), (1.0 + a) * (1.0 + d * a)))
    w = params.omega
    if scheme is Scheme.LORENTZ_JOSEPH:
        return Polynomial((1.0 - d + w * es, -2.0, 1.0 + d + w * es))
    if scheme is Scheme.LORENTZ_KASHIWA:
        return Polynomial((1.0 - d + 0.5 * w * es, -(2.0 - w * es),
                           1.0 + d + 0.5 * w * es))
    if scheme is Scheme.LORENTZ_YOUNG:
        return Polynomial((1.0 - d, -2.0 * (1.0 - w * es), 1.0 + d))
    raise InvalidInputError(f"unknown scheme {scheme!r}")


def char_poly_2d(scheme: Scheme, params: DimensionlessParams, wn: Wavenumber,
                 polarization: str) -> Polynomial:
    """Two-dimensional characteristic polynomial: (Z - 1) times the 1D
    polynomial at q = q_x + q_y, with the TM polarization factor inserted
    for "tm"."""
    if not wn.is_2d:
        raise InvalidInputError("char_poly_2d requires a 2D wavenumber")
    if polarization not in ("te", "tm"):
        raise InvalidInputError("polarization must be 'te' or 'tm'")
    q = courant_q(params, wn)
    poly = Polynomial((-1.0, 1.0)) * char_poly_closed(scheme, params, q)
    if polarization == "tm":
        poly = poly * tm_factor_2d(scheme, params)
    return poly
