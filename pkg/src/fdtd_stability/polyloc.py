"""Locate polynomial roots relative to the unit circle.

Two root-location classes drive every stability verdict in this package:

* Schur: every root has modulus strictly below one.
* Simple von Neumann: every root lies in the closed unit disk and the roots
  on the circle itself are simple.

Both are decided without computing roots, by a conjugate-reduction recursion
that lowers the degree one step at a time.  Writing ``p(z) = c0 + c1 z + ...
+ cd z^d``, the reversed-conjugate polynomial is ``p*(z) = conj(cd) + ... +
conj(c0) z^d`` and one reduction step maps ``p`` to

    (p*(0) p(z) - p(0) p*(z)) / z.

The constant term of the numerator cancels exactly, so the division is a
coefficient shift.  A companion-matrix root solver (`root_profile`) provides
an independent oracle used throughout the tests, and an exact-rational
variant of the recursion backs up the floating-point path on rational
inputs.

All values are immutable; every function is pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, NumericalFailureError

# Trailing coefficients below this fraction of the largest coefficient are
# trimmed on construction.
TRIM_REL_TOL = 1e-12

# The recursion compares |p(0)|^2 against |p*(0)|^2; differences within
# BOUNDARY_REL_TOL * max(1, |p*(0)|^2) count as equality.  Inputs are
# normalized by their largest coefficient first, so the test is invariant
# under rescaling of the polynomial.
BOUNDARY_REL_TOL = 1e-12

# Two roots closer than this are treated as one root of higher multiplicity
# (companion eigenvalues of an m-fold root scatter like eps**(1/m)).
ROOT_CLUSTER_TOL = 1e-7


class Polynomial:
    """Dense complex polynomial stored by ascending power.

    Trailing coefficients that are negligible relative to the largest
    magnitude are trimmed on construction.  The zero polynomial is the empty
    coefficient tuple and is a legitimate value (the reduction recursion
    produces it), with degree -1 by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        cs = [complex(c) for c in coeffs]
        top = max((abs(c) for c in cs), default=0.0)
        if top == 0.0:
            cs = []
        else:
            cut = TRIM_REL_TOL * top
            while cs and abs(cs[-1]) <= cut:
                cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: complex = 1.0) -> "Polynomial":
        """Expand ``leading * prod (z - r)`` into coefficients."""
        coeffs = np.array([leading], dtype=complex)
        for r in roots:
            coeffs = np.convolve(coeffs, np.array([-r, 1.0], dtype=complex))
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, z: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial(())
        return Polynomial(np.convolve(np.array(self.coeffs), np.array(other.coeffs)))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(j * c for j, c in enumerate(self.coeffs))[1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise InvalidInputError("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def scaled(self, factor: complex) -> "Polynomial":
        return Polynomial(tuple(factor * c for c in self.coeffs))


@dataclass(frozen=True)
class RootProfile:
    """Counts of roots strictly inside / outside the unit circle, plus the
    on-circle roots grouped by multiplicity."""

    inside_count: int
    outside_count: int
    on_circle: tuple[tuple[complex, int], ...]
    circle_tolerance: float

    @property
    def circle_count(self) -> int:
        return sum(mult for _, mult in self.on_circle)

    @property
    def circle_simple(self) -> bool:
        return all(mult == 1 for _, mult in self.on_circle)


@dataclass(frozen=True)
class LevelTest:
    """One level of the reduction recursion: |p(0)|^2 vs |p*(0)|^2."""

    degree: int
    const_mod2: float
    lead_mod2: float
    relation: str  # "<", "=", ">"


@dataclass(frozen=True)
class LocationResult:
    """Boolean verdict plus the recursion trace that produced it."""

    ok: bool
    levels: tuple[LevelTest, ...]
    reason: str

    def __bool__(self) -> bool:
        return self.ok

    @property
    def boundary_hit(self) -> bool:
        return any(t.relation == "=" for t in self.levels)


def _require_nonzero(p: Polynomial) -> None:
    if p.is_zero:
        raise InvalidInputError("operation is undefined for the zero polynomial")


def conjugate_poly(p: Polynomial) -> Polynomial:
    """Reversed complex-conjugate polynomial: coefficient j becomes
    conj(c[d-j])."""
    _require_nonzero(p)
    return Polynomial(tuple(c.conjugate() for c in reversed(p.coeffs)))


def reduce_step(p: Polynomial) -> Polynomial:
    """One degree-lowering step of the conjugate-reduction recursion.

    The result has degree strictly below ``p``'s, or is the zero polynomial
    (returned as a value, never an error: the von Neumann test needs it).
    """
    _require_nonzero(p)
    c = p.coeffs
    d = p.degree
    if d == 0:
        return Polynomial(())
    c0 = c[0]
    cd_conj = c[d].conjugate()
    out = [cd_conj * c[j + 1] - c0 * c[d - 1 - j].conjugate() for j in range(d)]
    # Coefficients are bilinear in p, so "zero" means small relative to the
    # product scale, not relative to the output's own largest entry.
    scale = (abs(c0) + abs(c[d])) * max(abs(x) for x in c)
    if max(abs(x) for x in out) <= TRIM_REL_TOL * scale:
        return Polynomial(())
    return Polynomial(out)


def _normalized(p: Polynomial) -> Polynomial:
    top = max(abs(c) for c in p.coeffs)
    return Polynomial(tuple(c / top for c in p.coeffs))


def _compare_moduli(const_mod2: float, lead_mod2: float) -> str:
    tol = BOUNDARY_REL_TOL * max(1.0, lead_mod2)
    if abs(const_mod2 - lead_mod2) <= tol:
        return "="
    return "<" if const_mod2 < lead_mod2 else ">"


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def is_schur(p: Polynomial) -> LocationResult:
    """Test whether every root of ``p`` has modulus strictly below one.

    Each level requires a strict |p(0)| < |p*(0)| (ties within tolerance are
    boundary cases and fail the strict test) together with an exact degree
    drop of one.  A nonzero constant has no roots and passes.
    """
    _require_nonzero(p)
    cur = _normalized(p)
    levels: list[LevelTest] = []
    while True:
        d = cur.degree
        if d == 0:
            return LocationResult(True, tuple(levels), "reduced to a nonzero constant")
        const2 = _abs2(cur.coeffs[0])
        lead2 = _abs2(cur.coeffs[d])
        rel = _compare_moduli(const2, lead2)
        levels.append(LevelTest(d, const2, lead2, rel))
        if rel == "=":
            return LocationResult(False, tuple(levels),
                                  f"boundary |p(0)| = |p*(0)| at degree {d}")
        if rel == ">":
            return LocationResult(False, tuple(levels),
                                  f"|p(0)| > |p*(0)| at degree {d}")
        nxt = reduce_step(cur)
        if nxt.degree != d - 1:
            return LocationResult(False, tuple(levels),
                                  f"degree dropped from {d} to {nxt.degree}")
        # Renormalize: the reduction is quadratic in the coefficients, so
        # deep levels would otherwise fall below the tolerance floor.
        cur = _normalized(nxt)


def is_simple_von_neumann(p: Polynomial) -> LocationResult:
    """Test whether all roots lie in the closed unit disk with simple roots
    on the circle.

    Recurses while the reduced polynomial is nonzero and |p(0)| < |p*(0)|;
    when the reduction annihilates the polynomial, the verdict is delegated
    to a strict Schur test on the derivative.  Equality with a nonzero
    reduction certifies a root outside the circle.
    """
    _require_nonzero(p)
    cur = _normalized(p)
    levels: list[LevelTest] = []
    while True:
        d = cur.degree
        if d == 0:
            return LocationResult(True, tuple(levels), "reduced to a nonzero constant")
        const2 = _abs2(cur.coeffs[0])
        lead2 = _abs2(cur.coeffs[d])
        rel = _compare_moduli(const2, lead2)
        nxt = reduce_step(cur)
        levels.append(LevelTest(d, const2, lead2, rel))
        if nxt.is_zero:
            sub = is_schur(cur.derivative())
            verdict = sub.ok
            reason = ("reduction vanished at degree %d; derivative %s Schur"
                      % (d, "is" if verdict else "is not"))
            return LocationResult(verdict, tuple(levels) + sub.levels, reason)
        if rel == ">":
            return LocationResult(False, tuple(levels),
                                  f"|p(0)| > |p*(0)| at degree {d}")
        if rel == "=":
            # Equal moduli mean the root moduli multiply to one.  Were all
            # roots on the circle the polynomial would be self-inversive and
            # the reduction would vanish identically; a nonzero reduction
            # therefore implies a root strictly outside.
            return LocationResult(False, tuple(levels),
                                  f"|p(0)| = |p*(0)| with nonzero reduction "
                                  f"at degree {d}")
        cur = _normalized(nxt)


def root_profile(p: Polynomial, circle_tolerance: float = 1e-9) -> RootProfile:
    """Classify all roots by companion-matrix eigenvalues.

    Roots with | |r| - 1 | <= circle_tolerance count as on-circle and are
    clustered into multiplicity groups; the rest are strictly inside or
    outside.
    """
    _require_nonzero(p)
    if circle_tolerance <= 0:
        raise InvalidInputError("circle_tolerance must be positive")
    if p.degree == 0:
        return RootProfile(0, 0, (), circle_tolerance)
    roots = poly_roots(p)
    inside = outside = 0
    circle: list[complex] = []
    for r in roots:
        mod = abs(r)
        if abs(mod - 1.0) <= circle_tolerance:
            circle.append(r)
        elif mod < 1.0:
            inside += 1
        else:
            outside += 1
    clusters: list[tuple[complex, int]] = []
    remaining = list(circle)
    while remaining:
        seed = remaining.pop(0)
        members = [seed]
        rest = []
        for r in remaining:
            if abs(r - seed) <= ROOT_CLUSTER_TOL:
                members.append(r)
            else:
                rest.append(r)
        remaining = rest
        center = sum(members) / len(members)
        clusters.append((center, len(members)))
    return RootProfile(inside, outside, tuple(clusters), circle_tolerance)


def poly_roots(p: Polynomial) -> np.ndarray:
    """All roots of ``p`` via the companion matrix (descending-order solve)."""
    _require_nonzero(p)
    if p.degree == 0:
        return np.array([], dtype=complex)
    try:
        return np.roots(np.array(p.coeffs[::-1], dtype=complex))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"companion eigensolve failed: {exc}") from exc


def max_root_modulus(p: Polynomial) -> float:
    """Largest root modulus; 0.0 for constants."""
    roots = poly_roots(p)
    return float(np.max(np.abs(roots))) if roots.size else 0.0


# ---------------------------------------------------------------------------
# Exact-rational path (real coefficients).  Backs up the floating recursion
# in tests: boundary cases of the scheme polynomials sit exactly on
# recursion-degeneracy points, where exact arithmetic is the only reliable
# referee.
# ---------------------------------------------------------------------------

def _trim_exact(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def reduce_step_exact(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Exact reduction step for real rational coefficients (ascending)."""
    c = _trim_exact([Fraction(x) for x in coeffs])
    if not c:
        raise InvalidInputError("operation is undefined for the zero polynomial")
    d = len(c) - 1
    if d == 0:
        return ()
    return _trim_exact([c[d] * c[j + 1] - c[0] * c[d - 1 - j] for j in range(d)])


def is_schur_exact(coeffs: Sequence[Fraction]) -> bool:
    c = _trim_exact([Fraction(x) for x in coeffs])
    if not c:
        raise InvalidInputError("operation is undefined for the zero polynomial")
    while True:
        d = len(c) - 1
        if d == 0:
            return True
        if not c[0] * c[0] < c[d] * c[d]:
            return False
        nxt = reduce_step_exact(c)
        if len(nxt) - 1 != d - 1:
            return False
        c = nxt


def is_simple_von_neumann_exact(coeffs: Sequence[Fraction]) -> bool:
    c = _trim_exact([Fraction(x) for x in coeffs])
    if not c:
        raise InvalidInputError("operation is undefined for the zero polynomial")
    while True:
        d = len(c) - 1
        if d == 0:
            return True
        nxt = reduce_step_exact(c)
        if not nxt:
            deriv = _trim_exact([j * c[j] for j in range(1, d + 1)])
            return is_schur_exact(deriv) if deriv else True
        if c[0] * c[0] >= c[d] * c[d]:
            # ">" is a root outside; "=" with a nonzero reduction implies
            # one as well (see is_simple_von_neumann).
            return False
        c = nxt
