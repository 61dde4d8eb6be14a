"""Truncated harmonic power series f = h + conj(g) on the unit disk.

A series of degree N stores dense coefficient arrays indexed by v = 1..N
(array slot v - 1).  The analytic part always has a_1 = 1; the co-analytic
part is free apart from |b_1| < 1.

Every evaluation routine accepts either a Python complex scalar or a numpy
array of points, and returns the same shape.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    B1TooLarge,
    DegenerateDenominator,
    PointOutsideDisk,
    SignConventionViolation,
)

DEFAULT_DEGREE = 16
TOL_ZERO = 1e-12


class Convention(enum.Enum):
    GENERAL = "general"
    NEGATIVE_THP = "negative_thp"


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HarmonicSeries:
    """Degree-N truncation of h(z) + conj(g(z)).

    ``a[v-1]`` holds a_v and ``b[v-1]`` holds b_v.  Under
    ``Convention.NEGATIVE_THP`` the tails are stored as signed non-positive
    reals, so ``abs(a)`` and ``abs(b)`` recover the moduli.
    """

    a: np.ndarray
    b: np.ndarray
    convention: Convention = Convention.GENERAL

    def __post_init__(self):
        a = _frozen(self.a)
        b = _frozen(self.b)
        if a.ndim != 1 or b.ndim != 1 or a.size != b.size or a.size < 1:
            raise ValueError("a and b must be 1-d arrays of equal length >= 1")
        if a[0] != 1:
            raise ValueError("a_1 must equal 1")
        if not abs(b[0]) < 1:
            raise B1TooLarge(f"|b_1| = {abs(b[0])!r} must be < 1")
        if self.convention is Convention.NEGATIVE_THP:
            tails = np.concatenate([a[1:], b])
            if np.any(tails.imag != 0) or np.any(tails.real > 0):
                raise SignConventionViolation(
                    "negative_thp tails must be real and non-positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degree(self) -> int:
        return self.a.size

    @property
    def is_thp(self) -> bool:
        return self.convention is Convention.NEGATIVE_THP

    def padded(self, degree: int) -> "HarmonicSeries":
        """Return the same series with zero coefficients up to ``degree``
        (or truncated, if ``degree`` is smaller)."""
        a = np.zeros(degree, dtype=complex)
        b = np.zeros(degree, dtype=complex)
        n = min(degree, self.degree)
        a[:n] = self.a[:n]
        b[:n] = self.b[:n]
        return HarmonicSeries(a, b, self.convention)

    def __eq__(self, other):
        if not isinstance(other, HarmonicSeries):
            return NotImplemented
        return (self.convention is other.convention
                and np.array_equal(self.a, other.a)
                and np.array_equal(self.b, other.b))

    def __hash__(self):
        return hash((self.convention, self.a.tobytes(), self.b.tobytes()))

    def __repr__(self):
        return (f"HarmonicSeries(degree={self.degree}, "
                f"convention={self.convention.value}, a={self.a!r}, b={self.b!r})")


def make_series(a: Sequence[complex] = (), b: Sequence[complex] = (),
                convention: Convention = Convention.GENERAL,
                degree: int | None = None) -> HarmonicSeries:
    """Build a series from tail coefficients.

    ``a`` lists a_2, a_3, ... and ``b`` lists b_1, b_2, ...; a_1 = 1 is
    inserted.  For ``NEGATIVE_THP`` input must be real; positive magnitudes
    are negated so that callers may pass either |a_v| or the signed value.
    """
    a = list(a)
    b = list(b)
    if degree is None:
        degree = max(len(a) + 1, len(b), 1)
    if degree < max(len(a) + 1, len(b), 1):
        raise ValueError("degree is smaller than the supplied coefficient lists")
    av = np.zeros(degree, dtype=complex)
    bv = np.zeros(degree, dtype=complex)
    av[0] = 1.0
    av[1:len(a) + 1] = a
    bv[:len(b)] = b
    if convention is Convention.NEGATIVE_THP:
        tails = np.concatenate([av[1:], bv])
        if np.any(tails.imag != 0):
            raise SignConventionViolation("negative_thp coefficients must be real")
        av[1:] = -np.abs(av[1:].real)
        bv = -np.abs(bv.real).astype(complex)
    return HarmonicSeries(av, bv, convention)


def identity_series(degree: int = 1,
                    convention: Convention = Convention.NEGATIVE_THP) -> HarmonicSeries:
    """f(z) = z, padded to ``degree``."""
    return make_series(convention=convention, degree=degree)


def _as_points(z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        raise PointOutsideDisk("evaluation points must satisfy |z| < 1")
    return z


def _unwrap(value):
    return value.item() if isinstance(value, np.ndarray) and value.ndim == 0 else value


def _horner(coeffs: np.ndarray, z):
    """sum_{v=1..N} coeffs[v-1] z^v by nested accumulation from v = N."""
    acc = np.zeros_like(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc * z


def _horner_derivative(coeffs: np.ndarray, z):
    """sum_{v=1..N} v coeffs[v-1] z^(v-1)."""
    scaled = coeffs * np.arange(1, coeffs.size + 1)
    acc = np.zeros_like(z)
    for c in scaled[::-1]:
        acc = acc * z + c
    return acc


def _parts(f: HarmonicSeries, z):
    return _horner(f.a, z), _horner(f.b, z)


def _derivs(f: HarmonicSeries, z):
    return _horner_derivative(f.a, z), _horner_derivative(f.b, z)


def evaluate(f: HarmonicSeries, z):
    """f(z) = h(z) + conj(g(z))."""
    z = _as_points(z)
    h, g = _parts(f, z)
    return _unwrap(h + np.conj(g))


def analytic_derivatives(f: HarmonicSeries, z):
    """Return (h'(z), g'(z))."""
    z = _as_points(z)
    dh, dg = _derivs(f, z)
    return _unwrap(dh), _unwrap(dg)


def jacobian(f: HarmonicSeries, z):
    """|h'|^2 - |g'|^2; positive means locally sense-preserving."""
    z = _as_points(z)
    dh, dg = _derivs(f, z)
    return _unwrap(np.abs(dh) ** 2 - np.abs(dg) ** 2)


def starlike_values(f: HarmonicSeries, z):
    """Vectorised starlikeness functional; NaN where |f(z)| <= TOL_ZERO."""
    z = _as_points(z)
    h, g = _parts(f, z)
    dh, dg = _derivs(f, z)
    num = z * dh - np.conj(z * dg)
    den = h + np.conj(g)
    bad = np.abs(den) <= TOL_ZERO
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(bad, np.nan, (num / np.where(bad, 1, den)).real)
    return out


def starlike_functional(f: HarmonicSeries, z):
    """Re{(z h'(z) - conj(z g'(z))) / (h(z) + conj(g(z)))}.

    Positive values on a circle |z| = r mean the image curve winds
    monotonically about the origin.
    """
    out = starlike_values(f, z)
    if np.any(np.isnan(out)):
        raise DegenerateDenominator("|f(z)| is below tol_zero")
    return _unwrap(out)


def _require_thp(*series: HarmonicSeries):
    for s in series:
        if not s.is_thp:
            raise SignConventionViolation("operation requires negative_thp series")


def convolve(f: HarmonicSeries, G: HarmonicSeries) -> HarmonicSeries:
    """Modulus Hadamard product z - sum |a_v||C_v| z^v - sum |b_v||D_v| conj(z)^v."""
    _require_thp(f, G)
    n = min(f.degree, G.degree)
    a = -np.abs(f.a[:n]) * np.abs(G.a[:n])
    a[0] = 1.0
    b = -np.abs(f.b[:n]) * np.abs(G.b[:n])
    return HarmonicSeries(a, b, Convention.NEGATIVE_THP)


def neighborhood_distance(f: HarmonicSeries, G: HarmonicSeries) -> float:
    """|b_1 - D_1| + sum_{v>=2} v (|a_v - C_v| + |b_v - D_v|)."""
    _require_thp(f, G)
    n = max(f.degree, G.degree)
    f, G = f.padded(n), G.padded(n)
    v = np.arange(1, n + 1)
    da = np.abs(f.a - G.a)
    db = np.abs(f.b - G.b)
    return float(db[0] + np.sum(v[1:] * (da[1:] + db[1:])))
