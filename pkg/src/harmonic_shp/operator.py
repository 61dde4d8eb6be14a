"""Class parameters, the coefficient weight and the integral operator I^m.

The weight w(v) = v^(-m) (1 - alpha + alpha v) drives every membership
test: a series lies in the class whenever

    sum_{v>=2} w(v)|a_v| + sum_{v>=1} w(v)|b_v| <= 1 - beta,

and for negative-coefficient series the same inequality is also necessary.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    OriginExcluded,
    ParamOutOfRange,
    PointOutsideDisk,
    PreconditionViolated,
    SignConventionViolation,
    WeightsNotConvex,
)
from .series import (
    DEFAULT_DEGREE,
    Convention,
    HarmonicSeries,
    _derivs,
    _horner,
    _unwrap,
)

MEMBER_TOL = 1e-12
CONVEX_TOL = 1e-12


@dataclass(frozen=True)
class ClassParams:
    m: int
    alpha: float
    beta: float

    def __post_init__(self):
        if isinstance(self.m, bool) or int(self.m) != self.m or self.m < 0:
            raise ParamOutOfRange(f"m must be a nonnegative integer, got {self.m!r}")
        if not 0 <= self.alpha < 1:
            raise ParamOutOfRange(f"alpha must lie in [0, 1), got {self.alpha!r}")
        if not 0 <= self.beta < 1:
            raise ParamOutOfRange(f"beta must lie in [0, 1), got {self.beta!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    @property
    def budget(self) -> float:
        return 1.0 - self.beta

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ClassParams":
        return cls(m=d["m"], alpha=d["alpha"], beta=d["beta"])


def weight(params: ClassParams, v):
    """w(v) = v^(-m) (1 - alpha + alpha v); accepts scalars or arrays."""
    v = np.asarray(v, dtype=float)
    if np.any(v < 1):
        raise IndexOutOfRange("weight is defined for v >= 1")
    out = v ** (-params.m) * (1.0 - params.alpha + params.alpha * v)
    return _unwrap(out)


def weights(params: ClassParams, degree: int) -> np.ndarray:
    """w(1), ..., w(degree)."""
    return np.asarray(weight(params, np.arange(1, degree + 1)), dtype=float).reshape(-1)


def apply_integral_operator(f: HarmonicSeries, m: int) -> HarmonicSeries:
    """I^m f: a_v -> v^(-m) a_v and b_v -> (-1)^m v^(-m) b_v.

    For odd m a negative-coefficient input comes back in the general
    convention, since its co-analytic tail changes sign.
    """
    if m < 0:
        raise ParamOutOfRange("m must be nonnegative")
    if m == 0:
        return f
    v = np.arange(1, f.degree + 1, dtype=float)
    mult = v ** (-m)
    a = f.a * mult
    b = f.b * mult * (-1) ** m
    convention = f.convention
    if convention is Convention.NEGATIVE_THP and m % 2 and np.any(b != 0):
        convention = Convention.GENERAL
    return HarmonicSeries(a, b, convention)


def coefficient_sum(f: HarmonicSeries, params: ClassParams) -> float:
    """sum_{v>=2} w(v)|a_v| + sum_{v>=1} w(v)|b_v| (a_1 excluded)."""
    w = weights(params, f.degree)
    return float(np.sum(w[1:] * np.abs(f.a[1:])) + np.sum(w * np.abs(f.b)))


def is_member_sufficient(f: HarmonicSeries, params: ClassParams) -> bool:
    """Coefficient test; True guarantees membership, False is inconclusive
    for general-convention series."""
    return coefficient_sum(f, params) <= params.budget + MEMBER_TOL


def is_member_thp(f: HarmonicSeries, params: ClassParams) -> bool:
    """Exact membership for negative-coefficient series."""
    if not f.is_thp:
        raise SignConventionViolation("is_member_thp requires a negative_thp series")
    return coefficient_sum(f, params) <= params.budget + MEMBER_TOL


def class_functional_values(f: HarmonicSeries, params: ClassParams, z):
    """Vectorised class functional, without the origin check."""
    F = apply_integral_operator(f, params.m)
    h, g = _horner(F.a, z), _horner(F.b, z)
    dh, dg = _derivs(F, z)
    value = ((1 - params.alpha) * (h + np.conj(g)) / z
             + params.alpha * (dh + np.conj(dg)))
    return value.real


def class_functional(f: HarmonicSeries, params: ClassParams, z):
    """Re{(1 - alpha) F(z)/z + alpha F'(z)} with F = I^m h + (-1)^m conj(I^m g).

    F' is read as (I^m h)' + (-1)^m conj((I^m g)').  The class is the set
    where this stays >= beta on the disk.
    """
    z = np.asarray(z, dtype=complex)
    r = np.abs(z)
    if np.any(r >= 1):
        raise PointOutsideDisk("evaluation points must satisfy |z| < 1")
    if np.any(r <= 1e-12):
        raise OriginExcluded("the class functional divides by z")
    return _unwrap(class_functional_values(f, params, z))


def _check_convex(mus, label="weights"):
    mus = np.asarray(mus, dtype=float)
    if np.any(mus < 0) or abs(mus.sum() - 1.0) > CONVEX_TOL:
        raise WeightsNotConvex(f"{label} must be nonnegative and sum to 1")
    return mus


def sharp_function(params: ClassParams, x: Sequence[float], y: Sequence[float],
                   degree: int | None = None) -> HarmonicSeries:
    """Member with coefficient_sum = 1 - beta exactly.

    ``x`` lists x_2, x_3, ... and ``y`` lists y_1, y_2, ...; together they
    must form a convex weight vector.
    """
    x = np.asarray(list(x), dtype=float)
    y = np.asarray(list(y), dtype=float)
    _check_convex(np.concatenate([x, y]))
    if degree is None:
        degree = max(x.size + 1, y.size, 1)
    w = weights(params, degree)
    a = np.zeros(degree, dtype=complex)
    b = np.zeros(degree, dtype=complex)
    a[0] = 1.0
    a[1:x.size + 1] = params.budget / w[1:x.size + 1] * x
    b[:y.size] = params.budget / w[:y.size] * y
    return HarmonicSeries(a, b, Convention.GENERAL)


def extreme_point_h(params: ClassParams, v: int,
                    degree: int = DEFAULT_DEGREE) -> HarmonicSeries:
    """h_v(z) = z - (1 - beta)/w(v) z^v; h_1(z) = z."""
    if not 1 <= v <= degree:
        raise IndexOutOfRange(f"h_v needs 1 <= v <= {degree}, got {v}")
    a = np.zeros(degree, dtype=complex)
    a[0] = 1.0
    if v >= 2:
        a[v - 1] = -params.budget / weight(params, v)
    return HarmonicSeries(a, np.zeros(degree, dtype=complex), Convention.NEGATIVE_THP)


def extreme_point_g(params: ClassParams, v: int,
                    degree: int = DEFAULT_DEGREE) -> HarmonicSeries:
    """g_v(z) = z - (1 - beta)/w(v) conj(z)^v."""
    if not 1 <= v <= degree:
        raise IndexOutOfRange(f"g_v needs 1 <= v <= {degree}, got {v}")
    a = np.zeros(degree, dtype=complex)
    a[0] = 1.0
    b = np.zeros(degree, dtype=complex)
    b[v - 1] = -params.budget / weight(params, v)
    return HarmonicSeries(a, b, Convention.NEGATIVE_THP)


def convex_combination(points: Sequence[HarmonicSeries], mus) -> HarmonicSeries:
    mus = _check_convex(mus, "mus")
    if len(points) != mus.size or not points:
        raise WeightsNotConvex("need one weight per point")
    if not all(p.is_thp for p in points):
        raise SignConventionViolation("convex_combination requires negative_thp points")
    n = max(p.degree for p in points)
    a = np.zeros(n, dtype=complex)
    b = np.zeros(n, dtype=complex)
    for p, mu in zip(points, mus):
        p = p.padded(n)
        a += mu * p.a
        b += mu * p.b
    a[0] = 1.0
    return HarmonicSeries(a, b, Convention.NEGATIVE_THP)


def distortion_bounds(params: ClassParams, b1_mag: float, r: float) -> tuple[float, float]:
    """(lower, upper) bounds for |f(z)| on |z| = r."""
    if not 0 <= r < 1:
        raise ParamOutOfRange("r must lie in [0, 1)")
    if not 0 <= b1_mag < 1 or b1_mag > params.budget:
        raise ParamOutOfRange("|b_1| must lie in [0, 1 - beta]")
    tail = (params.budget - b1_mag) / weight(params, 2) * r * r
    return (1 - b1_mag) * r - tail, (1 + b1_mag) * r + tail


def distortion_extremals(params: ClassParams, b1_mag: float) -> tuple[HarmonicSeries, HarmonicSeries]:
    """The two functions attaining the distortion bounds on the real axis.

    The lower one, z - |b_1| conj(z) - c z^2, is negative-coefficient and
    attains the lower bound at z = r.  The upper one,
    z + |b_1| conj(z) - c conj(z)^2, has a positive co-analytic linear term
    and attains the upper bound at z = -r.
    """
    distortion_bounds(params, b1_mag, 0.0)
    c = (params.budget - b1_mag) / weight(params, 2)
    lower = HarmonicSeries([1, -c], [-b1_mag, 0], Convention.NEGATIVE_THP)
    upper = HarmonicSeries([1, 0], [b1_mag, -c], Convention.GENERAL)
    return lower, upper


class ConvexityRadius(NamedTuple):
    radius: float
    v: int


def convexity_radius(beta: float, b1_mag: float, max_v: int) -> ConvexityRadius:
    """min over v = 2..max_v of ((1 - beta - |b_1|)/v)^(1/(v-1))."""
    slack = 1.0 - beta - b1_mag
    if slack <= 0:
        raise PreconditionViolated("requires 1 - beta > |b_1|")
    if max_v < 2:
        raise PreconditionViolated("max_v must be >= 2")
    best = ConvexityRadius(np.inf, 0)
    for v in range(2, max_v + 1):
        rv = (slack / v) ** (1.0 / (v - 1))
        if rv < best.radius:
            best = ConvexityRadius(rv, v)
    return best


def random_member(params: ClassParams, degree: int = DEFAULT_DEGREE, seed: int = 0,
                  convention: Convention = Convention.NEGATIVE_THP) -> HarmonicSeries:
    """Deterministic random member of the class.

    A fraction sqrt(U) of the budget 1 - beta (biased toward the boundary)
    is split over the 2N - 1 coefficient slots by the spacings of sorted
    uniforms; each slot's mass is then divided by its weight.
    """
    rng = np.random.default_rng(seed)
    w = weights(params, degree)
    n_slots = 2 * degree - 1
    cuts = np.sort(rng.uniform(size=n_slots - 1))
    shares = np.diff(np.concatenate([[0.0], cuts, [1.0]]))
    total = params.budget * np.sqrt(rng.uniform())
    mass = total * shares
    # slot order: b_1, a_2..a_N, b_2..b_N
    b_mod = np.zeros(degree)
    a_mod = np.zeros(degree)
    b_mod[0] = mass[0] / w[0]
    a_mod[1:] = mass[1:degree] / w[1:]
    b_mod[1:] = mass[degree:] / w[1:]
    if convention is Convention.NEGATIVE_THP:
        a = -a_mod.astype(complex)
        b = -b_mod.astype(complex)
    else:
        a = a_mod * np.exp(2j * np.pi * rng.uniform(size=degree))
        b = b_mod * np.exp(2j * np.pi * rng.uniform(size=degree))
    a[0] = 1.0
    return HarmonicSeries(a, b, convention)


@dataclass(frozen=True)
class WeightDiagnostics:
    """Which of the proofs' weight inequalities hold for v = 2..max_v.

    ``dominates_v``: w(v) >= v.  ``monotone_from_2``: w(v) >= w(2).
    ``dominance_ratio`` is max v / w(v), the factor by which the v-weighted
    sums used for univalence and starlikeness can exceed the class budget.
    """

    params: ClassParams
    max_v: int
    dominates_v: bool
    monotone_from_2: bool
    first_dominance_violation: int | None
    first_monotone_violation: int | None
    dominance_ratio: float

    @property
    def first_violation_v(self) -> int | None:
        found = [v for v in (self.first_dominance_violation,
                             self.first_monotone_violation) if v is not None]
        return min(found) if found else None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["params"] = self.params.to_dict()
        d["first_violation_v"] = self.first_violation_v
        return d


def weight_dominance_diagnostics(params: ClassParams, max_v: int) -> WeightDiagnostics:
    if max_v < 2:
        raise PreconditionViolated("max_v must be >= 2")
    v = np.arange(2, max_v + 1)
    w = weights(params, max_v)[1:]
    dom_bad = np.flatnonzero(w < v)
    mono_bad = np.flatnonzero(w < w[0])
    return WeightDiagnostics(
        params=params,
        max_v=max_v,
        dominates_v=dom_bad.size == 0,
        monotone_from_2=mono_bad.size == 0,
        first_dominance_violation=int(v[dom_bad[0]]) if dom_bad.size else None,
        first_monotone_violation=int(v[mono_bad[0]]) if mono_bad.size else None,
        dominance_ratio=float(np.max(v / w)),
    )
