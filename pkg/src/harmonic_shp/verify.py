"""Numerical checkers for the analytic claims about the classes.

Each checker evaluates a claim's conclusion on a deterministic grid (or a
seeded random population) and returns a :class:`ClaimReport`.  Reductions
are deterministic: ties and first failures resolve to the lowest grid or
trial index.

Several conclusions (sense preservation, starlikeness, distortion, the
neighborhood claim) are only derivable from the coefficient bound when
the weight satisfies w(v) >= v or w(v) >= w(2).  ``is_gated`` says
whether a claim is backed by those premises for given parameters; outside
that regime the checkers still run but their reports are exploratory.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import PreconditionViolated, SignConventionViolation
from .operator import (
    ClassParams,
    WeightDiagnostics,
    class_functional_values,
    coefficient_sum,
    convexity_radius,
    distortion_bounds,
    is_member_sufficient,
    is_member_thp,
    random_member,
    weight_dominance_diagnostics,
)
from .series import (
    DEFAULT_DEGREE,
    Convention,
    HarmonicSeries,
    convolve,
    evaluate,
    jacobian,
    neighborhood_distance,
    starlike_values,
)

FUNCTIONAL_TOL = 1e-9
COEFF_TOL = 1e-12
NECESSITY_BAND = 1e-2
DEFAULT_APPROACH = (0.9, 0.99, 0.999, 0.9999)


class ClaimId(enum.Enum):
    SUFFICIENCY_FUNCTIONAL = "SufficiencyFunctional"
    SENSE_PRESERVING = "SensePreserving"
    STARLIKE = "Starlike"
    DISTORTION = "Distortion"
    CONVEXITY_DISC = "ConvexityDisc"
    NEIGHBORHOOD_STARLIKE = "NeighborhoodStarlike"
    CONVOLUTION_CLOSURE = "ConvolutionClosure"
    NECESSITY = "Necessity"


@dataclass(frozen=True)
class SampleGrid:
    radii: tuple
    angles_per_radius: int = 256

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if not radii or any(not 0 < r < 1 for r in radii):
            raise ValueError("grid radii must lie strictly inside (0, 1)")
        if self.angles_per_radius < 8:
            raise ValueError("angles_per_radius must be >= 8")
        object.__setattr__(self, "radii", radii)

    @property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angles_per_radius) / self.angles_per_radius

    def points(self) -> np.ndarray:
        """Radius-major flat array of grid points."""
        r = np.asarray(self.radii)[:, None]
        return (r * np.exp(1j * self.angles)[None, :]).ravel()

    def to_dict(self) -> dict:
        return {"radii": list(self.radii), "angles_per_radius": self.angles_per_radius}


DEFAULT_GRID = SampleGrid((0.1, 0.3, 0.5, 0.7, 0.9, 0.99), 256)


@dataclass
class ClaimReport:
    claim_id: ClaimId
    passed: bool
    extremal_value: float
    witness_point: complex | None = None
    witness_function: HarmonicSeries | None = None
    diagnostics: WeightDiagnostics | None = None
    details: dict = field(default_factory=dict)

    def __repr__(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.claim_id.value} extremal={self.extremal_value:.6g}"


def is_gated(claim_id: ClaimId, diag: WeightDiagnostics | None) -> bool:
    """True when the claim follows from the coefficient bound for these weights."""
    if claim_id in (ClaimId.SUFFICIENCY_FUNCTIONAL, ClaimId.CONVOLUTION_CLOSURE,
                    ClaimId.NECESSITY):
        return True
    if diag is None:
        return False
    if claim_id is ClaimId.DISTORTION:
        return diag.monotone_from_2
    return diag.dominates_v


def _min_report(claim_id, values, points, threshold, f, diag=None, strict=False, **details):
    idx = int(np.argmin(values))
    worst = float(values[idx])
    passed = worst > threshold if strict else worst >= threshold
    return ClaimReport(
        claim_id, passed, worst,
        witness_point=complex(points[idx]),
        witness_function=None if passed else f,
        diagnostics=diag, details=details)


def check_class_functional_min(f: HarmonicSeries, params: ClassParams,
                               grid: SampleGrid = DEFAULT_GRID) -> ClaimReport:
    if not is_member_sufficient(f, params):
        raise PreconditionViolated("f fails the coefficient test")
    z = grid.points()
    vals = class_functional_values(f, params, z)
    return _min_report(ClaimId.SUFFICIENCY_FUNCTIONAL, vals, z,
                       params.beta - FUNCTIONAL_TOL, f,
                       weight_dominance_diagnostics(params, max(f.degree, 2)))


def check_sense_preserving(f: HarmonicSeries, grid: SampleGrid = DEFAULT_GRID,
                           diagnostics: WeightDiagnostics | None = None) -> ClaimReport:
    z = grid.points()
    return _min_report(ClaimId.SENSE_PRESERVING, jacobian(f, z), z, 0.0, f,
                       diagnostics, strict=True)


def check_starlike(f: HarmonicSeries, grid: SampleGrid = DEFAULT_GRID,
                   diagnostics: WeightDiagnostics | None = None) -> ClaimReport:
    if not f.is_thp:
        raise SignConventionViolation("check_starlike requires a negative_thp series")
    z = grid.points()
    vals = starlike_values(f, z)
    skipped = int(np.isnan(vals).sum())
    vals = np.where(np.isnan(vals), np.inf, vals)
    return _min_report(ClaimId.STARLIKE, vals, z, FUNCTIONAL_TOL, f, diagnostics,
                       strict=True, degenerate_points=skipped)


def check_distortion(f: HarmonicSeries, params: ClassParams,
                     radii: Sequence[float] = tuple(np.arange(1, 10) / 10),
                     angles: int = 256) -> ClaimReport:
    """Empirical circle max/min of |f| against the distortion bounds.

    The extremal value is the worst signed margin over all radii; negative
    means a bound was exceeded.
    """
    if not is_member_thp(f, params):
        raise PreconditionViolated("f is not a member")
    b1 = abs(f.b[0])
    theta = 2 * np.pi * np.arange(angles) / angles
    worst, witness = np.inf, None
    for r in radii:
        z = r * np.exp(1j * theta)
        mod = np.abs(evaluate(f, z))
        lower, upper = distortion_bounds(params, b1, r)
        hi, lo = int(np.argmax(mod)), int(np.argmin(mod))
        for margin, idx in ((upper - mod[hi], hi), (mod[lo] - lower, lo)):
            if margin < worst:
                worst, witness = float(margin), complex(z[idx])
    passed = worst >= -FUNCTIONAL_TOL
    return ClaimReport(ClaimId.DISTORTION, passed, worst, witness,
                       None if passed else f,
                       weight_dominance_diagnostics(params, max(f.degree, 2)),
                       {"radii": [float(r) for r in radii], "angles": angles})


def convexity_criterion(f: HarmonicSeries, beta: float, r: float) -> float:
    """Slack (1 - beta - |b_1|) - sum_{v>=2} v^2 (|a_v| + |b_v|) r^(v-1)."""
    v = np.arange(2, f.degree + 1)
    mods = np.abs(f.a[1:]) + np.abs(f.b[1:])
    lhs = float(np.sum(v ** 2 * mods * r ** (v - 1.0)))
    return 1.0 - beta - abs(f.b[0]) - lhs


def check_convexity(f: HarmonicSeries, params: ClassParams, safety: float = 0.999,
                    radius: float | None = None) -> ClaimReport:
    """Checks the coefficient criterion for convexity at safety * r*.

    ``radius`` overrides the evaluation radius (for probing beyond r*).
    """
    if not is_member_thp(f, params):
        raise PreconditionViolated("f is not a member")
    b1 = abs(f.b[0])
    if not 1 - params.beta > b1:
        raise PreconditionViolated("requires 1 - beta > |b_1|")
    rstar = convexity_radius(params.beta, b1, max(f.degree, 2))
    r = safety * rstar.radius if radius is None else radius
    slack = convexity_criterion(f, params.beta, r)
    passed = slack >= -COEFF_TOL
    return ClaimReport(ClaimId.CONVEXITY_DISC, passed, slack, complex(r), None if passed else f,
                       weight_dominance_diagnostics(params, max(f.degree, 2)),
                       {"r_star": rstar.radius, "argmin_v": rstar.v, "radius": r})


def starlike_coefficient_sum(G: HarmonicSeries) -> float:
    """|D_1| + sum_{v>=2} v (|C_v| + |D_v|)."""
    v = np.arange(2, G.degree + 1)
    return float(abs(G.b[0]) + np.sum(v * (np.abs(G.a[1:]) + np.abs(G.b[1:]))))


def sample_neighbor(f: HarmonicSeries, delta: float, rng: np.random.Generator) -> HarmonicSeries:
    """Random negative-coefficient G with neighborhood_distance(f, G) <= delta.

    A random fraction of delta is split over the coefficient slots; each
    slot's share is divided by its distance weight (1 for b_1, v otherwise)
    and applied as a signed change of modulus, clamped at zero.
    """
    n = f.degree
    v = np.arange(1, n + 1, dtype=float)
    slot_w = np.concatenate([v[1:], v])            # a_2..a_N, b_1..b_N
    old = np.concatenate([np.abs(f.a[1:]), np.abs(f.b)])
    cuts = np.sort(rng.uniform(size=slot_w.size - 1))
    shares = np.diff(np.concatenate([[0.0], cuts, [1.0]]))
    spend = delta * rng.uniform() * shares
    signs = rng.choice([-1.0, 1.0], size=slot_w.size)
    new = np.maximum(old + signs * spend / slot_w, 0.0)
    b1_index = n - 1
    new[b1_index] = min(new[b1_index], np.nextafter(1.0, 0.0))
    a = np.concatenate([[1.0], -new[:n - 1]]).astype(complex)
    b = -new[n - 1:].astype(complex)
    return HarmonicSeries(a, b, Convention.NEGATIVE_THP)


def check_neighborhood_starlike(f: HarmonicSeries, params: ClassParams, delta: float,
                                trials: int = 1000, seed: int = 0) -> ClaimReport:
    if not is_member_thp(f, params):
        raise PreconditionViolated("f is not a member")
    if not 0 <= delta <= params.beta:
        raise PreconditionViolated("requires 0 <= delta <= beta")
    rng = np.random.default_rng(seed)
    worst, witness, max_dist = -np.inf, None, 0.0
    for _ in range(trials):
        G = f if delta == 0 else sample_neighbor(f, delta, rng)
        max_dist = max(max_dist, neighborhood_distance(f, G))
        s = starlike_coefficient_sum(G)
        if s > worst:
            worst, witness = s, G
    passed = worst <= 1 + COEFF_TOL
    return ClaimReport(ClaimId.NEIGHBORHOOD_STARLIKE, passed, float(worst), None,
                       None if passed else witness,
                       weight_dominance_diagnostics(params, max(f.degree, 2)),
                       {"delta": delta, "trials": trials, "seed": seed,
                        "max_distance": max_dist})


def convolution_slack(f: HarmonicSeries, G: HarmonicSeries,
                      params1: ClassParams, params2: ClassParams) -> float:
    """min over both parameter triples of (1 - beta) - coefficient_sum(f*G)."""
    fg = convolve(f, G)
    return min(p.budget - coefficient_sum(fg, p) for p in (params1, params2))


def _seeds(seed: int, n: int) -> list[int]:
    return [int(s) for s in np.random.default_rng(seed).integers(0, 2**63 - 1, size=n)]


def check_convolution_closure(params1: ClassParams, params2: ClassParams,
                              trials: int = 1000, seed: int = 0,
                              degree: int = DEFAULT_DEGREE) -> ClaimReport:
    """f in THP(params2), G in THP(params1); f*G must lie in both classes."""
    if not (params1.alpha <= params2.alpha and params1.beta <= params2.beta
            and params1.m == params2.m):
        raise PreconditionViolated("need alpha1 <= alpha2, beta1 <= beta2, equal m")
    seeds = _seeds(seed, 2 * trials)
    worst, witness = np.inf, None
    for i in range(trials):
        f = random_member(params2, degree, seeds[2 * i])
        G = random_member(params1, degree, seeds[2 * i + 1])
        slack = convolution_slack(f, G, params1, params2)
        if slack < worst:
            worst, witness = slack, convolve(f, G)
    passed = worst >= -COEFF_TOL
    return ClaimReport(ClaimId.CONVOLUTION_CLOSURE, passed, float(worst), None,
                       None if passed else witness,
                       weight_dominance_diagnostics(params2, max(degree, 2)),
                       {"trials": trials, "seed": seed})


def _extrapolate_to_one(xs: np.ndarray, ys: np.ndarray) -> float:
    """Neville extrapolation of y(x) to x = 1 in the variable t = 1 - x."""
    t = 1.0 - xs
    p = list(ys)
    n = len(p)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = (t[i + k] * p[i] - t[i] * p[i + 1]) / (t[i + k] - t[i])
    return float(p[0])


def check_necessity(f: HarmonicSeries, params: ClassParams,
                    approach: Sequence[float] = DEFAULT_APPROACH) -> ClaimReport:
    """Compares the coefficient verdict with the z -> 1^- limit of the functional."""
    if not f.is_thp:
        raise PreconditionViolated("f must be negative_thp")
    if params.m % 2:
        raise PreconditionViolated("necessity check needs even m")
    xs = np.asarray(approach, dtype=float)
    if np.any((xs <= 0) | (xs >= 1)):
        raise PreconditionViolated("approach points must lie in (0, 1)")
    ys = class_functional_values(f, params, xs.astype(complex))
    limit = _extrapolate_to_one(xs, ys)
    member = is_member_thp(f, params)
    indeterminate = abs(limit - params.beta) <= NECESSITY_BAND
    agree = (limit >= params.beta) == member
    passed = indeterminate or agree
    return ClaimReport(ClaimId.NECESSITY, passed, limit, None,
                       None if passed else f, None,
                       {"values": [float(y) for y in ys], "approach": [float(x) for x in xs],
                        "coefficient_limit": 1 - coefficient_sum(f, params),
                        "member": member, "indeterminate": indeterminate})


_SEARCHABLE = (ClaimId.SUFFICIENCY_FUNCTIONAL, ClaimId.SENSE_PRESERVING,
               ClaimId.STARLIKE, ClaimId.DISTORTION, ClaimId.NEIGHBORHOOD_STARLIKE)


def _run_claim(claim_id, f, params, grid, seed, diag):
    if claim_id is ClaimId.SUFFICIENCY_FUNCTIONAL:
        return check_class_functional_min(f, params, grid)
    if claim_id is ClaimId.SENSE_PRESERVING:
        return check_sense_preserving(f, grid, diag)
    if claim_id is ClaimId.STARLIKE:
        return check_starlike(f, grid, diag)
    if claim_id is ClaimId.DISTORTION:
        return check_distortion(f, params, grid.radii, grid.angles_per_radius)
    return check_neighborhood_starlike(f, params, params.beta, 1, seed)


def find_counterexample(claim_id: ClaimId, params: ClassParams, trials: int = 1000,
                        seed: int = 0, grid: SampleGrid = DEFAULT_GRID,
                        degree: int = DEFAULT_DEGREE) -> ClaimReport:
    """Runs a checker over random members and returns the first failure,
    or a passing report carrying the tightest margin seen."""
    if claim_id not in _SEARCHABLE:
        raise ValueError(f"claim {claim_id.value} is not searchable")
    diag = weight_dominance_diagnostics(params, max(degree, 2))
    convention = (Convention.GENERAL if claim_id is ClaimId.SUFFICIENCY_FUNCTIONAL
                  else Convention.NEGATIVE_THP)
    # neighborhood sums are maximised, the grid claims minimised
    sign = -1.0 if claim_id is ClaimId.NEIGHBORHOOD_STARLIKE else 1.0
    best = None
    for i, s in enumerate(_seeds(seed, trials)):
        f = random_member(params, degree, s, convention)
        rep = _run_claim(claim_id, f, params, grid, s, diag)
        rep.diagnostics = diag
        rep.details.update(trial=i, member_seed=s, trials=trials, seed=seed)
        if not rep.passed:
            return rep
        if best is None or sign * rep.extremal_value < sign * best.extremal_value:
            best = rep
    best.witness_function = None
    best.details["trials_completed"] = trials
    return best


def reverify(report: ClaimReport, params: ClassParams | None = None) -> bool:
    """Recomputes a failing witness from scratch; True if the failure is real."""
    f, z = report.witness_function, report.witness_point
    if f is None:
        return False
    cid = report.claim_id
    if cid is ClaimId.SENSE_PRESERVING:
        return jacobian(f, z) <= 0
    if cid is ClaimId.STARLIKE:
        val = starlike_values(f, z)
        return bool(val <= FUNCTIONAL_TOL)
    if cid is ClaimId.SUFFICIENCY_FUNCTIONAL:
        return bool(class_functional_values(f, params, np.asarray(z)) < params.beta - FUNCTIONAL_TOL)
    if cid is ClaimId.DISTORTION:
        r = abs(z)
        lower, upper = distortion_bounds(params, abs(f.b[0]), r)
        mod = abs(evaluate(f, z))
        return mod > upper + FUNCTIONAL_TOL or mod < lower - FUNCTIONAL_TOL
    if cid is ClaimId.NEIGHBORHOOD_STARLIKE:
        return starlike_coefficient_sum(f) > 1 + COEFF_TOL
    if cid is ClaimId.CONVEXITY_DISC:
        return convexity_criterion(f, params.beta, z.real) < -COEFF_TOL
    if cid is ClaimId.CONVOLUTION_CLOSURE:
        return any(coefficient_sum(f, p) > p.budget + COEFF_TOL
                   for p in ([params] if params else []))
    return False


def random_scaled_thp(params: ClassParams, degree: int = DEFAULT_DEGREE, seed: int = 0,
                      scale: tuple[float, float] = (0.5, 1.5)) -> HarmonicSeries:
    """A member rescaled by a random factor, so roughly half the draws are
    non-members; |b_1| is kept below 1."""
    rng = np.random.default_rng(seed)
    f = random_member(params, degree, int(rng.integers(0, 2**63 - 1)))
    c = rng.uniform(*scale)
    b1 = abs(f.b[0])
    if b1 > 0:
        c = min(c, 0.999 / b1)
    a = f.a * c
    a[0] = 1.0
    return HarmonicSeries(a, f.b * c, Convention.NEGATIVE_THP)
