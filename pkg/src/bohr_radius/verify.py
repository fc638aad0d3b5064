"""Independent numerical cross-checks.

Four kinds of evidence that the solver-side machinery is right:

* closed forms versus brute-force partial sums (series identities),
* the two computation paths for the alpha-convex coefficient bounds,
* the inequality evaluated end-to-end with extremal coefficients and an
  actual Schwarz self-map, sampled inside the solved radius,
* a sharpness bracket around each solved radius.

Checks report failures through :class:`CheckReport` instead of raising, so a
broken configuration (for example a starved term budget) surfaces as a
failed report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .classes import (
    ClassSpec,
    SecondOrder,
    coeff_bound_alpha_convex,
    distance_bound,
    extremal_bounds,
)
from .errors import BohrRadiusError, DomainError, TruncationFailure
from .output import describe_problem
from .solver import (
    DEFAULT_CONFIG,
    RESIDUAL_TOL,
    Area,
    PowerP,
    RadiusProblem,
    RadiusResult,
    Refined,
    SeriesConfig,
    Variant,
    _phi_factor,
    solve_radius,
)
from .special import bessel_j0_weighted_sums, gauss_2f1

DEFAULT_SEED = 2718

IDENTITY_TOL = 1e-10  # relative, for all series identities
DUAL_METHOD_TOL = 1e-10  # relative, partition vs series coefficient bounds
SCHWARZ_SLACK = 1e-9  # additive slack for sampled end-to-end inequality


# ---------------------------------------------------------------------------
# Schwarz self-maps of the unit disk with omega(0) = 0
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """omega(z) = z^m."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"Monomial needs m >= 1, got {self.m}")


@dataclass(frozen=True)
class ScaledIdentity:
    """omega(z) = c z with 0 <= c <= 1."""

    c: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.c <= 1.0:
            raise DomainError(f"ScaledIdentity needs c in [0, 1], got {self.c}")


@dataclass(frozen=True)
class BlaschkeTwist:
    """omega(z) = z (a - z) / (1 - conj(a) z) with |a| < 1."""

    a: complex

    def __post_init__(self) -> None:
        if not abs(self.a) < 1.0:
            raise DomainError(f"BlaschkeTwist needs |a| < 1, got {self.a}")


SchwarzSpec = Union[Monomial, ScaledIdentity, BlaschkeTwist]


def schwarz_value(w: SchwarzSpec, z: complex) -> complex:
    """Evaluate the Schwarz self-map at z (|z| < 1)."""
    if not abs(z) < 1.0:
        raise DomainError(f"Schwarz maps live on the open unit disk, got |z|={abs(z)}")
    if isinstance(w, Monomial):
        return z**w.m
    if isinstance(w, ScaledIdentity):
        return w.c * z
    if isinstance(w, BlaschkeTwist):
        return z * (w.a - z) / (1.0 - w.a.conjugate() * z)
    raise TypeError(f"not a SchwarzSpec: {w!r}")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check: passed iff max_abs_error is within its tolerance."""

    name: str
    passed: bool
    max_abs_error: float
    details: str


# ---------------------------------------------------------------------------
# Inequality LHS evaluated from extremal coefficients (solver-independent)
# ---------------------------------------------------------------------------


class _ExtremalSeries:
    """Partial-sum evaluation of the inequality LHS at explicit coefficients."""

    def __init__(self, spec: ClassSpec, cfg: SeriesConfig):
        self._gen = extremal_bounds(spec)
        self._vals: list[float] = []
        self._cfg = cfg

    def _bound(self, n: int) -> float:
        while len(self._vals) < n:
            self._vals.append(next(self._gen))
        return self._vals[n - 1]

    def sum(self, x: float, start: int, *, square: bool = False, weighted: bool = False) -> float:
        """sum_{n>=start} b_n x^n (optionally squared bounds at x^2, n-weighted)."""
        step = x * x if square else x
        power = step**start
        total = 0.0
        n = start
        for _ in range(self._cfg.max_terms):
            b = self._bound(n)
            t = (b * b if square else b) * power
            if weighted:
                t *= n
            total += t
            if t <= self._cfg.term_tol * total:
                return total
            power *= step
            n += 1
        raise TruncationFailure(
            f"extremal series: no convergence within {self._cfg.max_terms} terms at x={x}"
        )


def _lhs_from_coeffs(
    prob: RadiusProblem, w_abs: float, r_abs: float, cfg: SeriesConfig
) -> float:
    """Inequality LHS with extremal coefficients, |omega(z)| = w_abs, |z| = r_abs.

    The plain coefficient series run at w_abs; the growth term of the power
    variant and the area term always live at the sample radius r_abs.
    """
    series = _ExtremalSeries(prob.cls, cfg)
    variant: Variant = prob.variant
    if isinstance(prob.cls, SecondOrder):
        head = series.sum(w_abs, 1)
    else:
        head = w_abs + series.sum(w_abs, 2)
    if isinstance(variant, PowerP):
        growth = series.sum(r_abs, 1)
        return growth**variant.p + head
    phi_t = _phi_factor(variant, w_abs)
    if phi_t == 0.0:
        return head
    if isinstance(variant, Refined):
        return head + phi_t * series.sum(w_abs, 2, square=True)
    return head + phi_t * series.sum(r_abs, 1, square=True, weighted=True)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def _relerr(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return abs(lhs - rhs) / scale


def check_series_identities(cfg: SeriesConfig = DEFAULT_CONFIG) -> CheckReport:
    """Closed forms versus brute-force partial sums on fixed grids.

    (i)  sum_{n>=2} (a^(n-1)/(n-1)!)^2 r^(2n)      = r^2 (j0 - 1)
    (ii) sum_{n>=2} n (a^(n-1)/(n-1)!)^2 r^(2n)    = r^2 (-1 + j0 + rj0p)
    (iii) the two rational power-sum closed forms
    (iv) 2F1(q, q; 1; x) - 1                        = sum_{m>=1} ((q)_m / m!)^2 x^m

    All comparisons at 1e-10 relative; the brute-force sides iterate until
    their own terms fall below 1e-16 relative, independent of the
    truncated-sum machinery under test.
    """
    name = "series-identities"
    worst = 0.0
    worst_at = ""

    def track(err: float, where: str) -> None:
        nonlocal worst, worst_at
        if err > worst:
            worst, worst_at = err, where

    r_grid = [0.05 * i for i in range(1, 20)]  # 0.05 .. 0.95
    x_grid = [0.05 * i for i in range(0, 20)]  # 0.00 .. 0.95
    try:
        for a in (0.25, 0.5, 1.0, 1.5):
            for r in r_grid:
                sums = bessel_j0_weighted_sums(a, r, cfg)
                lhs1 = lhs2 = 0.0
                t = (a * r * r) ** 2  # n = 2 term (a^1/1!)^2 r^4
                n = 2
                while True:
                    lhs1 += t
                    lhs2 += n * t
                    if n * t <= 1e-16 * (lhs1 + lhs2):
                        break
                    t *= (a * r / n) ** 2
                    n += 1
                track(_relerr(lhs1, r * r * (sums.j0 - 1.0)), f"(i) a={a} r={r:.2f}")
                track(
                    _relerr(lhs2, r * r * (-1.0 + sums.j0 + sums.rj0p)),
                    f"(ii) a={a} r={r:.2f}",
                )
        from .special import sum_n2_tail, sum_n3_full

        for x in x_grid:
            brute2 = brute3 = 0.0
            if x > 0.0:
                t = x
                n = 1
                while True:
                    if n >= 2:
                        brute2 += n * n * t
                    brute3 += n * n * n * t
                    if n > 2 and n**3 * t <= 1e-16 * max(brute3, 1e-300):
                        break
                    t *= x
                    n += 1
            track(_relerr(brute2, sum_n2_tail(x)), f"(iii) n^2 x={x:.2f}")
            track(_relerr(brute3, sum_n3_full(x)), f"(iii) n^3 x={x:.2f}")
        for alpha in (0.0, 0.25, 0.5):
            q = 2.0 - 2.0 * alpha
            for r in [0.05 * i for i in range(1, 13)]:  # r <= 0.6
                x = r * r
                brute = 0.0
                poch_over_fact = 1.0
                m = 1
                while True:
                    poch_over_fact *= (q + m - 1.0) / m
                    term = poch_over_fact**2 * x**m
                    brute += term
                    if m > 2 and term <= 1e-16 * max(brute, 1e-300):
                        break
                    m += 1
                track(
                    _relerr(brute, gauss_2f1(q, q, 1.0, x, cfg) - 1.0),
                    f"(iv) alpha={alpha} r={r:.2f}",
                )
    except BohrRadiusError as exc:
        return CheckReport(name, False, math.inf, f"aborted: {exc}")
    passed = worst <= IDENTITY_TOL
    return CheckReport(
        name, passed, worst, f"max relative error {worst:.3g} at {worst_at}; tol {IDENTITY_TOL}"
    )


def check_sharpness(
    prob: RadiusProblem,
    res: RadiusResult,
    eps: float,
    cfg: SeriesConfig = DEFAULT_CONFIG,
) -> CheckReport:
    """The extremal function crosses the distance bound at the solved radius.

    Evaluates the LHS from extremal coefficients with omega(z) = z at
    root -/+ eps and demands LHS(root - eps) < distance < LHS(root + eps).
    """
    width = res.bracket[1] - res.bracket[0]
    if eps <= max(RESIDUAL_TOL, width):
        raise DomainError(
            f"sharpness eps={eps} must exceed the solver resolution "
            f"(bracket width {width:.3g}, residual tolerance {RESIDUAL_TOL})"
        )
    if not 0.0 < res.root - eps and res.root + eps < 1.0:
        raise DomainError(f"root +/- eps leaves (0, 1): root={res.root}, eps={eps}")
    name = f"sharpness: {describe_problem(prob)}"
    try:
        d = distance_bound(prob.cls, cfg)
        below = _lhs_from_coeffs(prob, res.root - eps, res.root - eps, cfg)
        above = _lhs_from_coeffs(prob, res.root + eps, res.root + eps, cfg)
    except BohrRadiusError as exc:
        return CheckReport(name, False, math.inf, f"aborted: {exc}")
    violation = max(0.0, below - d, d - above)
    passed = violation == 0.0
    details = (
        f"LHS(root-eps)={below!r} < distance={d!r} < LHS(root+eps)={above!r}"
        if passed
        else f"bracket failed: LHS(root-eps)={below!r}, distance={d!r}, LHS(root+eps)={above!r}"
    )
    return CheckReport(name, passed, violation, details)


def check_schwarz_end_to_end(
    prob: RadiusProblem,
    w: SchwarzSpec,
    samples: int,
    seed: int = DEFAULT_SEED,
    cfg: SeriesConfig = DEFAULT_CONFIG,
) -> CheckReport:
    """Sampled inequality with a genuine Schwarz map inside the solved radius.

    Draws z uniformly from the disk |z| <= root, computes |omega(z)| from w,
    and checks the extremal-coefficient LHS never exceeds the distance bound
    by more than SCHWARZ_SLACK.
    """
    if samples < 1:
        raise DomainError(f"need samples >= 1, got {samples}")
    name = f"schwarz {w!r}: {describe_problem(prob)}"
    try:
        res = solve_radius(prob, cfg=cfg)
        d = distance_bound(prob.cls, cfg)
        rng = np.random.default_rng(seed)
        worst = -math.inf
        contraction_ok = True
        for _ in range(samples):
            radius = res.root * math.sqrt(rng.uniform())
            theta = rng.uniform(0.0, 2.0 * math.pi)
            z = complex(radius * math.cos(theta), radius * math.sin(theta))
            w_abs = abs(schwarz_value(w, z))
            if w_abs > abs(z) + 1e-12:
                contraction_ok = False
            worst = max(worst, _lhs_from_coeffs(prob, w_abs, abs(z), cfg) - d)
    except BohrRadiusError as exc:
        return CheckReport(name, False, math.inf, f"aborted: {exc}")
    excess = max(0.0, worst)
    passed = excess <= SCHWARZ_SLACK and contraction_ok
    details = (
        f"max(LHS - distance) = {worst!r} over {samples} samples inside r={res.root:.6f}; "
        f"|omega(z)| <= |z| {'held' if contraction_ok else 'VIOLATED'}"
    )
    return CheckReport(name, passed, excess, details)


def check_alpha_convex_dual(
    alpha_grid: tuple[float, ...] = (0.5, 1.0, 1.5, 2.0), m_max: int = 20
) -> CheckReport:
    """Partition-sum versus series-composition coefficient bounds.

    Also pins the alpha = 1 column to the constant bound 1.
    """
    if m_max > 20:
        raise DomainError(f"enumeration side is limited to m_max <= 20, got {m_max}")
    name = "alpha-convex dual-method bounds"
    worst = 0.0
    worst_at = ""
    try:
        for alpha in alpha_grid:
            for m in range(2, m_max + 1):
                enum = coeff_bound_alpha_convex(alpha, m, method="partition")
                comp = coeff_bound_alpha_convex(alpha, m, method="series")
                err = _relerr(enum, comp)
                if alpha == 1.0:
                    err = max(err, abs(comp - 1.0), abs(enum - 1.0))
                if err > worst:
                    worst, worst_at = err, f"alpha={alpha} m={m}"
    except BohrRadiusError as exc:
        return CheckReport(name, False, math.inf, f"aborted: {exc}")
    passed = worst <= DUAL_METHOD_TOL
    return CheckReport(
        name,
        passed,
        worst,
        f"max relative disagreement {worst:.3g} at {worst_at}; tol {DUAL_METHOD_TOL}",
    )


# ---------------------------------------------------------------------------
# Default suite
# ---------------------------------------------------------------------------


def _sharpness_entry(
    prob: RadiusProblem, eps: float, cfg: SeriesConfig
) -> CheckReport:
    try:
        res = solve_radius(prob, cfg=cfg)
    except BohrRadiusError as exc:
        return CheckReport(
            f"sharpness: {describe_problem(prob)}", False, math.inf, f"solve aborted: {exc}"
        )
    return check_sharpness(prob, res, eps, cfg)


def default_suite(
    cfg: SeriesConfig = DEFAULT_CONFIG, seed: int = DEFAULT_SEED, samples: int = 64
) -> list[CheckReport]:
    """The checks run by the command-line ``verify`` subcommand."""
    from .classes import AlphaConvex, Janowski, TypicallyReal
    from .solver import PhiSpec

    reports = [check_series_identities(cfg), check_alpha_convex_dual()]
    tr = TypicallyReal()
    sharpness_problems = [
        RadiusProblem(tr, Refined(PhiSpec.IDENTITY)),
        RadiusProblem(tr, Area(PhiSpec.IDENTITY)),
        RadiusProblem(Janowski(1.0, 0.0), Refined(PhiSpec.IDENTITY)),
        RadiusProblem(Janowski(1.0, 0.0), Area(PhiSpec.IDENTITY)),
        RadiusProblem(Janowski(1.0, -1.0), Refined(PhiSpec.ZERO)),
        RadiusProblem(Janowski(0.5, 0.0), PowerP(3.0)),
        RadiusProblem(AlphaConvex(1.0), Refined(PhiSpec.IDENTITY)),
        RadiusProblem(SecondOrder(1.0, 0.0, Janowski(1.0, -1.0)), Refined(PhiSpec.ZERO)),
    ]
    for prob in sharpness_problems:
        reports.append(_sharpness_entry(prob, 1e-3, cfg))
    schwarz_prob = RadiusProblem(tr, Refined(PhiSpec.IDENTITY))
    for w in (
        Monomial(1),
        Monomial(3),
        ScaledIdentity(0.5),
        BlaschkeTwist(complex(0.3, 0.4)),
    ):
        reports.append(check_schwarz_end_to_end(schwarz_prob, w, samples, seed, cfg))
    reports.append(
        check_schwarz_end_to_end(
            RadiusProblem(Janowski(1.0, 0.0), Refined(PhiSpec.IDENTITY)),
            Monomial(2),
            samples,
            seed,
            cfg,
        )
    )
    return reports
