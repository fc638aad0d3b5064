"""Radius equations: majorant assembly and monotone root finding.

For each supported (class, inequality-variant) pair the worst-case left-hand
side of the inequality — every |omega(z)| replaced by r — is a strictly
increasing majorant of r.  Subtracting the class distance bound gives the
deficiency function, whose unique zero in (0, 1) is the sharp radius.  The
zero is bracketed by a coarse scan and closed by bisection, which converges
unconditionally and requires no derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Optional, Union

from .classes import (
    AlphaConvex,
    AlphaConvexBounds,
    ClassSpec,
    Janowski,
    SecondOrder,
    TypicallyReal,
    distance_bound,
    growth_l,
    janowski_bounds,
    second_order_bounds,
)
from .errors import DomainError, NoRootInInterval
from .special import (
    B_EPS,
    DEFAULT_CONFIG,
    SeriesConfig,
    bessel_j0_weighted_sums,
    gauss_2f1_sum,
    sum_n2_tail,
    sum_n3_full,
    truncated_sum,
)

DEFAULT_TOL = 1e-10
RESIDUAL_TOL = 1e-9
END_GUARD = 1e-6  # scan stops at r = 1 - END_GUARD
_ZERO_PLUS = 1e-9  # probe point for the deficiency(0+) sign test


class PhiSpec(Enum):
    """Named refinement weights t -> Phi(t) on [0, 1).

    Every member is continuous and nondecreasing with values in [0, inf);
    ZERO is the degenerate weight that switches the refinement term off.
    HALF_GEOM diverges as t -> 1-.
    """

    ZERO = "zero"
    IDENTITY = "identity"
    EXP = "exp"
    SIN = "sin"
    LOG1P = "log1p"
    HALF_GEOM = "half-geom"

    def __call__(self, t: float) -> float:
        if not 0.0 <= t < 1.0:
            raise DomainError(f"phi weights are defined on [0, 1), got t={t}")
        if self is PhiSpec.ZERO:
            return 0.0
        if self is PhiSpec.IDENTITY:
            return t
        if self is PhiSpec.EXP:
            return math.exp(t)
        if self is PhiSpec.SIN:
            return math.sin(t)
        if self is PhiSpec.LOG1P:
            return math.log1p(t)
        return 0.5 + t / (1.0 - t)


@dataclass(frozen=True)
class Refined:
    """Series inequality refined by Phi times the squared-coefficient tail."""

    phi: PhiSpec


@dataclass(frozen=True)
class PowerP:
    """Inequality with the |f|^p growth term added, p >= 0 (Janowski only)."""

    p: float

    def __post_init__(self) -> None:
        if not self.p >= 0.0:
            raise DomainError(f"PowerP needs p >= 0, got {self.p}")


@dataclass(frozen=True)
class Area:
    """Inequality with Phi times the normalized image area added."""

    phi: PhiSpec


Variant = Union[Refined, PowerP, Area]


@dataclass(frozen=True)
class RadiusProblem:
    """A function class together with the inequality variant to solve."""

    cls: ClassSpec
    variant: Variant

    def __post_init__(self) -> None:
        if isinstance(self.variant, PowerP) and not isinstance(self.cls, Janowski):
            raise DomainError("the power variant is defined for the Janowski class only")
        if isinstance(self.variant, Area) and isinstance(self.cls, SecondOrder):
            raise DomainError("the area variant is not defined for the second-order class")


@dataclass(frozen=True)
class RadiusResult:
    """Solved radius with the final bracket and residual diagnostics."""

    root: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    truncation_report: dict[str, int] = field(default_factory=dict)


class _LazyBounds:
    """1-based coefficient-bound table filled on demand from a generator."""

    def __init__(self, gen: Iterator[float]):
        self._gen = gen
        self._vals: list[float] = []

    def __call__(self, n: int) -> float:
        vals = self._vals
        while len(vals) < n:
            vals.append(next(self._gen))
        return vals[n - 1]


def _bound_series_terms(
    bound_at: Callable[[int], float],
    r: float,
    start: int,
    *,
    square: bool = False,
    weighted: bool = False,
) -> Iterator[float]:
    """Terms b_n r^n (or b_n^2 r^(2n), optionally n-weighted) for n >= start."""
    step = r * r if square else r
    power = step**start
    n = start
    while True:
        b = bound_at(n)
        t = (b * b if square else b) * power
        yield n * t if weighted else t
        power *= step
        n += 1


class _MajorantEvaluator:
    """Evaluates the worst-case inequality LHS for one problem repeatedly.

    Holding the evaluator across calls keeps the coefficient-bound tables
    (notably the alpha-convex power recurrence) warm between radius probes.
    """

    def __init__(self, prob: RadiusProblem, cfg: SeriesConfig = DEFAULT_CONFIG):
        self.prob = prob
        self.cfg = cfg
        spec = prob.cls
        self._bounds: Optional[_LazyBounds] = None
        if isinstance(spec, Janowski) and abs(spec.B) > B_EPS:
            self._bounds = _LazyBounds(janowski_bounds(spec))
        elif isinstance(spec, SecondOrder):
            self._bounds = _LazyBounds(second_order_bounds(spec))
        elif isinstance(spec, AlphaConvex):
            ac = AlphaConvexBounds(spec.alpha)
            self._bounds = _LazyBounds(iter(ac.bound(m) for m in _count_from(1)))

    def __call__(self, r: float, report: Optional[dict[str, int]] = None) -> float:
        if not 0.0 <= r < 1.0:
            raise DomainError(f"majorant needs 0 <= r < 1, got {r}")
        prob, cfg = self.prob, self.cfg
        spec, variant = prob.cls, prob.variant

        if isinstance(spec, TypicallyReal):
            head = r / (1.0 - r) ** 2
            phi_t = _phi_factor(variant, r)
            if phi_t == 0.0:
                return head
            tail = sum_n2_tail(r * r) if isinstance(variant, Refined) else sum_n3_full(r * r)
            return head + phi_t * tail

        if isinstance(spec, Janowski) and abs(spec.B) <= B_EPS:
            return self._janowski_exponential(spec.A, r, report)

        assert self._bounds is not None
        bound_at = self._bounds

        if isinstance(spec, SecondOrder):
            main = truncated_sum(
                _bound_series_terms(bound_at, r, 1), cfg, "second-order majorant series"
            )
            _note(report, "majorant_series", main.terms)
            total = main.value
        else:
            main = truncated_sum(_bound_series_terms(bound_at, r, 2), cfg, "majorant series")
            _note(report, "majorant_series", main.terms)
            total = r + main.value

        if isinstance(variant, PowerP):
            assert isinstance(spec, Janowski)
            return growth_l(spec, r) ** variant.p + total

        phi_t = _phi_factor(variant, r)
        if phi_t == 0.0:
            return total
        if isinstance(variant, Refined):
            sq = truncated_sum(
                _bound_series_terms(bound_at, r, 2, square=True), cfg, "refinement series"
            )
            _note(report, "refinement_series", sq.terms)
            return total + phi_t * sq.value
        # area: n-weighted squared series including the n = 1 term r^2
        ar = truncated_sum(
            _bound_series_terms(bound_at, r, 2, square=True, weighted=True),
            cfg,
            "area series",
        )
        _note(report, "area_series", ar.terms)
        return total + phi_t * (r * r + ar.value)

    def _janowski_exponential(
        self, a: float, r: float, report: Optional[dict[str, int]]
    ) -> float:
        """Closed Bessel-kernel forms for the B = 0 branch."""
        variant = self.prob.variant
        head = r * math.exp(a * r)
        if isinstance(variant, PowerP):
            return r**variant.p * math.exp(a * variant.p * r) + head
        phi_t = _phi_factor(variant, r)
        if phi_t == 0.0:
            return head
        sums = bessel_j0_weighted_sums(a, r, self.cfg)
        _note(report, "bessel_series", sums.terms)
        if isinstance(variant, Refined):
            return head + phi_t * r * r * (sums.j0 - 1.0)
        return head + phi_t * r * r * (sums.j0 + sums.rj0p)


def _count_from(start: int) -> Iterator[int]:
    n = start
    while True:
        yield n
        n += 1


def _phi_factor(variant: Variant, r: float) -> float:
    phi = variant.phi  # type: ignore[union-attr]
    if phi is PhiSpec.ZERO:
        return 0.0
    return phi(r)


def _note(report: Optional[dict[str, int]], key: str, terms: int) -> None:
    if report is not None:
        report[key] = max(report.get(key, 0), terms)


def majorant(
    prob: RadiusProblem,
    r: float,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    report: Optional[dict[str, int]] = None,
) -> float:
    """Worst-case inequality LHS at radius r (|omega(z)| = r everywhere)."""
    return _MajorantEvaluator(prob, cfg)(r, report)


def deficiency(
    prob: RadiusProblem,
    r: float,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    report: Optional[dict[str, int]] = None,
) -> float:
    """majorant(r) minus the class distance bound; strictly increasing in r."""
    return majorant(prob, r, cfg, report) - distance_bound(prob.cls, cfg)


def _scan_grid() -> Iterator[float]:
    """Geometric-then-uniform bracketing grid on (0, 1 - END_GUARD]."""
    yield from (1e-6, 1e-5, 1e-4, 1e-3)
    step = 0.02
    r = 0.01
    while r < 0.99:
        yield r
        r += step
    yield from (0.995, 0.999, 0.9999, 1.0 - END_GUARD)


def solve_radius(
    prob: RadiusProblem, tol: float = DEFAULT_TOL, cfg: SeriesConfig = DEFAULT_CONFIG
) -> RadiusResult:
    """Find the sharp radius as the unique zero of the deficiency.

    Scans a geometric-then-uniform grid for the first sign change (the
    deficiency is strictly increasing, so the first nonnegative grid point
    closes a bracket), then bisects to bracket width <= tol and a residual
    at the midpoint below RESIDUAL_TOL.
    """
    if not tol > 0.0:
        raise DomainError(f"solve_radius needs tol > 0, got {tol}")
    evaluate = _MajorantEvaluator(prob, cfg)
    dist = distance_bound(prob.cls, cfg)

    def f(r: float, report: Optional[dict[str, int]] = None) -> float:
        return evaluate(r, report) - dist

    if f(_ZERO_PLUS) >= 0.0:
        raise NoRootInInterval(
            "deficiency is already nonnegative arbitrarily close to 0 "
            "(the inequality fails on every positive radius)"
        )
    lo, flo = _ZERO_PLUS, -1.0
    hi = None
    for r in _scan_grid():
        fr = f(r)
        if fr >= 0.0:
            hi = r
            break
        lo = r
    if hi is None:
        raise NoRootInInterval(f"no sign change of the deficiency below r = {1.0 - END_GUARD}")

    iterations = 0
    fm = math.inf
    while iterations < 200:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break  # float resolution reached
        fm = f(mid)
        iterations += 1
        if fm < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol and abs(fm) <= RESIDUAL_TOL:
            break

    root = 0.5 * (lo + hi)
    report: dict[str, int] = {}
    residual = f(root, report)
    return RadiusResult(
        root=root,
        bracket=(lo, hi),
        residual=residual,
        iterations=iterations,
        truncation_report=report,
    )


def closed_form_starlike_alpha(
    alpha: float, phi: PhiSpec, r: float, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """Deficiency for starlike functions of order alpha in closed form.

    r (1-r)^(2(alpha-1)) + Phi(r) (2F1(2-2a, 2-2a; 1; r^2) - 1) r^2 - 4^(alpha-1);
    agrees with the general Janowski path at A = 1 - 2 alpha, B = -1.
    """
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"closed_form_starlike_alpha needs 0 <= alpha < 1, got {alpha}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"closed_form_starlike_alpha needs 0 <= r < 1, got {r}")
    value = r * (1.0 - r) ** (2.0 * (alpha - 1.0)) - 2.0 ** (-2.0 * (1.0 - alpha))
    if phi is not PhiSpec.ZERO:
        a = 2.0 - 2.0 * alpha
        hyp = gauss_2f1_sum(a, a, 1.0, r * r, cfg).value
        value += phi(r) * (hyp - 1.0) * r * r
    return value
