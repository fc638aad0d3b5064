"""Transcendental kernels used by the radius equations.

Everything here is a scalar series or integral with an explicit truncation
policy: Bessel-type sums, the Gauss hypergeometric series, two rational
power sums in closed form, and the boundary-distance integral for the
alpha-convex class.  All sums are driven by a single stopping rule
(:func:`truncated_sum`) so that under-truncation is detected uniformly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from scipy.integrate import quad

from .errors import DomainError, QuadratureFailure, TruncationFailure

# |B| at or below this routes Janowski formulas to the exponential branch;
# the two branches agree in the B -> 0 limit and tiny-denominator powers
# are numerically unstable.
B_EPS = 1e-12


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation and tolerance policy for all series and quadrature.

    max_terms: hard budget per series before TruncationFailure.
    term_tol:  stop once the current term is below term_tol relative to the
               accumulated sum (and the term ratio is safely sub-geometric).
    ratio_cap: consecutive-term ratio above which the tail is not considered
               geometric-dominated and summation keeps going.
    quad_tol:  absolute/relative target for adaptive quadrature.
    """

    max_terms: int = 10000
    term_tol: float = 1e-14
    ratio_cap: float = 0.999
    quad_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.max_terms < 2:
            raise DomainError(f"max_terms must be >= 2, got {self.max_terms}")
        if not 0.0 < self.ratio_cap < 1.0:
            raise DomainError(f"ratio_cap must lie in (0, 1), got {self.ratio_cap}")
        if self.term_tol < 0.0:
            raise DomainError(f"term_tol must be >= 0, got {self.term_tol}")
        if self.quad_tol < 0.0:
            raise DomainError(f"quad_tol must be >= 0, got {self.quad_tol}")


DEFAULT_CONFIG = SeriesConfig()


class SeriesSum(NamedTuple):
    value: float
    terms: int


def truncated_sum(terms: Iterable[float], cfg: SeriesConfig, label: str) -> SeriesSum:
    """Sum a series under the configured stopping policy.

    Stops once the current term magnitude is <= term_tol * |accumulated sum|
    while the consecutive-term ratio sits below ratio_cap; raises
    TruncationFailure if that never happens within max_terms terms.
    """
    total = 0.0
    prev = math.inf
    count = 0
    for term in terms:
        count += 1
        total += term
        mag = abs(term)
        if prev > 0.0:
            ratio = mag / prev
        else:
            ratio = 0.0 if mag == 0.0 else math.inf
        if mag <= cfg.term_tol * abs(total) and ratio < cfg.ratio_cap:
            return SeriesSum(total, count)
        prev = mag
        if count >= cfg.max_terms:
            break
    raise TruncationFailure(
        f"{label}: series did not meet the stopping criterion within {cfg.max_terms} terms"
    )


def bessel_j0(x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """First-kind Bessel function of order zero via its alternating power series."""
    if not math.isfinite(x):
        raise DomainError(f"bessel_j0 needs finite x, got {x}")
    q = -0.25 * x * x

    def terms() -> Iterator[float]:
        t = 1.0
        n = 0
        while True:
            yield t
            n += 1
            t *= q / (n * n)

    return truncated_sum(terms(), cfg, "bessel_j0").value


class WeightedBesselSums(NamedTuple):
    j0: float
    rj0p: float
    terms: int


def bessel_j0_weighted_sums(
    a: float, r: float, cfg: SeriesConfig = DEFAULT_CONFIG
) -> WeightedBesselSums:
    """All-positive Bessel-type sums with term count.

    j0   = sum_{n>=0} (a^2 r^2)^n / (n!)^2
    rj0p = sum_{n>=0} n (a^2 r^2)^n / (n!)^2

    Both sums share one loop so the term budget applies to the pair.
    """
    if not (math.isfinite(a) and math.isfinite(r)):
        raise DomainError("bessel_j0_weighted needs finite inputs")
    if a < 0.0:
        raise DomainError(f"bessel_j0_weighted needs a >= 0, got {a}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"bessel_j0_weighted needs 0 <= r < 1, got {r}")
    y = (a * r) ** 2
    j0 = 0.0
    rj0p = 0.0
    t = 1.0
    for n in range(cfg.max_terms):
        assert t >= 0.0  # all-positive sum by construction
        j0 += t
        rj0p += n * t
        # (n+1)*t dominates both the plain and the n-weighted current term
        bound = (n + 1.0) * t
        ratio = y / ((n + 1) * (n + 1))
        if bound <= cfg.term_tol * (j0 + rj0p) and ratio < cfg.ratio_cap:
            return WeightedBesselSums(j0, rj0p, n + 1)
        t *= y / ((n + 1) * (n + 1))
    raise TruncationFailure(
        f"bessel_j0_weighted: no convergence within {cfg.max_terms} terms (a={a}, r={r})"
    )


def bessel_j0_weighted(
    a: float, r: float, cfg: SeriesConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """Pair (j0, rj0p) of the all-positive Bessel-type sums at a*r."""
    s = bessel_j0_weighted_sums(a, r, cfg)
    return s.j0, s.rj0p


class Hyp2F1Sum(NamedTuple):
    value: float
    terms: int


def gauss_2f1_sum(
    a: float, b: float, c: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG
) -> Hyp2F1Sum:
    """Gauss hypergeometric series with term count."""
    if c <= 0.0 and float(c).is_integer():
        raise DomainError(f"gauss_2f1 is undefined for nonpositive integer c={c}")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"gauss_2f1 needs 0 <= x < 1, got {x}")

    def terms() -> Iterator[float]:
        t = 1.0
        n = 0
        while True:
            yield t
            t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
            n += 1

    value, count = truncated_sum(terms(), cfg, "gauss_2f1")
    return Hyp2F1Sum(value, count)


def gauss_2f1(
    a: float, b: float, c: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG
) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; x) on [0, 1)."""
    return gauss_2f1_sum(a, b, c, x, cfg).value


def sum_n2_tail(x: float) -> float:
    """sum_{n>=2} n^2 x^n in closed form: x^2 (4 - 3x + x^2) / (1 - x)^3."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"sum_n2_tail needs 0 <= x < 1, got {x}")
    return x * x * (4.0 - 3.0 * x + x * x) / (1.0 - x) ** 3


def sum_n3_full(x: float) -> float:
    """sum_{n>=1} n^3 x^n in closed form: x (1 + 4x + x^2) / (1 - x)^4."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"sum_n3_full needs 0 <= x < 1, got {x}")
    return x * (1.0 + 4.0 * x + x * x) / (1.0 - x) ** 4


def k_minus_one(alpha: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Boundary-distance constant of the alpha-convex class.

    Computed as (integral_0^1 (1 + u^alpha)^(-2/alpha) du)^alpha; the
    substitution that produces this form removes the endpoint singularity
    of the defining integral, so the integrand is bounded on [0, 1] for
    every alpha > 0.  Returns the magnitude (a distance, hence >= 0).
    """
    if alpha <= 0.0:
        raise DomainError(f"k_minus_one needs alpha > 0, got {alpha}")

    def integrand(u: float) -> float:
        return (1.0 + u**alpha) ** (-2.0 / alpha)

    result = quad(integrand, 0.0, 1.0, epsabs=cfg.quad_tol, epsrel=cfg.quad_tol, full_output=1)
    if len(result) > 3:
        raise QuadratureFailure(f"k_minus_one(alpha={alpha}): {result[3]}")
    value, abserr = result[0], result[1]
    if abserr > max(cfg.quad_tol, 100.0 * cfg.quad_tol * abs(value)):
        raise QuadratureFailure(
            f"k_minus_one(alpha={alpha}): estimated error {abserr:.3g} above quad_tol"
        )
    return value**alpha
