"""Function classes: parameters, coefficient bounds, growth and distances.

Four families are modelled.  Each one carries sharp coefficient-magnitude
bounds b_n together with a lower bound on the distance from the origin to
the boundary of the image domain; the radius equations in
:mod:`bohr_radius.solver` are assembled purely from these two ingredients.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count, islice
from typing import Iterator, Union

from .errors import CostGuard, DomainError
from .special import B_EPS, DEFAULT_CONFIG, SeriesConfig, k_minus_one

PARTITION_COST_CAP = 40  # partition counts grow superpolynomially past this


@dataclass(frozen=True)
class Janowski:
    """Starlike class steered by (1 + Az) / (1 + Bz) with -1 <= B < A <= 1."""

    A: float
    B: float

    def __post_init__(self) -> None:
        if not -1.0 <= self.B < self.A <= 1.0:
            raise DomainError(
                f"Janowski parameters need -1 <= B < A <= 1, got A={self.A}, B={self.B}"
            )


@dataclass(frozen=True)
class AlphaConvex:
    """Mocanu class interpolating starlike (alpha=0) and convex (alpha=1)."""

    alpha: float

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise DomainError(f"AlphaConvex needs alpha > 0, got {self.alpha}")


@dataclass(frozen=True)
class SecondOrder:
    """Solutions of f + beta z f' + gamma z^2 f'' subordinate to a Janowski target."""

    beta: float
    gamma: float
    h: Janowski

    def __post_init__(self) -> None:
        if not self.beta >= self.gamma >= 0.0:
            raise DomainError(
                f"SecondOrder needs beta >= gamma >= 0, got beta={self.beta}, gamma={self.gamma}"
            )


@dataclass(frozen=True)
class TypicallyReal:
    """Functions with Im f(z) * Im z > 0 off the real axis; |a_n| <= n."""


ClassSpec = Union[Janowski, AlphaConvex, SecondOrder, TypicallyReal]


# ---------------------------------------------------------------------------
# Janowski bounds and growth
# ---------------------------------------------------------------------------


def janowski_bounds(p: Janowski) -> Iterator[float]:
    """Yield the sharp |a_n| bounds for n = 1, 2, 3, ...

    b_1 = 1 (normalization); for n >= 2 the running product
    prod_{k=0}^{n-2} |(B - A) + B k| / (k + 1).
    """
    yield 1.0
    b = 1.0
    k = 0
    while True:
        b *= abs((p.B - p.A) + p.B * k) / (k + 1.0)
        k += 1
        yield b


def coeff_bound_janowski(p: Janowski, n: int) -> float:
    """Sharp bound on |a_n| for the Janowski starlike class (n >= 1)."""
    if n < 1:
        raise DomainError(f"coefficient index must be >= 1, got {n}")
    return next(islice(janowski_bounds(p), n - 1, None))


def growth_l(p: Janowski, r: float) -> float:
    """Maximal modulus of a class member on |z| = r.

    r (1 + Br)^((A-B)/B) for |B| > B_EPS, r e^(Ar) otherwise.
    """
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"growth_l needs 0 <= r <= 1, got {r}")
    if abs(p.B) <= B_EPS:
        return r * math.exp(p.A * r)
    base = 1.0 + p.B * r
    exponent = (p.A - p.B) / p.B
    if base <= 0.0:
        # only reachable at r = 1, B = -1, where the exponent is negative
        raise DomainError(f"growth_l diverges at r={r} for B={p.B}")
    return r * base**exponent


def _janowski_distance(p: Janowski) -> float:
    if abs(p.B) <= B_EPS:
        return math.exp(-p.A)
    return (1.0 - p.B) ** ((p.A - p.B) / p.B)


def distance_bound(spec: ClassSpec, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Lower bound on the distance from the origin to the image boundary."""
    if isinstance(spec, Janowski):
        return _janowski_distance(spec)
    if isinstance(spec, AlphaConvex):
        return k_minus_one(spec.alpha, cfg)
    if isinstance(spec, SecondOrder):
        return _janowski_distance(spec.h)
    if isinstance(spec, TypicallyReal):
        return 0.25
    raise TypeError(f"not a ClassSpec: {spec!r}")


# ---------------------------------------------------------------------------
# Alpha-convex bounds: series-composition production path and exact
# partition-sum oracle path
# ---------------------------------------------------------------------------


def c_coeff(alpha: float, n: int) -> float:
    """Building-block coefficient c_n = prod_{k=0}^{n-1}(2 + k alpha) / (n! alpha^n (1 + n alpha)).

    Evaluated by a ratio recurrence; the naive product/factorial form
    overflows long before n reaches typical truncation depths.
    """
    if n < 1:
        raise DomainError(f"c_coeff needs n >= 1, got {n}")
    if alpha <= 0.0:
        raise DomainError(f"c_coeff needs alpha > 0, got {alpha}")
    c = 2.0 / (alpha * (1.0 + alpha))
    for j in range(2, n + 1):
        c *= (2.0 + (j - 1) * alpha) * (1.0 + (j - 1) * alpha) / (j * alpha * (1.0 + j * alpha))
    return c


def upsilon(alpha: float, q: int) -> float:
    """Falling product alpha (alpha-1) ... (alpha-q), with q = 0 giving alpha."""
    if q < 0:
        raise DomainError(f"upsilon needs q >= 0, got {q}")
    v = alpha
    for j in range(1, q + 1):
        v *= alpha - j
    return v


class AlphaConvexBounds:
    """Lazily extended sharp |a_m| bounds for the alpha-convex class.

    These are the Taylor coefficients of (1 + C(z))^alpha with
    C(z) = sum_i c_i z^i, generated by the standard power recurrence on
    truncated series.  Reusing one instance amortizes the O(N^2) recurrence
    across repeated radius evaluations.
    """

    def __init__(self, alpha: float):
        if alpha <= 0.0:
            raise DomainError(f"AlphaConvexBounds needs alpha > 0, got {alpha}")
        self.alpha = alpha
        self._f = [1.0]  # 1 + C(z) coefficients; _f[i] = c_i for i >= 1
        self._g = [1.0]  # (1 + C(z))^alpha coefficients
        self._warned = False

    def _extend_f(self, i_target: int) -> None:
        a = self.alpha
        f = self._f
        while len(f) <= i_target:
            i = len(f)
            if i == 1:
                f.append(2.0 / (a * (1.0 + a)))
            else:
                f.append(
                    f[i - 1]
                    * (2.0 + (i - 1) * a)
                    * (1.0 + (i - 1) * a)
                    / (i * a * (1.0 + i * a))
                )

    def bound(self, m: int) -> float:
        """Sharp bound on |a_m|, m >= 1 (m = 1 is the normalization 1)."""
        if m < 1:
            raise DomainError(f"coefficient index must be >= 1, got {m}")
        if m == 1:
            return 1.0
        a = self.alpha
        g = self._g
        n_target = m - 1
        self._extend_f(n_target)
        f = self._f
        while len(g) <= n_target:
            n = len(g)
            acc = 0.0
            for k in range(1, n + 1):
                acc += (k * (a + 1.0) - n) * f[k] * g[n - k]
            gn = acc / n
            if gn < 0.0 and not self._warned:
                warnings.warn(
                    f"negative coefficient bound at alpha={a}, m={n + 1}; "
                    "parameters are outside the sharp range",
                    RuntimeWarning,
                    stacklevel=2,
                )
                self._warned = True
            g.append(gn)
        return g[n_target]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n into parts <= max_part, as descending tuples."""
    if n == 0:
        return ((),)
    out = []
    for part in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - part, part):
            out.append((part,) + rest)
    return tuple(out)


def _alpha_convex_bound_partitions(alpha: float, m: int) -> float:
    """Partition-sum form of the |a_m| bound, in exact rational arithmetic.

    The sum runs over tuples (x_1, ..., x_n) of nonnegative integers with
    sum i*x_i = n = m - 1 and q = sum x_i parts.  Terms with alternating
    falling-product signs cancel catastrophically in floating point (about
    eight digits lost by m = 20 for alpha < 1), so the accumulation is done
    in Fraction and converted once at the end.
    """
    a = Fraction(alpha)
    n = m - 1

    @lru_cache(maxsize=None)
    def c_exact(i: int) -> Fraction:
        prod = Fraction(1)
        for k in range(i):
            prod *= 2 + k * a
        return prod / (math.factorial(i) * a**i * (1 + i * a))

    total = Fraction(0)
    for partition in _partitions(n, n):
        q = len(partition)
        term = a
        for j in range(1, q):
            term *= a - j
        for part, mult in Counter(partition).items():
            term *= c_exact(part) ** mult / math.factorial(mult)
        total += term
    c_exact.cache_clear()
    return float(total)


def coeff_bound_alpha_convex(alpha: float, m: int, method: str = "series") -> float:
    """Sharp bound on |a_m| for the alpha-convex class, m >= 2.

    method="series" uses the power recurrence (production path);
    method="partition" evaluates the explicit partition sum exactly and is
    cost-capped at m = 40.
    """
    if m < 2:
        raise DomainError(f"coeff_bound_alpha_convex needs m >= 2, got {m}")
    if alpha <= 0.0:
        raise DomainError(f"coeff_bound_alpha_convex needs alpha > 0, got {alpha}")
    if method == "series":
        return AlphaConvexBounds(alpha).bound(m)
    if method == "partition":
        if m > PARTITION_COST_CAP:
            raise CostGuard(
                f"partition enumeration is capped at m <= {PARTITION_COST_CAP}, got {m}"
            )
        return _alpha_convex_bound_partitions(alpha, m)
    raise DomainError(f"unknown method {method!r}; use 'series' or 'partition'")


# ---------------------------------------------------------------------------
# Second-order subordination class and typically real class
# ---------------------------------------------------------------------------


def second_order_bounds(p: SecondOrder) -> Iterator[float]:
    """Yield the sharp |a_n| bounds for n = 1, 2, 3, ...

    Janowski bound of the target divided by 1 + (beta-gamma) n + gamma n^2;
    note b_1 = 1 / (1 + beta).
    """
    for n, b in enumerate(janowski_bounds(p.h), start=1):
        yield b / (1.0 + (p.beta - p.gamma) * n + p.gamma * n * n)


def coeff_bound_second_order(p: SecondOrder, n: int) -> float:
    """Sharp bound on |a_n| for the second-order subordination class (n >= 1)."""
    if n < 1:
        raise DomainError(f"coefficient index must be >= 1, got {n}")
    return next(islice(second_order_bounds(p), n - 1, None))


def coeff_bound_tr(n: int) -> float:
    """Sharp bound on |a_n| for typically real functions: n itself."""
    if n < 1:
        raise DomainError(f"coefficient index must be >= 1, got {n}")
    return float(n)


# ---------------------------------------------------------------------------
# Extremal functions
# ---------------------------------------------------------------------------


def extremal_bounds(spec: ClassSpec) -> Iterator[float]:
    """Yield the extremal function's coefficient magnitudes for n = 1, 2, ...

    The bounds are sharp for every class, so these coincide with the
    corresponding coeff_bound_* values; Janowski, SecondOrder and
    TypicallyReal reuse the very same arithmetic path, AlphaConvex uses the
    series-composition path.
    """
    if isinstance(spec, Janowski):
        yield from janowski_bounds(spec)
    elif isinstance(spec, SecondOrder):
        yield from second_order_bounds(spec)
    elif isinstance(spec, TypicallyReal):
        for n in count(1):
            yield float(n)
    elif isinstance(spec, AlphaConvex):
        bounds = AlphaConvexBounds(spec.alpha)
        yield 1.0
        for m in count(2):
            yield bounds.bound(m)
    else:
        raise TypeError(f"not a ClassSpec: {spec!r}")


def extremal_coeffs(spec: ClassSpec, n_max: int) -> list[float]:
    """Coefficient magnitudes of the class extremal function, n = 1 .. n_max."""
    if n_max < 1:
        raise DomainError(f"extremal_coeffs needs n_max >= 1, got {n_max}")
    return list(islice(extremal_bounds(spec), n_max))
