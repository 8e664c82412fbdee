"""Positional credit weights for multi-author papers.

Five schemes are supported: equal, arithmetic type-1, arithmetic type-2
(linear with a tunable decrement ``alpha``), geometric and harmonic. All
weights are exact :class:`fractions.Fraction` values; nothing in this module
rounds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

RationalLike = Union[Fraction, int, str, float]

EULER_GAMMA = 0.5772156649015329


class CreditWeightsError(ValueError):
    """Base class for every validation error raised by this package."""


class InvalidAuthorCount(CreditWeightsError):
    def __init__(self, k):
        super().__init__(f"author count must be a positive integer, got {k!r}")
        self.k = k


class AlphaOutOfRange(CreditWeightsError):
    def __init__(self, k: int, alpha: Fraction, bound: Fraction, strict: bool):
        op = "<" if strict else "<="
        super().__init__(
            f"alpha {alpha} out of range for k={k}: need |alpha| {op} {bound}"
        )
        self.k = k
        self.alpha = alpha
        self.bound = bound
        self.strict = strict


class DivisionByZeroWeight(CreditWeightsError):
    def __init__(self):
        super().__init__("last author's weight is zero; ratio is undefined")


class Underdetermined(CreditWeightsError):
    def __init__(self, k: int):
        super().__init__(f"alpha cannot be recovered from endpoints when k={k} < 2")
        self.k = k


class InconsistentEndpoints(CreditWeightsError):
    def __init__(self, k: int, w1: Fraction, wk: Fraction, alpha: Fraction):
        super().__init__(
            f"inconsistent endpoints for k={k}: w1 + wk = {w1 + wk}, "
            f"expected {Fraction(2, k)}"
        )
        self.k = k
        self.w1 = w1
        self.wk = wk
        self.alpha = alpha


class NoConstraint(CreditWeightsError):
    def __init__(self, k: int):
        super().__init__(f"k={k}: any alpha yields the single weight 1")
        self.k = k


class InfeasibleFloor(CreditWeightsError):
    def __init__(self, k: int, mu: Fraction):
        super().__init__(f"floor mu={mu} is infeasible for k={k}: need 0 <= mu <= 1/{k}")
        self.k = k
        self.mu = mu


class Scheme(enum.Enum):
    EQUAL = "equal"
    TYPE1 = "type1"
    TYPE2 = "type2"
    GEOMETRIC = "geometric"
    HARMONIC = "harmonic"


class Positivity(enum.Enum):
    STRICT_POSITIVE = "strict"
    ALLOW_ZERO = "allow-zero"
    UNCHECKED = "unchecked"


class Linearity(enum.Enum):
    LINEAR = "Linear"
    NONLINEAR = "Nonlinear"


def as_fraction(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact fraction.

    Floats go through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise CreditWeightsError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    return Fraction(value)


def _check_k(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidAuthorCount(k)
    return k


@dataclass(frozen=True)
class WeightVector:
    """Ordered weights of one author list; position 1 is the first author."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(as_fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise InvalidAuthorCount(0)
        if sum(weights) != 1:
            raise CreditWeightsError(f"weights sum to {sum(weights)}, not 1")

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def first(self) -> Fraction:
        return self.weights[0]

    @property
    def last(self) -> Fraction:
        return self.weights[-1]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, position: int) -> Fraction:
        """1-based access, matching author positions."""
        if not 1 <= position <= self.k:
            raise IndexError(f"author position {position} outside 1..{self.k}")
        return self.weights[position - 1]

    def reversed(self) -> "WeightVector":
        return WeightVector(self.weights[::-1])

    def as_floats(self) -> list[float]:
        return [float(w) for w in self.weights]


@dataclass(frozen=True)
class SchemeSpec:
    """A scheme plus its parameters. ``alpha`` is required for type-2 only."""

    kind: Scheme
    alpha: Fraction | None = None
    positivity: Positivity = Positivity.STRICT_POSITIVE

    def __post_init__(self):
        kind = Scheme(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is Scheme.TYPE2:
            if self.alpha is None:
                raise CreditWeightsError("type2 scheme requires alpha")
            object.__setattr__(self, "alpha", as_fraction(self.alpha))
        elif self.alpha is not None:
            raise CreditWeightsError(f"{kind.value} scheme takes no alpha")
        object.__setattr__(self, "positivity", Positivity(self.positivity))

    def weights(self, k: int) -> WeightVector:
        return weights_for(self, k)

    def __str__(self) -> str:
        if self.kind is Scheme.TYPE2:
            return f"type2(alpha={self.alpha})"
        return self.kind.value


@dataclass(frozen=True)
class AlphaBound:
    k: int
    mu: Fraction
    max_alpha: Fraction
    strict: bool

    def admits(self, alpha: RationalLike) -> bool:
        a = abs(as_fraction(alpha))
        return a < self.max_alpha if self.strict else a <= self.max_alpha


# -- weight vectors -----------------------------------------------------------


def equal_weights(k: int) -> WeightVector:
    _check_k(k)
    return WeightVector((Fraction(1, k),) * k)


def positivity_bound(k: int) -> Fraction:
    """Largest |alpha| keeping the last type-2 weight non-negative: 2/(k(k-1))."""
    _check_k(k)
    if k < 2:
        raise NoConstraint(k)
    return Fraction(2, k * (k - 1))


def check_alpha(k: int, alpha: RationalLike, positivity: Positivity) -> Fraction:
    alpha = as_fraction(alpha)
    positivity = Positivity(positivity)
    if k < 2 or positivity is Positivity.UNCHECKED:
        return alpha
    bound = positivity_bound(k)
    strict = positivity is Positivity.STRICT_POSITIVE
    if abs(alpha) > bound or (strict and abs(alpha) == bound):
        raise AlphaOutOfRange(k, alpha, bound, strict)
    return alpha


def type2_weight(k: int, j: int, alpha: RationalLike) -> Fraction:
    """Weight of author ``j``: 1/k + (k - 2j + 1) alpha / 2."""
    _check_k(k)
    if not 1 <= j <= k:
        raise IndexError(f"author position {j} outside 1..{k}")
    return Fraction(1, k) + Fraction(k - 2 * j + 1, 2) * as_fraction(alpha)


def type2_weights(
    k: int,
    alpha: RationalLike,
    positivity: Positivity = Positivity.STRICT_POSITIVE,
) -> WeightVector:
    """Linear weights with common difference ``-alpha``.

    Negative ``alpha`` gives increasing weights. The positivity policy bounds
    ``|alpha|`` by ``2/(k(k-1))``, strictly for ``STRICT_POSITIVE``.
    """
    _check_k(k)
    alpha = check_alpha(k, alpha, positivity)
    return WeightVector(tuple(type2_weight(k, j, alpha) for j in range(1, k + 1)))


def type2_endpoints(k: int, alpha: RationalLike) -> tuple[Fraction, Fraction]:
    _check_k(k)
    half_span = as_fraction(alpha) * (k - 1) / 2
    return Fraction(1, k) + half_span, Fraction(1, k) - half_span


def type2_ratio(k: int, alpha: RationalLike) -> Fraction:
    w1, wk = type2_endpoints(k, alpha)
    if wk == 0:
        raise DivisionByZeroWeight()
    return w1 / wk


def alpha_from_endpoints(
    k: int, w1: RationalLike, wk: RationalLike, *, check: bool = True
) -> Fraction:
    """Recover alpha = (w1 - wk)/(k - 1) from the first and last weights.

    Endpoints that came from a normalized type-2 vector satisfy
    ``w1 + wk == 2/k``. With ``check`` on, a violation raises
    :class:`InconsistentEndpoints` (which still carries the computed alpha).
    """
    _check_k(k)
    if k < 2:
        raise Underdetermined(k)
    w1, wk = as_fraction(w1), as_fraction(wk)
    alpha = (w1 - wk) / (k - 1)
    if check and w1 + wk != Fraction(2, k):
        raise InconsistentEndpoints(k, w1, wk, alpha)
    return alpha


def weights_from_endpoints(k: int, w1: RationalLike, wk: RationalLike) -> WeightVector:
    """Interpolate ``k`` weights linearly between ``w1`` and ``wk``."""
    _check_k(k)
    if k < 2:
        raise Underdetermined(k)
    w1, wk = as_fraction(w1), as_fraction(wk)
    if w1 + wk != Fraction(2, k):
        raise InconsistentEndpoints(k, w1, wk, (w1 - wk) / (k - 1))
    return WeightVector(
        tuple(((k - j) * w1 + (j - 1) * wk) / (k - 1) for j in range(1, k + 1))
    )


def max_alpha(k: int, mu: RationalLike = 0) -> AlphaBound:
    """Largest alpha keeping the last weight at or above the floor ``mu``.

    With ``mu == 0`` the bound is strict, since the last author must keep a
    positive share; any positive floor can be met with equality.
    """
    _check_k(k)
    if k < 2:
        raise NoConstraint(k)
    mu = as_fraction(mu)
    if mu < 0 or mu > Fraction(1, k):
        raise InfeasibleFloor(k, mu)
    bound = Fraction(2, k - 1) * (Fraction(1, k) - mu)
    return AlphaBound(k=k, mu=mu, max_alpha=bound, strict=mu == 0)


def type1_weights(k: int) -> WeightVector:
    _check_k(k)
    denom = k * (k + 1)
    return WeightVector(tuple(Fraction(2 * (k - j + 1), denom) for j in range(1, k + 1)))


def alpha_matching_type1(k: int) -> Fraction:
    """The alpha at which type-2 weights coincide with type-1 weights."""
    _check_k(k)
    return Fraction(2, k * (k + 1))


def geometric_weights(k: int) -> WeightVector:
    _check_k(k)
    denom = 2**k - 1
    return WeightVector(tuple(Fraction(2 ** (k - j), denom) for j in range(1, k + 1)))


def harmonic_numbers(n: int):
    """Yield ``(k, H_k)`` exactly for k = 1..n, one addition per step."""
    h = Fraction(0)
    for k in range(1, n + 1):
        h += Fraction(1, k)
        yield k, h


@lru_cache(maxsize=1024)
def _harmonic_number(k: int) -> Fraction:
    h = Fraction(0)
    for _, h in harmonic_numbers(k):
        pass
    return h


def harmonic_sum(k: int) -> tuple[Fraction, float]:
    """Return the exact harmonic number H_k and its asymptotic estimate.

    The estimate is ``ln k + gamma + 1/(2k)``; its error is about
    ``1/(12 k**2)``.
    """
    return _harmonic_number(_check_k(k)), harmonic_approx(k)


def harmonic_approx(k: int) -> float:
    return math.log(_check_k(k)) + EULER_GAMMA + 1 / (2 * k)


def harmonic_weights(k: int) -> WeightVector:
    _check_k(k)
    h = _harmonic_number(k)
    return WeightVector(tuple(Fraction(1, j) / h for j in range(1, k + 1)))


def weights_for(spec: SchemeSpec, k: int) -> WeightVector:
    if spec.kind is Scheme.TYPE2:
        return type2_weights(k, spec.alpha, spec.positivity)
    return _FIXED[spec.kind](k)


_FIXED = {
    Scheme.EQUAL: equal_weights,
    Scheme.TYPE1: type1_weights,
    Scheme.GEOMETRIC: geometric_weights,
    Scheme.HARMONIC: harmonic_weights,
}


# -- comparisons ---------------------------------------------------------------


def delta_vs_equal(v: WeightVector) -> list[Fraction]:
    """Per-position gain (positive) or loss against an equal split."""
    share = Fraction(1, v.k)
    return [w - share for w in v.weights]


def type2_delta(k: int, j: int, alpha: RationalLike) -> Fraction:
    """Closed form of the type-2 gain over equal share: (k - 2j + 1) alpha / 2."""
    return Fraction(k - 2 * j + 1, 2) * as_fraction(alpha)


def harmonic_delta(k: int, j: int, h: Fraction | float | None = None):
    """Closed form of the harmonic gain over equal share.

    ``(k - j h) / (j k h)`` where ``h`` is the harmonic number. Pass a float
    ``h`` (e.g. the asymptotic estimate) to get the approximate value; the
    default uses the exact H_k.
    """
    _check_k(k)
    if h is None:
        h = _harmonic_number(k)
    return (k - j * h) / (j * k * h)


def first_last_ratio(v: WeightVector) -> Fraction:
    if v.last == 0:
        raise DivisionByZeroWeight()
    return v.first / v.last


def classify_linearity(v: WeightVector) -> Linearity:
    """Linear iff every second difference of the weights is exactly zero."""
    w = v.weights
    for j in range(1, len(w) - 1):
        if w[j + 1] - 2 * w[j] + w[j - 1] != 0:
            return Linearity.NONLINEAR
    return Linearity.LINEAR
