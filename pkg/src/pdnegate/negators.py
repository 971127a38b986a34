"""Negator families: single-step negations of a probability distribution.

A negator maps each probability value so that larger inputs get smaller
outputs while the results still form a distribution. Five families are
implemented, selected by a tagged spec value:

    yager                (1 - p) / (n - 1)
    uniform              1 / n
    linear (alpha)       alpha/n + (1 - alpha) * (1 - p)/(n - 1)
    tsallis (k != 0)     (1 - p_i**k) / (n - sum_j p_j**k)
    involutive           (mp - p_i) / (n*mp - 1),  mp = max(P) + min(P)

The first three read only the value being transformed; the linear family
is their common closed form (alpha=0 gives yager, alpha=1 gives uniform).
The last two read the whole distribution. The involutive family undoes
itself: negating twice returns the original distribution.

Every family fixes the value 1/n and therefore the uniform distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateStatsError,
    DomainError,
    LengthError,
    NegatorSyntaxError,
)
from .simplex import DEFAULT_TOLERANCE, Dist, DistStats, make_dist, stats

__all__ = [
    "Yager",
    "Uniform",
    "Linear",
    "Tsallis",
    "Involutive",
    "NegatorSpec",
    "LinearParams",
    "negate",
    "yager_point",
    "linear_point",
    "involutive_point",
    "linear_params",
    "involutive_negated_stats",
    "parse_negator",
    "format_negator",
]


@dataclass(frozen=True)
class Yager:
    """p -> (1 - p)/(n - 1)."""


@dataclass(frozen=True)
class Uniform:
    """p -> 1/n, regardless of p."""


@dataclass(frozen=True)
class Linear:
    """Convex mix of the uniform and yager families with weight ``alpha``
    on the uniform side; alpha must lie in [0, 1]."""

    alpha: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must be in [0, 1], got {self.alpha!r}")


@dataclass(frozen=True)
class Tsallis:
    """p_i -> (1 - p_i**k) / (n - sum_j p_j**k) with exponent ``k != 0``.

    Negative k requires strictly positive probabilities.
    """

    k: float

    def __post_init__(self) -> None:
        if self.k == 0.0 or math.isnan(self.k):
            raise DomainError(f"k must be a nonzero number, got {self.k!r}")


@dataclass(frozen=True)
class Involutive:
    """p_i -> (mp - p_i)/(n*mp - 1) with mp = max(P) + min(P); self-inverse."""


NegatorSpec = Yager | Uniform | Linear | Tsallis | Involutive


@dataclass(frozen=True)
class LinearParams:
    """The three equivalent parameterizations of one linear negator.

    ``alpha`` is canonical; ``n1`` (the image of 1) and ``n0`` (the image
    of 0) are derived views tied together by ``n1 = alpha/n``,
    ``n0 = alpha/n + (1 - alpha)/(n - 1)`` and ``n1 = 1 - (n - 1)*n0``.
    """

    alpha: float
    n1: float
    n0: float
    n: int


def yager_point(p: float, n: int) -> float:
    """Value of the yager family at ``p`` for length ``n``."""
    return (1.0 - p) / (n - 1)


def linear_point(p: float, n: int, alpha: float) -> float:
    """Value of the linear family at ``p``; raises for alpha outside [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must be in [0, 1], got {alpha!r}")
    return alpha / n + (1.0 - alpha) * (1.0 - p) / (n - 1)


def involutive_point(p: float, s: DistStats) -> float:
    """Value of the involutive family at ``p`` given the summary stats of
    the distribution ``p`` belongs to.

    ``n*mp - 1 > 0`` holds for the stats of any valid distribution; the
    guard only fires on hand-built degenerate stats.
    """
    denom = s.n * s.mp - 1.0
    if denom <= 0.0:
        raise DegenerateStatsError(f"n*mp - 1 = {denom!r} is not positive")
    return (s.mp - p) / denom


def linear_params(
    n: int,
    *,
    alpha: float | None = None,
    n1: float | None = None,
    n0: float | None = None,
) -> LinearParams:
    """Interconvert the linear-family parameterizations.

    Exactly one of ``alpha`` (in [0, 1]), ``n1`` (in [0, 1/n]) or ``n0``
    (in [1/n, 1/(n-1)]) must be given; the other two are derived.
    """
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    given = [name for name, v in (("alpha", alpha), ("n1", n1), ("n0", n0)) if v is not None]
    if len(given) != 1:
        raise TypeError(f"provide exactly one of alpha, n1, n0; got {given or 'none'}")

    if alpha is not None:
        if not 0.0 <= alpha <= 1.0:
            raise DomainError(f"alpha must be in [0, 1], got {alpha!r}")
    elif n1 is not None:
        if not 0.0 <= n1 <= 1.0 / n:
            raise DomainError(f"n1 must be in [0, {1.0 / n}], got {n1!r}")
        alpha = n * n1
    else:
        assert n0 is not None
        lo, hi = 1.0 / n, 1.0 / (n - 1)
        if not lo <= n0 <= hi:
            raise DomainError(f"n0 must be in [{lo}, {hi}], got {n0!r}")
        alpha = n * (1.0 - (n - 1) * n0)
    # Derivations can stray an ulp outside [0, 1]; alpha is canonical.
    alpha = min(1.0, max(0.0, alpha))
    return LinearParams(
        alpha=alpha,
        n1=alpha / n,
        n0=alpha / n + (1.0 - alpha) / (n - 1),
        n=n,
    )


def _tsallis_values(dist: Dist, k: float) -> list[float]:
    if k < 0.0 and any(v == 0.0 for v in dist):
        raise DomainError("tsallis with k < 0 requires strictly positive probabilities")
    powers = [v**k for v in dist]
    denom = dist.n - math.fsum(powers)
    return [(1.0 - w) / denom for w in powers]


# Inputs whose sum is an ulp off 1 can push an exact-arithmetic boundary
# output a few ulps past it, e.g. (0, 0, 0, 1) under the involutive family.
_SNAP = 1e-12


def _snap_unit(values: list[float]) -> list[float]:
    out = []
    for v in values:
        if -_SNAP <= v < 0.0:
            v = 0.0
        elif 1.0 < v <= 1.0 + _SNAP:
            v = 1.0
        out.append(v)
    return out


def negate(spec: NegatorSpec, dist: Dist) -> Dist:
    """Apply one negation step, returning a validated distribution.

    The output is routed through the validating constructor rather than
    renormalized, so the sum-to-one guarantee is checked, not imposed.
    Roundoff excursions past 0 or 1 of at most 1e-12 are snapped to the
    boundary first; anything larger is a genuine range violation.
    """
    n = dist.n
    match spec:
        case Yager():
            out = [yager_point(p, n) for p in dist]
        case Uniform():
            out = [1.0 / n] * n
        case Linear(alpha=alpha):
            out = [linear_point(p, n, alpha) for p in dist]
        case Tsallis(k=k):
            out = _tsallis_values(dist, k)
        case Involutive():
            s = stats(dist)
            out = [involutive_point(p, s) for p in dist]
        case _:
            raise TypeError(f"not a negator spec: {spec!r}")
    return make_dist(_snap_unit(out), DEFAULT_TOLERANCE)


def involutive_negated_stats(s: DistStats) -> DistStats:
    """Summary stats of the involutive negation, without materializing it.

    Negation swaps the roles of max and min: each is divided by
    ``n*mp - 1``, so ``mp`` itself maps to ``mp / (n*mp - 1)``.
    """
    denom = s.n * s.mp - 1.0
    if denom <= 0.0:
        raise DegenerateStatsError(f"n*mp - 1 = {denom!r} is not positive")
    hi = s.max_p / denom
    lo = s.min_p / denom
    return DistStats(max_p=hi, min_p=lo, mp=hi + lo, n=s.n)


_PLAIN_FAMILIES = {"yager": Yager, "uniform": Uniform, "involutive": Involutive}


def parse_negator(text: str) -> NegatorSpec:
    """Parse the textual negator syntax.

    Accepted forms: ``yager``, ``uniform``, ``involutive``,
    ``linear:alpha=<float>``, ``tsallis:k=<float>``. Malformed text raises
    ``NegatorSyntaxError``; well-formed text with an out-of-domain
    parameter raises ``DomainError``.
    """
    head, sep, rest = text.strip().partition(":")
    family = head.strip().lower()

    if family in _PLAIN_FAMILIES:
        if sep:
            raise NegatorSyntaxError(f"{family!r} takes no parameters, got {text!r}")
        return _PLAIN_FAMILIES[family]()

    if family in ("linear", "tsallis"):
        expected = "alpha" if family == "linear" else "k"
        key, eq, value_text = rest.partition("=")
        if not sep or key.strip() != expected or not eq:
            raise NegatorSyntaxError(f"expected {family}:{expected}=<float>, got {text!r}")
        try:
            value = float(value_text)
        except ValueError:
            raise NegatorSyntaxError(f"{expected}={value_text!r} is not a number") from None
        return Linear(value) if family == "linear" else Tsallis(value)

    raise NegatorSyntaxError(
        f"unknown negator {family!r}; expected yager, uniform, involutive, "
        f"linear:alpha=<float> or tsallis:k=<float>"
    )


def format_negator(spec: NegatorSpec) -> str:
    """Inverse of :func:`parse_negator`."""
    match spec:
        case Yager():
            return "yager"
        case Uniform():
            return "uniform"
        case Involutive():
            return "involutive"
        case Linear(alpha=alpha):
            return f"linear:alpha={alpha!r}"
        case Tsallis(k=k):
            return f"tsallis:k={k!r}"
    raise TypeError(f"not a negator spec: {spec!r}")
