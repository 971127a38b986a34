"""Validated points on the probability simplex and their summary measures.

A distribution here is a finite ordered tuple of probabilities summing to
one. Constructors reject invalid input instead of repairing it, so every
``Dist`` in circulation is known-good and the outputs of downstream
transformations can be asserted to be valid on their own merits.

The entropy used throughout is the quadratic (Gini) form

    H(P) = sum_i (1 - p_i) * p_i = 1 - sum_i p_i**2,

which ranges over [0, (n-1)/n], vanishing exactly on point distributions
and peaking exactly on the uniform one. Distance to the uniform
distribution is measured in the max norm, the metric in which iterated
linear negation contracts at an exactly geometric rate.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import (
    DomainError,
    LengthError,
    LengthMismatchError,
    RangeError,
    SumError,
)

__all__ = [
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "Dist",
    "DistStats",
    "make_dist",
    "uniform_dist",
    "point_dist",
    "entropy",
    "max_entropy",
    "linf_to_uniform",
    "stats",
    "max_abs_diff",
    "dists_equal",
    "parse_dist",
    "format_dist",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical slack: ``tol_simplex`` for sum-to-one validation,
    ``tol_eq`` for equality in property checks.

    Both must be strictly positive and at most 1e-6. The defaults leave
    ample headroom for double-precision sums of up to ~1e4 terms.
    """

    tol_simplex: float = 1e-9
    tol_eq: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("tol_simplex", "tol_eq"):
            value = getattr(self, name)
            if not 0.0 < value <= 1e-6:
                raise DomainError(f"{name} must be in (0, 1e-6], got {value!r}")


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class Dist:
    """A probability distribution over n >= 2 ordered outcomes.

    Build through :func:`make_dist` (or the ``uniform_dist`` /
    ``point_dist`` helpers), which enforce the invariants. Values are kept
    in input order and never renormalized or sorted.
    """

    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, index: int) -> float:
        return self.values[index]


@dataclass(frozen=True)
class DistStats:
    """Componentwise max/min of a distribution and their sum ``mp``.

    For stats computed from a valid ``Dist``, ``min_p <= 1/n <= max_p``
    and ``mp * n - 1 > 0``. Direct construction is deliberately
    unvalidated so that degenerate inputs to downstream guards can be
    built by hand.
    """

    max_p: float
    min_p: float
    mp: float
    n: int


def make_dist(values: Iterable[float], tol: Tolerance = DEFAULT_TOLERANCE) -> Dist:
    """Validate ``values`` as a probability distribution and wrap them.

    The input is taken verbatim: no renormalization, no reordering.
    Raises ``LengthError`` for fewer than two values, ``RangeError`` for a
    value outside [0, 1], ``SumError`` when the total strays from one by
    more than ``tol.tol_simplex``.
    """
    vals = tuple(float(v) for v in values)
    if len(vals) < 2:
        raise LengthError(f"need at least 2 values, got {len(vals)}")
    for i, v in enumerate(vals):
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"value {v!r} at position {i + 1} outside [0, 1]")
    total = math.fsum(vals)
    if abs(total - 1.0) > tol.tol_simplex:
        raise SumError(f"values sum to {total!r}, not 1 within {tol.tol_simplex}")
    return Dist(vals)


def uniform_dist(n: int) -> Dist:
    """The distribution with every probability equal to 1/n."""
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    return make_dist([1.0 / n] * n)


def point_dist(n: int, i: int) -> Dist:
    """The degenerate distribution with unit mass on outcome ``i`` (1-based)."""
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    if not 1 <= i <= n:
        raise IndexError(f"outcome index {i} outside 1..{n}")
    return make_dist([1.0 if j == i else 0.0 for j in range(1, n + 1)])


def entropy(dist: Dist) -> float:
    """Quadratic entropy sum((1 - p) * p), in [0, (n-1)/n]."""
    return math.fsum((1.0 - v) * v for v in dist)


def max_entropy(n: int) -> float:
    """Largest attainable entropy for length n, reached on the uniform
    distribution: (n - 1)/n."""
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    return (n - 1) / n


def linf_to_uniform(dist: Dist) -> float:
    """Max-norm distance to the uniform distribution of the same length."""
    u = 1.0 / dist.n
    return max(abs(v - u) for v in dist)


def stats(dist: Dist) -> DistStats:
    """Componentwise max, min, and their sum for ``dist``."""
    hi = max(dist.values)
    lo = min(dist.values)
    return DistStats(max_p=hi, min_p=lo, mp=hi + lo, n=dist.n)


def max_abs_diff(a: Dist, b: Dist) -> float:
    """Largest componentwise absolute difference between two distributions."""
    if a.n != b.n:
        raise LengthMismatchError(f"lengths differ: {a.n} vs {b.n}")
    return max(abs(x - y) for x, y in zip(a, b))


def dists_equal(a: Dist, b: Dist, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Componentwise equality within ``tol.tol_eq``."""
    return max_abs_diff(a, b) <= tol.tol_eq


def parse_dist(text: str, tol: Tolerance = DEFAULT_TOLERANCE) -> Dist:
    """Parse comma-separated decimal literals, e.g. ``0.1,0.2,0.7``."""
    parts = [part.strip() for part in text.split(",")]
    try:
        values = [float(part) for part in parts]
    except ValueError:
        raise ValueError(f"not a comma-separated list of numbers: {text!r}") from None
    return make_dist(values, tol)


def format_dist(dist: Dist) -> str:
    """Inverse of :func:`parse_dist`; floats keep full round-trip precision."""
    return ",".join(repr(v) for v in dist)
