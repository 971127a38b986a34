"""Iterated negation: orbits, closed-form powers, convergence detection.

For the linear family the k-step image of a value has the closed form

    N^k(p) = 1/n + a**k * (p - 1/n),    a = -(1 - alpha)/(n - 1),

so the whole orbit contracts toward the uniform distribution at the
exactly geometric rate |a| per step, in the max norm, whenever |a| < 1.
The boundary case |a| = 1 occurs only for n = 2 with alpha = 0 (the map
p -> 1 - p): that orbit never converges, it flips between two
distributions forever. The involutive family likewise produces pure
period-2 orbits from any non-uniform start.

The closed forms here are deliberately separate code paths from the
step-by-step iterator so the two can serve as mutual oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, LengthError
from .simplex import (
    DEFAULT_TOLERANCE,
    Dist,
    Tolerance,
    entropy,
    linf_to_uniform,
    max_abs_diff,
)
from .negators import NegatorSpec, negate

__all__ = [
    "OrbitStep",
    "OrbitTrace",
    "ContractionFactor",
    "Converged",
    "Oscillating",
    "MaxIterReached",
    "ConvergenceOutcome",
    "iterate",
    "linear_power_point",
    "yager_power_point",
    "contraction_factor",
    "converge",
    "orbit_csv",
]


@dataclass(frozen=True)
class OrbitStep:
    """One entry of an orbit: the k-th repeated negation of the start."""

    k: int
    dist: Dist
    entropy: float
    linf: float


@dataclass(frozen=True)
class OrbitTrace:
    """The orbit P, NOT(P), NOT^2(P), ... with per-step measures."""

    steps: tuple[OrbitStep, ...]

    @property
    def last(self) -> OrbitStep:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class ContractionFactor:
    """Per-step scaling of the offset from 1/n under a linear negator.

    ``factor`` equals -(1 - alpha)/(n - 1); it is always in
    [-1/(n-1), 0]. Orbits converge iff |factor| < 1, which fails exactly
    for n = 2 with alpha = 0.
    """

    factor: float
    n: int
    alpha: float

    @property
    def convergent(self) -> bool:
        return abs(self.factor) < 1.0


@dataclass(frozen=True)
class Converged:
    """Orbit reached the uniform distribution: ``steps`` negations taken."""

    steps: int
    limit: Dist


@dataclass(frozen=True)
class Oscillating:
    """Orbit revisited an earlier distribution without converging."""

    period: int
    witness: Dist


@dataclass(frozen=True)
class MaxIterReached:
    """Iteration budget exhausted with neither convergence nor recurrence."""

    last: Dist


ConvergenceOutcome = Converged | Oscillating | MaxIterReached


def iterate(spec: NegatorSpec, dist: Dist, steps: int) -> OrbitTrace:
    """Repeatedly negate ``dist``, returning the orbit of length ``steps + 1``.

    Every intermediate distribution passes full validation, so the trace
    doubles as a running check that negation preserves the simplex.
    """
    if steps < 0:
        raise DomainError(f"steps must be >= 0, got {steps}")
    current = dist
    trace = [OrbitStep(0, current, entropy(current), linf_to_uniform(current))]
    for k in range(1, steps + 1):
        current = negate(spec, current)
        trace.append(OrbitStep(k, current, entropy(current), linf_to_uniform(current)))
    return OrbitTrace(tuple(trace))


def linear_power_point(p: float, n: int, alpha: float, k: int) -> float:
    """k-fold application of the linear negator to ``p``, in closed form."""
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must be in [0, 1], got {alpha!r}")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    a = -(1.0 - alpha) / (n - 1)
    return 1.0 / n + a**k * (p - 1.0 / n)


def yager_power_point(p: float, n: int, k: int) -> float:
    """k-fold application of the yager negator to ``p``, in closed form.

    Written as an explicit alternating power of 1/(n - 1) rather than by
    delegating to :func:`linear_power_point`, so the two stay independent.
    """
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return 1.0 / n + (-1) ** k * (p - 1.0 / n) / (n - 1) ** k


def contraction_factor(n: int, alpha: float) -> ContractionFactor:
    """Per-step offset scaling of the linear family for given n and alpha."""
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must be in [0, 1], got {alpha!r}")
    return ContractionFactor(factor=-(1.0 - alpha) / (n - 1), n=n, alpha=alpha)


def converge(
    spec: NegatorSpec,
    dist: Dist,
    eps: float = 1e-9,
    max_iter: int = 1000,
    tol: Tolerance = DEFAULT_TOLERANCE,
    full_history: bool = False,
) -> ConvergenceOutcome:
    """Iterate until the orbit lands within ``eps`` of uniform (max norm),
    revisits an earlier distribution, or exhausts ``max_iter`` steps.

    By default only the first two orbit entries are kept for recurrence
    checks: period 2 is the only cycle the shipped families can produce.
    ``full_history`` retains every entry for exploratory use. Recurrence
    at gap 1 (a frozen non-uniform point) is not reported as oscillation;
    such an orbit runs to ``MaxIterReached``.
    """
    if eps <= 0.0:
        raise DomainError(f"eps must be > 0, got {eps!r}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter}")

    current = dist
    if linf_to_uniform(current) < eps:
        return Converged(0, current)
    seen: list[tuple[int, Dist]] = [(0, current)]
    for k in range(1, max_iter + 1):
        current = negate(spec, current)
        if linf_to_uniform(current) < eps:
            return Converged(k, current)
        for j, earlier in seen:
            if k - j >= 2 and max_abs_diff(current, earlier) <= tol.tol_eq:
                return Oscillating(period=k - j, witness=earlier)
        if full_history or len(seen) < 2:
            seen.append((k, current))
    return MaxIterReached(current)


def orbit_csv(trace: OrbitTrace) -> str:
    """Serialize an orbit as CSV: header ``k,p_1..p_n,entropy,linf``,
    one row per step, floats at 17 significant digits."""
    n = trace.steps[0].dist.n
    header = "k," + ",".join(f"p_{i}" for i in range(1, n + 1)) + ",entropy,linf"
    lines = [header]
    for step in trace.steps:
        cells = [str(step.k)]
        cells += [format(v, ".17g") for v in step.dist]
        cells.append(format(step.entropy, ".17g"))
        cells.append(format(step.linf, ".17g"))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
