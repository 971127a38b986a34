"""Negator classification, involution and axiom checks, fixed points,
and seeded random distributions for property testing.

At a probability value p with image q = N(p) and second image r = N(q):

    contracting at p:   min(p, q) <= r <= max(p, q)
    expanding at p:     min(q, r) <= p <= max(q, r)
    involutive at p:    r == p

Order reversal forces at least one of the first two to hold at every p;
both hold together exactly at involutive points. Strict contraction
additionally requires r strictly inside the first bracket, which can only
be asked away from the fixed value 1/n where the brackets collapse.

For the families that read the whole distribution, the second
application is a *different* scalar map (its context is the negated
distribution), so the pointwise brackets above lose their dichotomy and
can fail on both sides at once. ``classify`` therefore judges those
families at the distribution level, through the max-norm distances to
the uniform distribution along the orbit triple (P, NOT P, NOT NOT P):

    contracting at P:   d2 <= max(d0, d1)   (no escape past the envelope)
    expanding at P:     d0 <= max(d1, d2)   (P inside its successors' envelope)
    involutive at P:    NOT(NOT(P)) == P componentwise

One of the first two always holds (if d2 > max(d0, d1) then d0 < d2).
These are exactly what the pointwise brackets imply about distance to
the fixed value, which is the quantity the convergence theory tracks.
The strict flag stays False at the distribution level: strictness is a
pointwise-bracket notion and the distance envelope cannot witness it.
"""

from __future__ import annotations

import enum
import math
import random
from collections.abc import Callable
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, LengthError, LengthMismatchError
from .simplex import (
    DEFAULT_TOLERANCE,
    Dist,
    Tolerance,
    linf_to_uniform,
    make_dist,
    max_abs_diff,
    stats,
    uniform_dist,
)
from .negators import (
    Involutive,
    Linear,
    NegatorSpec,
    Tsallis,
    Uniform,
    Yager,
    involutive_negated_stats,
    involutive_point,
    linear_point,
    negate,
    yager_point,
)

__all__ = [
    "PointVerdict",
    "Verdict",
    "ClassificationReport",
    "InvolutionCheck",
    "AxiomCheck",
    "classify_point",
    "classify",
    "check_involution",
    "fixed_point",
    "negation_axioms_check",
    "random_dist",
    "report_as_dict",
]


@dataclass(frozen=True)
class PointVerdict:
    """Bracket flags for one orbit triple.

    For pointwise classification the slots hold a probability value, its
    image, and its second image. For distribution-level classification
    (the families that read the whole distribution) they hold the
    max-norm distances to uniform of P, NOT(P), NOT(NOT(P)).
    """

    p: float
    np: float
    nnp: float
    contracting: bool
    strictly_contracting: bool
    expanding: bool
    involutive: bool


class Verdict(enum.Enum):
    CONTRACTING = "contracting"
    STRICTLY_CONTRACTING = "strictly_contracting"
    EXPANDING = "expanding"
    INVOLUTIVE = "involutive"
    MIXED = "mixed"


@dataclass(frozen=True)
class ClassificationReport:
    """Aggregate verdict over sampled points, with up to three witnesses."""

    spec: NegatorSpec
    n: int
    sample_count: int
    verdict: Verdict
    witnesses: tuple[PointVerdict, ...]


class InvolutionCheck(NamedTuple):
    ok: bool
    max_error: float


class AxiomCheck(NamedTuple):
    ok: bool
    violation: str | None


def _point_verdict(p: float, np_: float, nnp: float, n: int, tol: Tolerance) -> PointVerdict:
    t = tol.tol_eq
    lo_c, hi_c = min(p, np_), max(p, np_)
    contracting = lo_c - t <= nnp <= hi_c + t
    lo_e, hi_e = min(np_, nnp), max(np_, nnp)
    expanding = lo_e - t <= p <= hi_e + t
    involutive = abs(nnp - p) <= t
    strict = (
        abs(p - 1.0 / n) > t and lo_c + t < nnp < hi_c - t
    )
    return PointVerdict(
        p=p,
        np=np_,
        nnp=nnp,
        contracting=contracting,
        strictly_contracting=strict,
        expanding=expanding,
        involutive=involutive,
    )


def classify_point(
    negator: Callable[[float], float],
    p: float,
    n: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    *,
    second: Callable[[float], float] | None = None,
) -> PointVerdict:
    """Classify one probability value under a pointwise negator.

    ``negator`` maps a value to its negation. For families whose value
    depends on the whole distribution, the second application happens in
    the context of the negated distribution; the caller must pass that
    re-derived evaluator as ``second`` (a frozen context would classify a
    different map than the one actually iterated).
    """
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p!r}")
    np_ = negator(p)
    nnp = (second if second is not None else negator)(np_)
    return _point_verdict(p, np_, nnp, n, tol)


def _dist_verdict(
    d0: float, d1: float, d2: float, returned: bool, tol: Tolerance
) -> PointVerdict:
    t = tol.tol_eq
    return PointVerdict(
        p=d0,
        np=d1,
        nnp=d2,
        contracting=d2 <= max(d0, d1) + t,
        strictly_contracting=False,
        expanding=d0 <= max(d1, d2) + t,
        involutive=returned,
    )


def _grid_points(samples: int, rng: random.Random) -> list[float]:
    # 101 even points hit 0, 1 and the fixed point 1/n for common n.
    grid = [i / 100 for i in range(101)]
    grid += [rng.random() for _ in range(samples)]
    return grid


def _aggregate(verdicts: list[PointVerdict], n: int, tol: Tolerance) -> Verdict:
    if all(v.involutive for v in verdicts):
        return Verdict.INVOLUTIVE
    if all(v.contracting for v in verdicts):
        eligible = [v for v in verdicts if abs(v.p - 1.0 / n) > tol.tol_eq]
        if eligible and all(v.strictly_contracting for v in eligible):
            return Verdict.STRICTLY_CONTRACTING
        return Verdict.CONTRACTING
    if all(v.expanding for v in verdicts):
        return Verdict.EXPANDING
    return Verdict.MIXED


def _witnesses(
    verdicts: list[PointVerdict], verdict: Verdict, n: int, tol: Tolerance
) -> tuple[PointVerdict, ...]:
    def firstn(pred, count=3):
        return [v for v in verdicts if pred(v)][:count]

    if verdict is Verdict.INVOLUTIVE:
        picks = firstn(lambda v: v.involutive)
    elif verdict is Verdict.STRICTLY_CONTRACTING:
        picks = firstn(lambda v: v.strictly_contracting)
    elif verdict is Verdict.CONTRACTING:
        # Lead with a bracket-equality point: the evidence strictness fails.
        picks = firstn(
            lambda v: abs(v.p - 1.0 / n) > tol.tol_eq and not v.strictly_contracting, 1
        )
        picks += firstn(lambda v: v.contracting and v not in picks, 3 - len(picks))
    elif verdict is Verdict.EXPANDING:
        picks = firstn(lambda v: v.expanding and not v.involutive)
    else:
        picks = firstn(lambda v: v.contracting and not v.expanding, 1)
        picks += firstn(lambda v: v.expanding and not v.contracting, 1)
        picks += firstn(lambda v: not (v.contracting or v.expanding), 1)
    return tuple(picks[:3])


def classify(
    spec: NegatorSpec,
    n: int,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> ClassificationReport:
    """Classify a negator family at length ``n`` from sampled evidence.

    Pointwise families are sampled on a fixed 101-point grid plus
    ``samples`` seeded random values. Distribution-dependent families are
    sampled as ``samples`` whole random distributions; each contributes
    one distribution-level verdict built from the max-norm distances to
    uniform along (P, NOT(P), NOT(NOT(P))) together with an involution
    check (see the module docstring for why pointwise brackets are not
    usable there).
    """
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    rng = random.Random(seed)

    match spec:
        case Yager():
            f = lambda p: yager_point(p, n)  # noqa: E731
        case Uniform():
            f = lambda p: 1.0 / n  # noqa: E731
        case Linear(alpha=alpha):
            f = lambda p: linear_point(p, n, alpha)  # noqa: E731
        case Involutive() | Tsallis():
            f = None
        case _:
            raise TypeError(f"not a negator spec: {spec!r}")

    verdicts: list[PointVerdict] = []
    if f is not None:
        for p in _grid_points(samples, rng):
            verdicts.append(classify_point(f, p, n, tol))
    else:
        for _ in range(samples):
            start = random_dist(n, seed=rng.randrange(2**32))
            once = negate(spec, start)
            twice = negate(spec, once)
            verdicts.append(
                _dist_verdict(
                    linf_to_uniform(start),
                    linf_to_uniform(once),
                    linf_to_uniform(twice),
                    max_abs_diff(start, twice) <= tol.tol_eq,
                    tol,
                )
            )

    verdict = _aggregate(verdicts, n, tol)
    return ClassificationReport(
        spec=spec,
        n=n,
        sample_count=samples,
        verdict=verdict,
        witnesses=_witnesses(verdicts, verdict, n, tol),
    )


def check_involution(
    spec: NegatorSpec, dist: Dist, tol: Tolerance = DEFAULT_TOLERANCE
) -> InvolutionCheck:
    """Whether negating twice returns ``dist``, with the max componentwise error."""
    back = negate(spec, negate(spec, dist))
    err = max_abs_diff(dist, back)
    return InvolutionCheck(ok=err <= tol.tol_eq, max_error=err)


def _pointwise_evaluator(
    spec: NegatorSpec, n: int, context: Dist | None
) -> Callable[[float], float] | None:
    match spec:
        case Yager():
            return lambda p: yager_point(p, n)
        case Uniform():
            return lambda p: 1.0 / n
        case Linear(alpha=alpha):
            return lambda p: linear_point(p, n, alpha)
        case Involutive():
            s = stats(context if context is not None else random_dist(n, seed=0))
            return lambda p: involutive_point(p, s)
        case Tsallis():
            return None
    raise TypeError(f"not a negator spec: {spec!r}")


def fixed_point(
    spec: NegatorSpec,
    n: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    context: Dist | None = None,
) -> float:
    """The unique fixed probability value, 1/n, after verification.

    Verifies that negating the uniform distribution reproduces it and,
    for families with a pointwise form, scans a grid on [0, 1] to confirm
    the value map crosses the identity only at 1/n. The involutive family
    needs a concrete distribution for its stats; pass ``context`` to
    control it (a seeded default is used otherwise). The tsallis family
    has no context-free pointwise form, so only the uniform-distribution
    check applies there.
    """
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    fp = 1.0 / n
    u = uniform_dist(n)
    if max_abs_diff(negate(spec, u), u) > tol.tol_eq:
        raise ArithmeticError(f"{spec!r} does not fix the uniform distribution")

    f = _pointwise_evaluator(spec, n, context)
    if f is not None:
        if abs(f(fp) - fp) > tol.tol_eq:
            raise ArithmeticError(f"{spec!r} does not fix {fp} pointwise")
        step = 1.0 / 1000
        for i in range(1001):
            p = i * step
            diff = f(p) - p
            # A decreasing negator fixing 1/n must sit above the identity
            # left of 1/n and below it to the right.
            if p < fp - step and diff <= 0.0:
                raise ArithmeticError(f"unexpected fixed point near p={p}")
            if p > fp + step and diff >= 0.0:
                raise ArithmeticError(f"unexpected fixed point near p={p}")
    return fp


def negation_axioms_check(
    p_dist: Dist, q_dist: Dist, tol: Tolerance = DEFAULT_TOLERANCE
) -> AxiomCheck:
    """Whether ``q_dist`` is a valid negation of ``p_dist``: order-reversal
    with ties mapped to ties, within ``tol.tol_eq`` slack.

    Validity of ``q_dist`` as a distribution is already guaranteed by its
    type; what is checked here is the pairwise order structure.
    """
    if p_dist.n != q_dist.n:
        raise LengthMismatchError(f"lengths differ: {p_dist.n} vs {q_dist.n}")
    t = tol.tol_eq
    p, q = p_dist.values, q_dist.values
    for i in range(p_dist.n):
        for j in range(p_dist.n):
            if p[i] <= p[j] + t and q[i] < q[j] - t:
                return AxiomCheck(
                    False,
                    f"order not reversed: p_{i + 1}={p[i]!r} <= p_{j + 1}={p[j]!r} "
                    f"but q_{i + 1}={q[i]!r} < q_{j + 1}={q[j]!r}",
                )
    return AxiomCheck(True, None)


def random_dist(n: int, seed: int) -> Dist:
    """Deterministic sample from the flat Dirichlet distribution.

    Draws n unit-exponential variates and normalizes by their sum. All
    coordinates come out strictly positive, so every family (including
    tsallis with k < 0) accepts the result.
    """
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    rng = random.Random(seed)
    while True:
        draws = [rng.expovariate(1.0) for _ in range(n)]
        total = math.fsum(draws)
        values = [d / total for d in draws]
        if min(values) > 0.0:
            return make_dist(values)


def report_as_dict(report: ClassificationReport) -> dict:
    """JSON-ready form of a classification report."""
    from .negators import format_negator

    return {
        "spec": format_negator(report.spec),
        "n": report.n,
        "samples": report.sample_count,
        "verdict": report.verdict.value,
        "witnesses": [
            {
                "p": w.p,
                "np": w.np,
                "nnp": w.nnp,
                "flags": {
                    "contracting": w.contracting,
                    "strictly_contracting": w.strictly_contracting,
                    "expanding": w.expanding,
                    "involutive": w.involutive,
                },
            }
            for w in report.witnesses
        ],
    }
