"""Lorenz curves, gap vectors, and asymmetry-sensitive inequality indices.

The classical dispersion index is ``(2/n) * sum(p_i - q_i)`` over the n-1
interior points of the Lorenz curve; the textbook prefactor ``2n/n^2``
reduces to ``2/n`` and is implemented that way (the two expressions divide
to the same float). Two weighted variants emphasize the tails: ``g_right``
weights each gap by ``2i/n`` (upper tail), ``g_left`` by ``(2n-2i)/n``
(lower tail, the same weights reversed). Their mean is always the plain
index, and ``sag = gini + |g_right - g_left|/2`` equals the larger of the
two, so it adds asymmetry information on top of dispersion.

All gap sums use :func:`math.fsum` (error-free transformation summation),
which is exact up to the final rounding and therefore invariant to term
order. Every value type is immutable after construction; all operations
are pure functions and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import (
    BadEndpointError,
    EmptyOrSingletonError,
    InvalidNError,
    NonFiniteValueError,
    NonPositiveTotalError,
    UnequalSpacingError,
)

Direction = Literal["right", "left"]
SkewDirection = Literal["symmetric", "right", "left"]

#: |g_right - g_left| at or below this reports as "symmetric", so float noise
#: on palindromic gap vectors never shows up as spurious skew.
SKEW_TOLERANCE = 1e-9

#: Slack for float checks that are exact identities in real arithmetic
#: (convexity of share increments, gaps above the diagonal).
_CONVEXITY_SLACK = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Dataset:
    """Validated observations, kept in input order.

    Build one with :func:`build_dataset`; it enforces at least two finite
    values with a strictly positive total. Individual zeros and negatives
    are fine.
    """

    values: np.ndarray
    total: float

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def mean(self) -> float:
        return self.total / self.n

    @cached_property
    def sorted_values(self) -> np.ndarray:
        """Ascending copy of the observations."""
        return _readonly(np.sort(self.values))


@dataclass(frozen=True, eq=False)
class LorenzCurve:
    """Cumulative population shares ``p`` and resource shares ``q``.

    ``p_i = i/n`` on the uniform grid and ``q_n`` is exactly 1. ``convex``
    records whether successive increments of ``q`` are non-decreasing;
    curves built from sorted observations always are, point-set input may
    not be.
    """

    p: np.ndarray
    q: np.ndarray
    convex: bool

    @property
    def n(self) -> int:
        return self.p.size


@dataclass(frozen=True, eq=False)
class GapVector:
    """Distances ``d_i = p_i - q_i`` at the n-1 interior grid points.

    The i = n term is identically zero (both endpoints are 1) and is not
    stored.
    """

    gaps: np.ndarray
    n: int


@dataclass(frozen=True, eq=False)
class WeightVector:
    weights: np.ndarray
    direction: Direction


@dataclass(frozen=True)
class InequalityReport:
    """The four indices plus the skew call for one dataset or point set.

    ``mean`` is None when the report came from Lorenz points alone, which
    carry no scale information. ``convex`` is False when the underlying
    curve has a decreasing share increment somewhere (possible only for
    point-set input).
    """

    n: int
    mean: float | None
    gini: float
    g_right: float
    g_left: float
    sag: float
    skew_direction: SkewDirection
    convex: bool = True


def build_dataset(raw: Iterable[float]) -> Dataset:
    """Validate raw observations into a :class:`Dataset`.

    Parameters
    ----------
    raw : iterable of real numbers
        Resource values (e.g. incomes), any order.

    Raises
    ------
    EmptyOrSingletonError
        Fewer than two observations; the gap vector needs at least one
        interior point.
    NonFiniteValueError
        Any NaN or infinity; the first offending index is reported.
    NonPositiveTotalError
        Values summing to zero or less; shares would be undefined or
        sign-flipped.
    """
    if not hasattr(raw, "__len__"):
        raw = list(raw)
    values = np.array(raw, dtype=float)
    if values.ndim != 1:
        raise ValueError("expected a one-dimensional sequence of values")
    if values.size < 2:
        raise EmptyOrSingletonError(
            f"need at least 2 observations, got {values.size}"
        )
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        raise NonFiniteValueError(
            f"non-finite value {values[bad[0]]!r} at index {int(bad[0])}"
        )
    total = math.fsum(values)
    if total <= 0.0:
        raise NonPositiveTotalError(
            f"sum of values must be positive, got {total!r}"
        )
    return Dataset(values=_readonly(values), total=total)


def lorenz_curve(data: Dataset) -> LorenzCurve:
    """Sort ascending and accumulate shares: ``p_i = i/n``, ``q_i = s_i/T``.

    The endpoint ``q_n`` is forced to exactly 1.0 so cumulative-sum drift
    cannot leak into the last interior gap.
    """
    n = data.n
    s = np.cumsum(data.sorted_values)
    denom = s[-1]
    if denom <= 0.0:
        # The exact total was checked positive at construction; the running
        # float sum can only land here through catastrophic cancellation.
        raise NonPositiveTotalError(
            "cumulative sum of sorted values collapsed to a non-positive total"
        )
    q = s / denom
    q[-1] = 1.0
    p = np.arange(1, n + 1, dtype=float) / n
    return LorenzCurve(p=_readonly(p), q=_readonly(q), convex=_is_convex(q))


def _is_convex(q: np.ndarray) -> bool:
    inc = np.diff(q, prepend=0.0)
    return bool(np.all(np.diff(inc) >= -_CONVEXITY_SLACK))


def gap_vector(curve: LorenzCurve) -> GapVector:
    """Interior distances between the diagonal and the curve."""
    gaps = (curve.p - curve.q)[:-1]
    return GapVector(gaps=_readonly(gaps), n=curve.n)


def make_weights(n: int, direction: Direction) -> WeightVector:
    """Tail-emphasis weights on the n-1 interior grid points.

    ``right`` weights ``2i/n`` grow toward the upper tail; ``left`` weights
    ``(2n-2i)/n`` are the same floats in reversed order. Both range over
    (0, 2), average to 1, and satisfy ``right_i + left_i == 2`` exactly.
    """
    if n < 2:
        raise InvalidNError(f"need n >= 2, got {n}")
    i = np.arange(1, n, dtype=float)
    if direction == "right":
        w = 2.0 * i / n
    elif direction == "left":
        w = 2.0 * (n - i) / n
    else:
        raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")
    return WeightVector(weights=_readonly(w), direction=direction)


def gini(gapv: GapVector) -> float:
    """Classical dispersion index ``(2/n) * sum(gaps)``."""
    return (2.0 / gapv.n) * math.fsum(gapv.gaps)


def g_right(gapv: GapVector) -> float:
    """Upper-tail weighted index ``(2/n) * sum(gaps_i * 2i/n)``."""
    w = make_weights(gapv.n, "right").weights
    return (2.0 / gapv.n) * math.fsum(gapv.gaps * w)


def g_left(gapv: GapVector) -> float:
    """Lower-tail weighted index ``(2/n) * sum(gaps_i * (2n-2i)/n)``."""
    w = make_weights(gapv.n, "left").weights
    return (2.0 / gapv.n) * math.fsum(gapv.gaps * w)


def sag(gapv: GapVector) -> float:
    """Skew-adjusted index ``gini + |g_right - g_left| / 2``.

    Numerically equal to ``max(g_right, g_left)`` and never below ``gini``.
    """
    return _combine_sag(gini(gapv), g_right(gapv), g_left(gapv))


def _combine_sag(g: float, gr: float, gl: float) -> float:
    return g + abs(gr - gl) / 2.0


def _skew_call(gr: float, gl: float) -> SkewDirection:
    d = gr - gl
    if d > SKEW_TOLERANCE:
        return "right"
    if d < -SKEW_TOLERANCE:
        return "left"
    return "symmetric"


def report(data: Dataset) -> InequalityReport:
    """Full pipeline: Lorenz curve, gap vector, all four indices, skew call."""
    curve = lorenz_curve(data)
    return _report_from_curve(curve, mean=data.mean)


def lorenz_from_points(points: Sequence[tuple[float, float]]) -> LorenzCurve:
    """Validate and normalize raw ``(p, q)`` pairs into a curve.

    The ``p`` grid must be uniform (``p_i = i/n``, the grid the weights are
    defined on) and the last ``q`` must be 1; both are checked to 1e-9. A
    leading (0, 0) point is tolerated and dropped. No sorting or convexity
    enforcement happens here: point sets that no sorted dataset can produce
    are accepted and merely flagged ``convex=False``.
    """
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        raise EmptyOrSingletonError("need at least 2 points beyond the origin")
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected a sequence of (p, q) pairs")
    bad = np.flatnonzero(~np.isfinite(pts).all(axis=1))
    if bad.size:
        raise NonFiniteValueError(
            f"non-finite Lorenz point at index {int(bad[0])}"
        )
    if pts.shape[0] and abs(pts[0, 0]) <= 1e-12:
        if abs(pts[0, 1]) > 1e-9:
            raise BadEndpointError(
                f"a curve through p=0 must start at q=0, got q={pts[0, 1]!r}"
            )
        pts = pts[1:]
    n = pts.shape[0]
    if n < 2:
        raise EmptyOrSingletonError(
            "need at least 2 points beyond the origin"
        )
    p = pts[:, 0]
    q = pts[:, 1].copy()
    grid = np.arange(1, n + 1, dtype=float) / n
    off = np.abs(p - grid)
    worst = int(np.argmax(off))
    if off[worst] > 1e-9:
        raise UnequalSpacingError(
            f"p grid must be uniform i/n: point {worst + 1} has "
            f"p={p[worst]!r}, expected {grid[worst]!r}"
        )
    if abs(q[-1] - 1.0) > 1e-9:
        raise BadEndpointError(f"last q must be 1, got {q[-1]!r}")
    q[-1] = 1.0
    return LorenzCurve(p=_readonly(grid), q=_readonly(q), convex=_is_convex(q))


def metrics_from_lorenz(points: Sequence[tuple[float, float]]) -> InequalityReport:
    """Indices straight from ``(p, q)`` points on the uniform grid.

    The report's ``mean`` is None (shares carry no scale) and ``convex``
    is False when some share increment decreases; that is a warning flag,
    not an error.
    """
    curve = lorenz_from_points(points)
    return _report_from_curve(curve, mean=None)


def _report_from_curve(curve: LorenzCurve, mean: float | None) -> InequalityReport:
    gapv = gap_vector(curve)
    g = gini(gapv)
    gr = g_right(gapv)
    gl = g_left(gapv)
    return InequalityReport(
        n=curve.n,
        mean=mean,
        gini=g,
        g_right=gr,
        g_left=gl,
        sag=_combine_sag(g, gr, gl),
        skew_direction=_skew_call(gr, gl),
        convex=curve.convex,
    )
