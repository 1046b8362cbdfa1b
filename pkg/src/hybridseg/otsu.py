"""Otsu's automatic two-class threshold selection.

Classes are split by a bin index ``t``: levels ``0..t`` form the low class and
``t+1..255`` the high class. Candidates run over ``t = 0..254`` so the high
class can be non-empty.

The returned threshold is chosen with exact integer arithmetic on the raw
counts, so ties between candidates (plateaus over empty bins, symmetric
histograms) always resolve to the smallest index regardless of rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .histogram import LEVELS, Histogram, ProbDist, compute_histogram
from .image import GrayChannel

MAX_THRESHOLD = LEVELS - 2

_LEVEL_INDEX = np.arange(LEVELS, dtype=np.float64)


class DegenerateHistogram(ValueError):
    """All pixels share one gray level, so no threshold separates two classes."""

    def __init__(self, level: int):
        super().__init__(f"every pixel has gray level {level}; no two-class split exists")
        self.level = level


class ValueAssignment(enum.Enum):
    """How thresholded classes are mapped to output intensities."""

    BINARY = "binary"
    CLASS_MEANS = "means"


@dataclass(frozen=True)
class ClassStats:
    t: int
    beta1: float
    beta2: float
    mu1: float
    mu2: float
    muT: float
    sigma2: float


@dataclass(frozen=True, eq=False)
class OtsuResult:
    threshold: int
    stats: ClassStats
    curve: np.ndarray  # curve[t] = between-class variance at t, t = 0..254


def _check_t(t) -> int:
    if isinstance(t, bool) or not isinstance(t, (int, np.integer)):
        raise TypeError(f"threshold must be an integer bin index, got {t!r}")
    if not 0 <= t <= MAX_THRESHOLD:
        raise ValueError(f"threshold {t} outside [0, {MAX_THRESHOLD}]")
    return int(t)


def between_class_variance(s: ClassStats) -> float:
    return s.beta1 * (s.mu1 - s.muT) ** 2 + s.beta2 * (s.mu2 - s.muT) ** 2


def class_stats(p: ProbDist, t: int) -> ClassStats:
    """Class weights and means for the split at ``t``.

    An empty class gets mean 0; its zero weight keeps it out of the variance.
    """
    t = _check_t(t)
    prob = np.asarray(p.p, dtype=np.float64)
    weighted = _LEVEL_INDEX * prob
    beta1 = float(prob[: t + 1].sum())
    beta2 = float(prob[t + 1 :].sum())
    m1 = float(weighted[: t + 1].sum())
    m2 = float(weighted[t + 1 :].sum())
    mu1 = m1 / beta1 if beta1 > 0 else 0.0
    mu2 = m2 / beta2 if beta2 > 0 else 0.0
    muT = float(weighted.sum())
    sigma2 = beta1 * (mu1 - muT) ** 2 + beta2 * (mu2 - muT) ** 2
    return ClassStats(t, beta1, beta2, mu1, mu2, muT, sigma2)


def _split_sums(counts: np.ndarray) -> tuple[list[int], list[int], int, int]:
    """Cumulative pixel counts and level sums for every candidate, as Python ints."""
    counts = np.asarray(counts, dtype=np.int64)
    n_low = np.cumsum(counts)[: MAX_THRESHOLD + 1]
    s_low = np.cumsum(counts * np.arange(LEVELS, dtype=np.int64))[: MAX_THRESHOLD + 1]
    total = int(counts.sum())
    level_sum = int((counts * np.arange(LEVELS, dtype=np.int64)).sum())
    return n_low.tolist(), s_low.tolist(), total, level_sum


def otsu_threshold(h: Histogram) -> OtsuResult:
    """Pick the threshold maximizing the between-class variance.

    With ``n1`` pixels and level sum ``s1`` in the low class, the variance is
    ``(N*s1 - S*n1)**2 / (N**2 * n1 * n2)``. Candidates are compared as exact
    fractions and the curve holds each value correctly rounded to float, so
    ``curve[threshold]`` is never below any other entry.

    Raises:
        DegenerateHistogram: every pixel sits in a single bin.
    """
    occupied = np.flatnonzero(h.counts)
    if occupied.size == 1:
        raise DegenerateHistogram(int(occupied[0]))

    n_low, s_low, total, level_sum = _split_sums(h.counts)
    curve = np.zeros(MAX_THRESHOLD + 1, dtype=np.float64)
    best_t, best_num, best_den = 0, 0, 1
    for t in range(MAX_THRESHOLD + 1):
        n1 = n_low[t]
        n2 = total - n1
        if n1 == 0 or n2 == 0:
            continue
        num = (total * s_low[t] - level_sum * n1) ** 2
        den = n1 * n2
        curve[t] = num / (den * total * total)
        # strict '>' keeps the first maximizer
        if num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den

    curve.setflags(write=False)
    p = ProbDist(h.counts / float(h.total))
    return OtsuResult(best_t, class_stats(p, best_t), curve)


def _class_means_lut(h: Histogram, t: int) -> np.ndarray:
    n_low, s_low, total, level_sum = _split_sums(h.counts)
    n1, s1 = n_low[t], s_low[t]
    n2, s2 = total - n1, level_sum - s1
    # round half up, exactly
    low = (2 * s1 + n1) // (2 * n1) if n1 else 0
    high = (2 * s2 + n2) // (2 * n2) if n2 else 0
    lut = np.empty(LEVELS, dtype=np.uint8)
    lut[: t + 1] = low
    lut[t + 1 :] = high
    return lut


def apply_threshold(
    ch: GrayChannel, t: int, mode: ValueAssignment = ValueAssignment.CLASS_MEANS
) -> GrayChannel:
    """Map each pixel to its class value.

    ``BINARY`` sends levels ``<= t`` to 0 and the rest to 255. ``CLASS_MEANS``
    sends each class to its rounded mean level, measured on ``ch`` itself.
    """
    t = _check_t(t)
    mode = ValueAssignment(mode)
    if mode is ValueAssignment.BINARY:
        lut = np.full(LEVELS, 255, dtype=np.uint8)
        lut[: t + 1] = 0
    else:
        lut = _class_means_lut(compute_histogram(ch), t)
    return GrayChannel(lut[ch.values])
