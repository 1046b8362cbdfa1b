"""256-bin gray-level histograms and their normalized probabilities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayChannel

LEVELS = 256


@dataclass(frozen=True, eq=False)
class Histogram:
    """Exact per-level pixel counts; ``counts[i]`` is the number of pixels at level i."""

    counts: np.ndarray
    total: int

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.shape != (LEVELS,):
            raise ValueError(f"histogram needs {LEVELS} bins, got shape {counts.shape}")
        if (counts < 0).any():
            raise ValueError("histogram counts must be non-negative")
        if int(counts.sum()) != self.total:
            raise ValueError(f"counts sum to {int(counts.sum())}, total says {self.total}")
        if self.total < 1:
            raise ValueError("histogram must count at least one pixel")
        counts = counts.copy()
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "total", int(self.total))

    @classmethod
    def from_counts(cls, counts) -> "Histogram":
        counts = np.asarray(counts, dtype=np.int64)
        return cls(counts, int(counts.sum()))

    def __eq__(self, other):
        if not isinstance(other, Histogram):
            return NotImplemented
        return self.total == other.total and np.array_equal(self.counts, other.counts)


@dataclass(frozen=True, eq=False)
class ProbDist:
    p: np.ndarray


def compute_histogram(ch: GrayChannel) -> Histogram:
    counts = np.bincount(ch.values.ravel(), minlength=LEVELS).astype(np.int64)
    return Histogram(counts, ch.width * ch.height)


def to_probabilities(h: Histogram) -> ProbDist:
    p = h.counts / float(h.total)
    p.setflags(write=False)
    return ProbDist(p)
