"""Split -> per-channel Otsu -> value assignment -> merge -> median smoothing."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

from .histogram import compute_histogram
from .image import ColorImage, GrayChannel, merge_channels, split_channels
from .median import PAPER_WINDOWS, WindowSize, median_filter_color
from .otsu import DegenerateHistogram, ValueAssignment, apply_threshold, otsu_threshold

DEFAULT_WINDOW = 15


@dataclass(frozen=True)
class SegmentationConfig:
    window: WindowSize = field(default_factory=lambda: WindowSize(DEFAULT_WINDOW))
    mode: ValueAssignment = ValueAssignment.CLASS_MEANS
    apply_median: bool = True

    def __post_init__(self):
        if not isinstance(self.window, WindowSize):
            object.__setattr__(self, "window", WindowSize(self.window))
        object.__setattr__(self, "mode", ValueAssignment(self.mode))


@dataclass(frozen=True)
class SegmentationOutput:
    """Segmented image and the per-channel thresholds; ``None`` marks a flat channel."""

    image: ColorImage
    t_r: Optional[int]
    t_g: Optional[int]
    t_b: Optional[int]
    config: SegmentationConfig
    timings_ms: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def thresholds(self) -> tuple[Optional[int], Optional[int], Optional[int]]:
        return (self.t_r, self.t_g, self.t_b)


def _threshold_channel(ch: GrayChannel, mode: ValueAssignment):
    try:
        t = otsu_threshold(compute_histogram(ch)).threshold
    except DegenerateHistogram:
        # a flat channel passes through untouched
        return ch, None
    return apply_threshold(ch, t, mode), t


def segment(
    img: ColorImage, cfg: Optional[SegmentationConfig] = None, workers: int = 1
) -> SegmentationOutput:
    """Run the full segmentation on ``img``.

    Thresholds always come from the original channel histograms. ``workers``
    only changes scheduling; the output is identical for any value.
    """
    cfg = cfg or SegmentationConfig()
    timings = {}

    start = time.perf_counter()
    channels = split_channels(img)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=min(workers, 3)) as pool:
            results = list(pool.map(lambda c: _threshold_channel(c, cfg.mode), channels))
    else:
        results = [_threshold_channel(c, cfg.mode) for c in channels]
    timings["otsu"] = (time.perf_counter() - start) * 1e3

    start = time.perf_counter()
    merged = merge_channels(*(ch for ch, _ in results))
    timings["merge"] = (time.perf_counter() - start) * 1e3

    start = time.perf_counter()
    if cfg.apply_median:
        merged = median_filter_color(merged, cfg.window, workers=workers)
    timings["median"] = (time.perf_counter() - start) * 1e3

    t_r, t_g, t_b = (t for _, t in results)
    return SegmentationOutput(merged, t_r, t_g, t_b, cfg, timings)


def sweep_configs(mode=ValueAssignment.CLASS_MEANS) -> list[SegmentationConfig]:
    """Otsu-only panel first, then every paper window size in ascending order."""
    base = SegmentationConfig(mode=mode, apply_median=False)
    return [base] + [
        replace(base, window=WindowSize(k), apply_median=True) for k in PAPER_WINDOWS
    ]


def sweep(
    img: ColorImage, mode=ValueAssignment.CLASS_MEANS, workers: int = 1
) -> list[SegmentationOutput]:
    configs = sweep_configs(mode)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda c: segment(img, c), configs))
    return [segment(img, c) for c in configs]
