"""k x k median smoothing with replicate (clamp-to-edge) borders.

``median_filter_naive`` gathers and sorts every window and serves as the
reference. ``median_filter_fast`` keeps one 256-bin histogram per column and
slides a kernel histogram along each row (Perreault & Hebert), so its cost per
pixel does not depend on k.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numba as nb
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .image import ColorImage, GrayChannel, merge_channels, split_channels

PAPER_WINDOWS = (3, 5, 7, 9, 11, 13, 15)

# elements per sorted block in the naive filter; bounds peak memory
_NAIVE_BLOCK = 1 << 24


@dataclass(frozen=True)
class WindowSize:
    k: int

    def __post_init__(self):
        k = self.k
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
            raise TypeError(f"window size must be an integer, got {k!r}")
        if k % 2 == 0 or not 3 <= k <= 255:
            raise ValueError(f"window size must be odd and in [3, 255], got {k}")
        object.__setattr__(self, "k", int(k))

    @property
    def radius(self) -> int:
        return (self.k - 1) // 2


def _window(w) -> WindowSize:
    return w if isinstance(w, WindowSize) else WindowSize(w)


def _pad(values: np.ndarray, r: int) -> np.ndarray:
    return np.pad(values, r, mode="edge")


def median_filter_naive(ch: GrayChannel, w) -> GrayChannel:
    """Reference filter: sort each k*k window and take its middle element."""
    w = _window(w)
    k = w.k
    padded = _pad(ch.values, w.radius)
    windows = sliding_window_view(padded, (k, k))  # (h, w, k, k) view
    mid = (k * k - 1) // 2
    out = np.empty(ch.shape, dtype=np.uint8)
    rows = max(1, _NAIVE_BLOCK // (ch.width * k * k))
    for y0 in range(0, ch.height, rows):
        block = windows[y0 : y0 + rows].reshape(-1, ch.width, k * k)
        out[y0 : y0 + rows] = np.sort(block, axis=-1)[..., mid]
    return GrayChannel(out)


@nb.njit(cache=True, nogil=True)
def _median_kernel(padded, k, out):
    height, width = out.shape
    padded_width = padded.shape[1]
    rank = (k * k + 1) // 2
    cols = np.zeros((padded_width, 256), dtype=np.int32)
    kernel = np.zeros(256, dtype=np.int32)

    for j in range(padded_width):
        for i in range(k):
            cols[j, padded[i, j]] += 1

    for y in range(height):
        if y > 0:
            for j in range(padded_width):
                cols[j, padded[y - 1, j]] -= 1
                cols[j, padded[y + k - 1, j]] += 1

        for v in range(256):
            kernel[v] = 0
        for j in range(k):
            for v in range(256):
                kernel[v] += cols[j, v]

        for x in range(width):
            if x > 0:
                for v in range(256):
                    kernel[v] += cols[x + k - 1, v] - cols[x - 1, v]
            seen = 0
            for v in range(256):
                seen += kernel[v]
                if seen >= rank:
                    out[y, x] = v
                    break


def median_filter_fast(ch: GrayChannel, w) -> GrayChannel:
    w = _window(w)
    padded = np.ascontiguousarray(_pad(ch.values, w.radius))
    out = np.empty(ch.shape, dtype=np.uint8)
    _median_kernel(padded, w.k, out)
    return GrayChannel(out)


def median_filter_color(img: ColorImage, w, workers: int = 1) -> ColorImage:
    """Filter R, G and B independently, then merge them back."""
    w = _window(w)
    channels = split_channels(img)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=min(workers, 3)) as pool:
            filtered = list(pool.map(lambda c: median_filter_fast(c, w), channels))
    else:
        filtered = [median_filter_fast(c, w) for c in channels]
    return merge_channels(*filtered)
