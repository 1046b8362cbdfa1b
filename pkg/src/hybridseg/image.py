"""Pixel-grid data model: 8-bit RGB images, single gray channels, split/merge.

Both types wrap a read-only ``uint8`` numpy array in row-major (row, column)
order, so pixel ``(x, y)`` lives at ``array[y, x]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ColorImage",
    "GrayChannel",
    "DimensionMismatch",
    "split_channels",
    "merge_channels",
]


class DimensionMismatch(ValueError):
    """Raised when channels that must share a shape do not."""


def _as_frozen_u8(data, ndim: int, what: str) -> np.ndarray:
    arr = np.asarray(data)
    if arr.ndim != ndim:
        raise ValueError(f"{what} needs a {ndim}-d array, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{what} must be at least 1x1, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if arr.dtype.kind not in "iub":
            raise TypeError(f"{what} needs integer intensities, got {arr.dtype}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError(f"{what} intensities must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    else:
        arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GrayChannel:
    """A ``height x width`` grid of 8-bit intensities."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _as_frozen_u8(self.values, 2, "GrayChannel"))

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @classmethod
    def from_list(cls, width: int, height: int, values) -> "GrayChannel":
        """Build from a flat row-major sequence of ``width * height`` values."""
        flat = np.asarray(list(values))
        if flat.size != width * height:
            raise ValueError(f"expected {width * height} values, got {flat.size}")
        return cls(flat.reshape(height, width))

    def tolist(self) -> list[int]:
        return self.values.ravel().tolist()

    def __eq__(self, other):
        if not isinstance(other, GrayChannel):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.values.shape, self.values.tobytes()))

    def __repr__(self):
        return f"GrayChannel(width={self.width}, height={self.height})"


@dataclass(frozen=True, eq=False)
class ColorImage:
    """A ``height x width`` grid of (r, g, b) pixels, 8 bits per component."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = _as_frozen_u8(self.pixels, 3, "ColorImage")
        if arr.shape[2] != 3:
            raise ValueError(f"ColorImage needs 3 components per pixel, got {arr.shape[2]}")
        object.__setattr__(self, "pixels", arr)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape[:2]

    @classmethod
    def from_list(cls, width: int, height: int, pixels) -> "ColorImage":
        """Build from a flat row-major sequence of ``(r, g, b)`` triples."""
        flat = np.asarray(list(pixels))
        if flat.shape != (width * height, 3):
            raise ValueError(
                f"expected {width * height} rgb triples, got array of shape {flat.shape}"
            )
        return cls(flat.reshape(height, width, 3))

    def tolist(self) -> list[tuple[int, int, int]]:
        return [tuple(p) for p in self.pixels.reshape(-1, 3).tolist()]

    def distinct_colors(self) -> int:
        """Number of distinct RGB triples in the image."""
        packed = (
            self.pixels[..., 0].astype(np.uint32) << 16
            | self.pixels[..., 1].astype(np.uint32) << 8
            | self.pixels[..., 2].astype(np.uint32)
        )
        return int(np.unique(packed).size)

    def __eq__(self, other):
        if not isinstance(other, ColorImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __hash__(self):
        return hash((self.pixels.shape, self.pixels.tobytes()))

    def __repr__(self):
        return f"ColorImage(width={self.width}, height={self.height})"


def split_channels(img: ColorImage) -> tuple[GrayChannel, GrayChannel, GrayChannel]:
    """Return the (R, G, B) planes of ``img`` as gray channels."""
    return tuple(GrayChannel(img.pixels[..., c]) for c in range(3))


def merge_channels(r: GrayChannel, g: GrayChannel, b: GrayChannel) -> ColorImage:
    if not (r.shape == g.shape == b.shape):
        raise DimensionMismatch(
            f"channel shapes differ: R {r.width}x{r.height}, "
            f"G {g.width}x{g.height}, B {b.width}x{b.height}"
        )
    return ColorImage(np.stack([r.values, g.values, b.values], axis=-1))
