"""Binary netpbm codecs: P6 color pixmaps and P5 graymaps, maxval 255 only.

Writes are canonical (``P6\\n{w} {h}\\n255\\n`` followed by raw bytes, no
comments) so equal images always encode to equal byte strings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .image import ColorImage, GrayChannel

_WHITESPACE = b" \t\n\r\v\f"


class PixmapError(ValueError):
    """Base class for decode failures; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class MalformedHeader(PixmapError):
    pass


class UnsupportedMaxval(PixmapError):
    pass


class TruncatedPayload(PixmapError):
    pass


@dataclass(frozen=True)
class PixmapHeader:
    magic: str
    width: int
    height: int
    maxval: int
    data_offset: int


def _next_token(data: bytes, pos: int) -> tuple[bytes, int, int]:
    """Skip whitespace and comments; return (token, token start, position after token)."""
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c in _WHITESPACE:
            pos += 1
        elif c == b"#":
            while pos < n and data[pos : pos + 1] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    return data[start:pos], start, pos


def _parse_int(token: bytes, offset: int, name: str) -> int:
    if not token:
        raise MalformedHeader(f"missing {name}", offset)
    if not token.isdigit():
        raise MalformedHeader(f"{name} is not a decimal integer: {token[:16]!r}", offset)
    return int(token)


def read_header(data: bytes, magic: str) -> PixmapHeader:
    data = bytes(data)
    if data[:2] != magic.encode():
        raise MalformedHeader(f"expected magic {magic!r}, found {data[:2]!r}", 0)
    pos = 2
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE + b"#":
        raise MalformedHeader("magic must be followed by whitespace", pos)

    values = []
    for name in ("width", "height", "maxval"):
        token, start, pos = _next_token(data, pos)
        values.append(_parse_int(token, start, name))
        if name != "maxval" and values[-1] < 1:
            raise MalformedHeader(f"{name} must be positive, got {values[-1]}", start)
        last_start = start
    width, height, maxval = values
    if maxval != 255:
        raise UnsupportedMaxval(f"maxval {maxval} unsupported, only 255 is accepted", last_start)
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise MalformedHeader("maxval must be followed by a single whitespace byte", pos)
    return PixmapHeader(magic, width, height, maxval, pos + 1)


def _payload(data: bytes, header: PixmapHeader, depth: int) -> np.ndarray:
    need = header.width * header.height * depth
    have = len(data) - header.data_offset
    if have < need:
        raise TruncatedPayload(
            f"payload has {have} bytes, {need} needed for "
            f"{header.width}x{header.height}x{depth}",
            len(data),
        )
    raw = np.frombuffer(data, dtype=np.uint8, count=need, offset=header.data_offset)
    shape = (header.height, header.width, depth) if depth > 1 else (header.height, header.width)
    return raw.reshape(shape)


def read_ppm(data: bytes) -> ColorImage:
    data = bytes(data)
    return ColorImage(_payload(data, read_header(data, "P6"), 3))


def read_pgm(data: bytes) -> GrayChannel:
    data = bytes(data)
    return GrayChannel(_payload(data, read_header(data, "P5"), 1))


def write_ppm(img: ColorImage) -> bytes:
    return f"P6\n{img.width} {img.height}\n255\n".encode("ascii") + img.pixels.tobytes()


def write_pgm(ch: GrayChannel) -> bytes:
    return f"P5\n{ch.width} {ch.height}\n255\n".encode("ascii") + ch.values.tobytes()


def load_ppm(path: str | os.PathLike) -> ColorImage:
    with open(path, "rb") as fh:
        return read_ppm(fh.read())


def save_ppm(path: str | os.PathLike, img: ColorImage) -> None:
    with open(path, "wb") as fh:
        fh.write(write_ppm(img))


def load_pgm(path: str | os.PathLike) -> GrayChannel:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path: str | os.PathLike, ch: GrayChannel) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pgm(ch))
