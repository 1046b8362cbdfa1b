import numpy as np
import pytest

from conftest import random_color, random_gray
from hybridseg import (
    ColorImage,
    GrayChannel,
    MalformedHeader,
    TruncatedPayload,
    UnsupportedMaxval,
    read_pgm,
    read_ppm,
    write_pgm,
    write_ppm,
)
from hybridseg.ppm import load_ppm, save_ppm


def test_minimal_pixmap():
    assert read_ppm(b"P6 1 1 255\n" + bytes([10, 20, 30])).tolist() == [(10, 20, 30)]


def test_canonical_single_black_pixel():
    data = write_ppm(ColorImage.from_list(1, 1, [(0, 0, 0)]))
    assert data == b"P6\n1 1\n255\n\x00\x00\x00"
    assert len(data) == 14


def test_canonical_graymap():
    assert write_pgm(GrayChannel.from_list(2, 1, [7, 8])) == b"P5\n2 1\n255\n\x07\x08"


def test_equal_images_encode_equally(rng):
    img = random_color(rng, 5, 9)
    assert write_ppm(img) == write_ppm(ColorImage(img.pixels.copy()))


def test_header_comments_and_whitespace():
    data = b"P6\n# made by hand\n2 # width\n\t1\n#maxval next\n255\r" + bytes(range(6))
    img = read_ppm(data)
    assert img.tolist() == [(0, 1, 2), (3, 4, 5)]


def test_payload_may_start_with_whitespace_byte():
    data = b"P5 2 1 255\n" + b"\n\x20"
    assert read_pgm(data).tolist() == [10, 32]


def test_trailing_bytes_ignored():
    assert read_pgm(b"P5 1 1 255\n\x05extra").tolist() == [5]


def test_unsupported_maxval():
    with pytest.raises(UnsupportedMaxval) as info:
        read_ppm(b"P6 1 1 65535\n" + bytes(6))
    assert info.value.offset == 7


def test_truncated_payload():
    with pytest.raises(TruncatedPayload) as info:
        read_ppm(b"P6 2 2 255\n" + bytes(11))
    assert info.value.offset == 22


@pytest.mark.parametrize(
    "data",
    [
        b"P3 1 1 255\n0 0 0",
        b"P5 1 1 255\n\x00",
        b"P6",
        b"P61 1 255\n\x00\x00\x00",
        b"P6 x 1 255\n\x00\x00\x00",
        b"P6 0 1 255\n",
        b"P6 1 1\n",
        b"P6 1 1 255",
        b"",
    ],
)
def test_malformed_headers(data):
    with pytest.raises(MalformedHeader):
        read_ppm(data)


def test_error_classes_are_distinct():
    classes = set()
    for data in (b"P6 x 1 255\n", b"P6 1 1 65535\n", b"P6 1 1 255\n\x00"):
        with pytest.raises(ValueError) as info:
            read_ppm(data)
        classes.add(type(info.value))
    assert classes == {MalformedHeader, UnsupportedMaxval, TruncatedPayload}


def test_round_trip_random(rng):
    for _ in range(100):
        h, w = rng.integers(1, 20, 2)
        img = random_color(rng, h, w)
        assert read_ppm(write_ppm(img)) == img
        ch = random_gray(rng, h, w)
        assert read_pgm(write_pgm(ch)) == ch


def test_rewrite_is_canonical():
    data = b"P6 # c\n2   1\n255\n" + bytes(range(6))
    assert write_ppm(read_ppm(data)) == b"P6\n2 1\n255\n" + bytes(range(6))


def test_files(tmp_path, rng):
    img = random_color(rng, 4, 3)
    path = tmp_path / "x.ppm"
    save_ppm(path, img)
    assert load_ppm(path) == img
