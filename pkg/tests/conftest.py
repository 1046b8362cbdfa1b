import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hybridseg import ColorImage, GrayChannel  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20130501)


def random_color(rng, height, width):
    return ColorImage(rng.integers(0, 256, (height, width, 3), dtype=np.uint8))


def random_gray(rng, height, width):
    return GrayChannel(rng.integers(0, 256, (height, width), dtype=np.uint8))


def scene(size=512, seed=0):
    """Deterministic color test picture: gradients, a few discs and mild noise."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size] / size
    r = 60 + 120 * xx
    g = 40 + 150 * yy
    b = 200 - 120 * (xx + yy) / 2
    img = np.stack([r, g, b], axis=-1)
    for _ in range(6):
        cy, cx = rng.uniform(0.15, 0.85, 2)
        rad = rng.uniform(0.05, 0.2)
        mask = (yy - cy) ** 2 + (xx - cx) ** 2 < rad**2
        img[mask] = rng.uniform(0, 255, 3)
    img += rng.normal(0, 12, img.shape)
    return ColorImage(np.clip(np.rint(img), 0, 255).astype(np.uint8))


_criteria = []


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((props["criterion"], report.outcome, props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))
