"""Command-line front end.

    hybridseg segment in.ppm -o out.ppm [--window K] [--mode binary|means]
                      [--no-median] [--report report.json]
    hybridseg sweep in.ppm -d outdir [--mode binary|means]
    hybridseg bench in.ppm [--repeat N]

Exit codes: 0 success, 2 bad arguments or missing input, 3 I/O or codec error.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from pathlib import Path

from .image import split_channels
from .median import PAPER_WINDOWS, WindowSize, median_filter_fast, median_filter_naive
from .otsu import ValueAssignment
from .pipeline import SegmentationConfig, segment, sweep, sweep_configs
from .ppm import PixmapError, load_ppm, save_ppm

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

PANEL_NAMES = (
    "a_otsu.ppm",
    "b_k3.ppm",
    "c_k5.ppm",
    "d_k7.ppm",
    "e_k9.ppm",
    "f_k11.ppm",
    "g_k13.ppm",
    "h_k15.ppm",
)


class _UsageError(Exception):
    pass


def _odd_window(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be an odd integer, got {text!r}")
    try:
        WindowSize(k)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return k


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridseg",
        description="Color image segmentation by per-channel Otsu thresholds and median smoothing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument(
            "--mode",
            choices=[m.value for m in ValueAssignment],
            default=ValueAssignment.CLASS_MEANS.value,
            help="value written for each class: 0/255 or the rounded class mean (default: means)",
        )
        p.add_argument("--workers", type=_positive_int, default=1, help="worker threads")

    seg = sub.add_parser("segment", help="segment one image")
    seg.add_argument("input", help="input P6 pixmap")
    seg.add_argument("-o", "--output", required=True, help="output P6 pixmap")
    seg.add_argument("--window", type=_odd_window, default=15, help="odd median window size (default 15)")
    add_mode(seg)
    seg.add_argument("--no-median", action="store_true", help="skip the median smoothing stage")
    seg.add_argument("--report", help="write a JSON run report to this path")

    sw = sub.add_parser("sweep", help="write the Otsu-only panel and all seven window sizes")
    sw.add_argument("input", help="input P6 pixmap")
    sw.add_argument("-d", "--outdir", required=True, help="output directory")
    add_mode(sw)

    bench = sub.add_parser("bench", help="time naive vs fast median filters per window size")
    bench.add_argument("input", help="input P6 pixmap")
    bench.add_argument("--repeat", type=_positive_int, default=3, help="runs per window size (median reported)")
    bench.add_argument("--channel", choices=["r", "g", "b"], default="r", help="channel to filter")
    return parser


def _load(path: str):
    if not os.path.isfile(path):
        raise _UsageError(f"input file not found: {path}")
    return load_ppm(path)


def _threshold_report(out) -> dict:
    return {
        name: ("degenerate" if t is None else t)
        for name, t in zip("RGB", out.thresholds)
    }


def _write_json(path, payload) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def run_segment(args) -> int:
    img = _load(args.input)
    cfg = SegmentationConfig(
        window=WindowSize(args.window), mode=args.mode, apply_median=not args.no_median
    )
    out = segment(img, cfg, workers=args.workers)
    save_ppm(args.output, out.image)
    if args.report:
        _write_json(
            args.report,
            {
                "input": args.input,
                "thresholds": _threshold_report(out),
                "mode": cfg.mode.value,
                "window": cfg.window.k,
                "median": cfg.apply_median,
                "distinct_colors": out.image.distinct_colors(),
                "timings_ms": {k: round(v, 3) for k, v in out.timings_ms.items()},
            },
        )
    return EXIT_OK


def run_sweep(args) -> int:
    img = _load(args.input)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    outputs = sweep(img, args.mode, workers=args.workers)
    panels = []
    for name, cfg, out in zip(PANEL_NAMES, sweep_configs(args.mode), outputs):
        save_ppm(outdir / name, out.image)
        panels.append(
            {
                "file": name,
                "median": cfg.apply_median,
                "window": cfg.window.k if cfg.apply_median else None,
                "distinct_colors": out.image.distinct_colors(),
            }
        )
    _write_json(
        outdir / "report.json",
        {
            "input": args.input,
            "mode": ValueAssignment(args.mode).value,
            "thresholds": _threshold_report(outputs[0]),
            "panels": panels,
        },
    )
    return EXIT_OK


def _median_ms(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append((time.perf_counter() - start) * 1e3)
    return statistics.median(times)


def bench_rows(channel, repeat: int = 3, windows=PAPER_WINDOWS) -> list[dict]:
    """Median wall-clock milliseconds of both filters for each window size."""
    median_filter_fast(channel, 3)  # JIT warm-up
    rows = []
    for k in windows:
        rows.append(
            {
                "k": k,
                "naive_ms": round(_median_ms(lambda: median_filter_naive(channel, k), repeat), 3),
                "fast_ms": round(_median_ms(lambda: median_filter_fast(channel, k), repeat), 3),
            }
        )
    return rows


def run_bench(args) -> int:
    img = _load(args.input)
    channel = split_channels(img)["rgb".index(args.channel)]
    payload = {
        "input": args.input,
        "width": img.width,
        "height": img.height,
        "channel": args.channel,
        "repeat": args.repeat,
        "rows": bench_rows(channel, args.repeat),
    }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


_COMMANDS = {"segment": run_segment, "sweep": run_sweep, "bench": run_bench}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"hybridseg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, PixmapError) as exc:
        print(f"hybridseg: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
