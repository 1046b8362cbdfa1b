"""Color image segmentation: per-channel Otsu thresholding followed by median smoothing."""

from .histogram import Histogram, ProbDist, compute_histogram, to_probabilities
from .image import ColorImage, DimensionMismatch, GrayChannel, merge_channels, split_channels
from .median import (
    PAPER_WINDOWS,
    WindowSize,
    median_filter_color,
    median_filter_fast,
    median_filter_naive,
)
from .otsu import (
    ClassStats,
    DegenerateHistogram,
    OtsuResult,
    ValueAssignment,
    apply_threshold,
    between_class_variance,
    class_stats,
    otsu_threshold,
)
from .pipeline import SegmentationConfig, SegmentationOutput, segment, sweep
from .ppm import (
    MalformedHeader,
    PixmapError,
    TruncatedPayload,
    UnsupportedMaxval,
    read_pgm,
    read_ppm,
    write_pgm,
    write_ppm,
)

__version__ = "0.1.0"
