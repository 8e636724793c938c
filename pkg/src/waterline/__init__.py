"""Water-body boundary extraction from map rasters.

The pipeline binarizes a map image by HSV thresholds, cleans the mask
morphologically, traces each water region's boundary as an ordered contour,
and converts boundary pixels to GPS coordinates through a control-point
binding file. See ``waterline.cli`` for the command-line entry points and
``waterline.service`` for the HTTP API.
"""

from .colorspace import (
    DEFAULT_WATER_RANGE,
    HsvPixel,
    HsvRange,
    hsv_mask,
    rgb_to_hsv,
    rgb_to_hsv_image,
)
from .edges import (
    Contour,
    GradientField,
    OperatorKind,
    OperatorReport,
    compare_operators,
    convolve3,
    direction,
    edge_mask,
    gradient,
    magnitude,
    trace_contours,
)
from .errors import (
    BindingParseError,
    CorruptImageError,
    DegeneratePointsError,
    InsufficientPointsError,
    MismatchedContoursError,
    StageError,
    UnsupportedFormatError,
    WaterlineError,
)
from .georef import (
    ControlPoint,
    GeoPoint,
    GeoTransform,
    contour_to_gps,
    division_values,
    parse_binding,
    pixel_to_gps,
)
from .metrics import (
    AreaMode,
    RegionStats,
    contour_length,
    region_stats,
    to_kilometers,
)
from .morphology import (
    DEFAULT_SE,
    LabelMap,
    StructuringElement,
    clean,
    dilate,
    drop_small,
    erode,
    label_components,
)
from .pipeline import (
    CompareReport,
    PipelineConfig,
    PipelineReport,
    parse_config_file,
    render_comparison,
    render_outputs,
    run_compare,
    run_pipeline,
    write_comparison,
    write_diagnostics,
    write_outputs,
)
from .raster import load_image, load_mask, save_mask

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # colorspace
    "HsvPixel",
    "HsvRange",
    "DEFAULT_WATER_RANGE",
    "rgb_to_hsv",
    "rgb_to_hsv_image",
    "hsv_mask",
    # raster
    "load_image",
    "save_mask",
    "load_mask",
    # morphology
    "StructuringElement",
    "DEFAULT_SE",
    "LabelMap",
    "dilate",
    "erode",
    "drop_small",
    "clean",
    "label_components",
    # edges
    "OperatorKind",
    "GradientField",
    "Contour",
    "OperatorReport",
    "convolve3",
    "gradient",
    "magnitude",
    "direction",
    "edge_mask",
    "trace_contours",
    "compare_operators",
    # georef
    "ControlPoint",
    "GeoTransform",
    "GeoPoint",
    "parse_binding",
    "division_values",
    "pixel_to_gps",
    "contour_to_gps",
    # metrics
    "AreaMode",
    "RegionStats",
    "contour_length",
    "region_stats",
    "to_kilometers",
    # pipeline
    "PipelineConfig",
    "PipelineReport",
    "CompareReport",
    "run_pipeline",
    "run_compare",
    "render_outputs",
    "render_comparison",
    "write_outputs",
    "write_diagnostics",
    "write_comparison",
    "parse_config_file",
    # errors
    "WaterlineError",
    "UnsupportedFormatError",
    "CorruptImageError",
    "BindingParseError",
    "InsufficientPointsError",
    "DegeneratePointsError",
    "MismatchedContoursError",
    "StageError",
]
