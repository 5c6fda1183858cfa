"""Content-based image retrieval engine.

Combines an inter-channel HSV voting color histogram (hue bins voted with
saturation mass and vice versa) with a diagonally symmetric co-occurrence
texture pattern (DSCoP) read through a 16-level GLCM, plus exhaustive
retrieval and precision/recall evaluation over labeled image datasets.
"""

from .color import color_feature, hue_voted_histogram, saturation_voted_histogram
from .descriptor import (
    DEFAULT_SCHEME,
    STANDARD_SCHEMES,
    QuantizationScheme,
    extract_feature,
    extract_feature_from_file,
)
from .errors import (
    BuildError,
    CbirError,
    DatasetError,
    DecodeError,
    IndexFormatError,
)
from .estimators import DscopDescriptor, NearestImageRetriever
from .evaluation import (
    CurveData,
    EvalReport,
    evaluate_all,
    precision_recall,
    sweep_curves,
)
from .imaging import HsvImage, decode_image, rgb_to_hsv
from .metrics import DEFAULT_METRIC, METRICS, distance, distance_matrix
from .retrieval import RankedResult, query
from .store import (
    FeatureIndex,
    LabeledImage,
    build_index,
    ingest_dataset,
    load_index,
    save_index,
)
from .texture import dscop_code, dscop_map, glcm, lbp_histogram, texture_feature

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "CbirError",
    "CurveData",
    "DatasetError",
    "DecodeError",
    "DEFAULT_METRIC",
    "DEFAULT_SCHEME",
    "DscopDescriptor",
    "EvalReport",
    "FeatureIndex",
    "HsvImage",
    "IndexFormatError",
    "LabeledImage",
    "METRICS",
    "NearestImageRetriever",
    "QuantizationScheme",
    "RankedResult",
    "STANDARD_SCHEMES",
    "build_index",
    "color_feature",
    "decode_image",
    "distance",
    "distance_matrix",
    "dscop_code",
    "dscop_map",
    "evaluate_all",
    "extract_feature",
    "extract_feature_from_file",
    "glcm",
    "hue_voted_histogram",
    "ingest_dataset",
    "lbp_histogram",
    "load_index",
    "precision_recall",
    "query",
    "rgb_to_hsv",
    "saturation_voted_histogram",
    "save_index",
    "sweep_curves",
    "texture_feature",
]
