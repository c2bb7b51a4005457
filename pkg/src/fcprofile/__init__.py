"""Watershed segmentation and feature characterization for surface
profiles (ISO 21920-2 / ISO 16610-45 style)."""

from .features import (
    attribute_statistics,
    curvature,
    feature_attribute,
    feature_parameter,
    hdl,
    hdv,
    select_significant,
)
from .fclang import (
    FcParseError,
    feature_characterization,
    field_param_rcm,
    field_param_rz,
    named_parameter,
    optimal_periodicity,
    parse_fc,
    serialize_fc,
)
from .model import FcRequest, FcResult, Histogram, Motif, MotifSet, Profile
from .profile_io import load_profile, save_csv, save_smd
from .segmentation import (
    ExtremaIndices,
    build_motifs,
    detect_extrema,
    find,
    get_ilp_ihp,
    height_intersections,
    prune,
    watershed_segmentation,
)

__version__ = "0.1.0"
