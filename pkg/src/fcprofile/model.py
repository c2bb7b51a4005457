"""Shared data model: profiles, motifs and evaluation requests/results.

Conventions used throughout the package:

* ``z`` and ``dx`` are in micrometers. With these units the dale local
  volume comes out directly in ml/m², no conversion needed.
* Profile indices are 1-based and may be half-integers (plateau centers)
  or arbitrary fractions (interpolated height intersections). Height
  lookups always read at ``floor(index)``, which by construction does not
  change the value for plateau points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

FEATURE_TYPES = ("D", "V", "H", "P")
PRUNE_TYPES = ("None", "Wolfprune", "Width", "VolS", "DevLength")
SIG_TYPES = ("All", "Open", "Closed", "Top", "Bot")
ATTR_TYPES = ("HDh", "HDw", "HDv", "HDl", "PVh", "Curvature", "Count")
STAT_TYPES = ("Mean", "Max", "Min", "StdDev", "Perc", "Hist", "Sum", "Density")

#: Machine-readable warning codes for degenerate evaluations.
EMPTY_MOTIFS = "EMPTY_MOTIFS"
NO_SIGNIFICANT = "NO_SIGNIFICANT"
CURVATURE_EDGE = "CURVATURE_EDGE"
FEW_MOTIFS = "FEW_MOTIFS"


class ProfileError(ValueError):
    """Raised for invalid profile data."""


@dataclass(frozen=True)
class Profile:
    """Equidistantly sampled profile: ordinates ``z`` (µm) and spacing ``dx`` (µm)."""

    z: np.ndarray
    dx: float

    def __post_init__(self):
        z = np.asarray(self.z, dtype=float)
        object.__setattr__(self, "z", z)
        if z.ndim != 1 or z.size < 2:
            raise ProfileError("profile needs at least 2 ordinate values")
        if not np.all(np.isfinite(z)):
            raise ProfileError("profile ordinates must be finite")
        if not (math.isfinite(self.dx) and self.dx > 0):
            raise ProfileError("dx must be strictly positive and finite")

    @property
    def n(self) -> int:
        return self.z.size

    @property
    def length(self) -> float:
        """Evaluation length l_e = n * dx (µm)."""
        return self.n * self.dx

    def x(self, i) -> float:
        """Abscissa (µm) for a 1-based, possibly interpolated index."""
        return (np.asarray(i, dtype=float) - 1.0) * self.dx


def zval(z: np.ndarray, i: float) -> float:
    """Height at a 1-based interpolated index, read at floor(i)."""
    return float(z[int(math.floor(i)) - 1])


@dataclass
class Motif:
    """One dale (or hill): pit, lower peak, higher peak, height intersections.

    All members are interpolated 1-based indices into the profile. ``sig``
    flags the motif as significant (1) or not (0).
    """

    iv: float
    ilp: float
    ihp: float
    ihi: list[float] = field(default_factory=list)
    sig: int = 1

    def to_json(self) -> dict:
        return {
            "iv": self.iv,
            "ilp": self.ilp,
            "ihp": self.ihp,
            "ihi": list(self.ihi),
            "sig": self.sig,
        }

    @classmethod
    def from_json(cls, d: dict) -> "Motif":
        return cls(iv=d["iv"], ilp=d["ilp"], ihp=d["ihp"],
                   ihi=list(d["ihi"]), sig=int(d["sig"]))


@dataclass
class MotifSet:
    """Ordered (left to right) collection of motifs for one feature type."""

    motifs: list[Motif]
    feature_type: str = "D"

    def __len__(self) -> int:
        return len(self.motifs)

    def __iter__(self):
        return iter(self.motifs)

    def __getitem__(self, k):
        return self.motifs[k]

    @property
    def significant(self) -> list[Motif]:
        return [m for m in self.motifs if m.sig == 1]

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.motifs]


# Threshold sentinel: "opt" requests the optimal-periodicity search.
OPT = "opt"


@dataclass
class FcRequest:
    """Fully resolved evaluation request (thresholds already absolute)."""

    ft: str
    pt: str = "None"
    th: float | str = math.nan
    f_sig: str = "All"
    ni_sig: float = math.nan
    at: str = "HDh"
    a_stats: str = "Mean"
    v_stats: float = math.nan

    def __eq__(self, other):
        if not isinstance(other, FcRequest):
            return NotImplemented

        def same(a, b):
            if isinstance(a, float) and isinstance(b, float):
                return (math.isnan(a) and math.isnan(b)) or a == b
            return a == b

        return all(same(getattr(self, f), getattr(other, f))
                   for f in ("ft", "pt", "th", "f_sig", "ni_sig", "at", "a_stats", "v_stats"))


@dataclass
class Histogram:
    edges: list[float]
    counts: list[int]

    def to_json(self) -> dict:
        return {"edges": list(self.edges), "counts": list(self.counts)}


@dataclass
class FcResult:
    """Scalar parameter (or histogram), plus the META record of the evaluation."""

    value: float | Histogram
    meta: dict
    warnings: list[str] = field(default_factory=list)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.warnings)
