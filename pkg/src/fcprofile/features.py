"""Feature attributes and parameters: significance selection, per-motif
attribute values (depth, width, volume, developed length, curvature, ...)
and the statistics that condense them into a single parameter."""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from .kernels import curvature_stencil, path_length
from .model import (
    ATTR_TYPES,
    CURVATURE_EDGE,
    EMPTY_MOTIFS,
    NO_SIGNIFICANT,
    STAT_TYPES,
    FcResult,
    Histogram,
    Motif,
    MotifSet,
    Profile,
    zval,
)


def _fti(z: np.ndarray, first: Motif) -> float:
    """Feature type indicator: +1 for dales, -1 for hills (sign of lower
    peak minus pit of the first motif)."""
    return math.copysign(1.0, zval(z, first.ilp) - zval(z, first.iv))


def hdv(z: np.ndarray, dx: float, m: Motif) -> float:
    """Dale local volume (ml/m² for µm inputs): area below the lower-peak
    level within the dale, divided by the evaluation length.

    Pruning can leave several height intersections, so the area is summed
    over intersection pairs; integer sample indices inside each partial
    area are rounded toward its interior and the exact interpolated
    crossings close the path at the lower-peak level.
    """
    z_lp = zval(z, m.ilp)
    d = 1 if m.ihp > m.ilp else -1
    bounds = [m.ilp] + list(m.ihi)
    area = 0.0
    for a, b in zip(bounds[0::2], bounds[1::2]):
        i1 = abs(math.ceil(d * a))
        i2 = abs(math.floor(d * b))
        idx = np.arange(i1, i2 + d, d)
        xf = dx * np.concatenate(([a], idx, [b]))
        zf = np.concatenate(([z_lp], z[idx - 1], [z_lp]))
        area += abs(np.trapezoid(zf - z_lp, xf))
    return area / (z.size * dx)


def hdl(z: np.ndarray, dx: float, m: Motif) -> float:
    """Dale local developed length (µm): path length from the lower peak to
    the last height intersection.

    Three parts: segment sums over integer-index samples, the flat piece of
    a fractional plateau start, and the closing segment to the interpolated
    terminal crossing.
    """
    z_lp = zval(z, m.ilp)
    d = 1 if m.ihp > m.ilp else -1
    ihi_end = m.ihi[-1]
    i1 = abs(math.ceil(d * m.ilp))
    i2 = abs(math.floor(d * ihi_end))
    zf = np.ascontiguousarray(z[np.arange(i1, i2 + d, d) - 1])
    return (path_length(zf, dx)
            + abs(m.ilp - i1) * dx
            + math.hypot((ihi_end - i2) * dx, z_lp - z[i2 - 1]))


def curvature(profile: Profile, iv: float) -> float:
    """Second derivative at a pit index from the degree-6 interpolating
    polynomial over 7 centered samples; plateau (half-integer) pits average
    the two surrounding integer indices. NaN when the window would leave
    the profile."""
    return _curvature(profile.z, profile.dx, iv)


def _curvature(z: np.ndarray, dx: float, iv: float) -> float:
    lo = int(math.floor(iv))
    hi = int(math.ceil(iv))
    if lo - 3 < 1 or hi + 3 > z.size:
        return math.nan
    if lo == hi:
        return curvature_stencil(z, lo, dx)
    return 0.5 * (curvature_stencil(z, lo, dx) + curvature_stencil(z, hi, dx))


def attribute_values(z: np.ndarray, dx: float, motifs: list[Motif], at: str,
                     ignore_sig: bool = False) -> np.ndarray:
    """Attribute vector for the significant motifs, in motif order.

    ``at`` accepts both attribute types and pruning types (each pruning
    type is an alias for the attribute it thresholds).
    """
    sel = list(motifs) if ignore_sig else [m for m in motifs if m.sig == 1]
    if not sel:
        return np.empty(0)
    z = np.asarray(z, dtype=float)
    if at in ("Wolfprune", "HDh"):
        vals = [abs(zval(z, m.ilp) - zval(z, m.iv)) for m in sel]
    elif at in ("Width", "HDw"):
        vals = [np.max(np.abs(dx * (np.asarray(m.ihi) - m.ilp))) for m in sel]
    elif at in ("VolS", "HDv"):
        vals = [hdv(z, dx, m) for m in sel]
    elif at in ("DevLength", "HDl"):
        vals = [hdl(z, dx, m) for m in sel]
    elif at == "PVh":
        fti = _fti(z, motifs[0])
        vals = [-fti * zval(z, m.iv) for m in sel]
    elif at == "Curvature":
        # evaluated on the mirrored profile for hills, so genuine peaks
        # report positive curvature
        fti = _fti(z, motifs[0])
        vals = [fti * _curvature(z, dx, m.iv) for m in sel]
    elif at == "Count":
        vals = [1.0] * len(sel)
    else:
        raise ValueError(f"unknown attribute type {at!r}")
    return np.asarray(vals, dtype=float)


def feature_attribute(profile: Profile, mset: MotifSet, at: str) -> np.ndarray:
    """Public wrapper over :func:`attribute_values` for a motif set."""
    return attribute_values(profile.z, profile.dx, mset.motifs, at)


def select_significant(profile: Profile, mset: MotifSet, f_sig: str,
                       ni_sig: float = math.nan) -> MotifSet:
    """Flag motifs as significant/non-significant (new MotifSet).

    All: no change. Top/Bot: keep the ``ni_sig`` motifs with the largest
    peak height / pit depth. Open/Closed: compare lower peak and pit
    against the absolute height ``ni_sig``, inequality direction set by the
    feature type indicator.
    """
    z = profile.z
    ms = [replace(m, ihi=list(m.ihi)) for m in mset.motifs]
    out = MotifSet(ms, feature_type=mset.feature_type)
    if f_sig == "All" or not ms:
        return out
    if f_sig in ("Top", "Bot"):
        if math.isnan(ni_sig):
            raise ValueError(f"{f_sig} selection requires a count")
        k = int(min(ni_sig, len(ms)))
        h = attribute_values(z, profile.dx, ms, "PVh", ignore_sig=True)
        order = np.argsort(-h, kind="stable")
        for i in order[k:]:
            ms[i].sig = 0
    elif f_sig in ("Open", "Closed"):
        if math.isnan(ni_sig):
            raise ValueError(f"{f_sig} selection requires a height threshold")
        fti = _fti(z, ms[0])
        z_lp = np.array([zval(z, m.ilp) for m in ms])
        if f_sig == "Open":
            nonsig = fti * z_lp > fti * ni_sig
        else:
            z_v = np.array([zval(z, m.iv) for m in ms])
            nonsig = (fti * z_lp < fti * ni_sig) | (fti * z_v > fti * ni_sig)
        for i in np.flatnonzero(nonsig):
            ms[i].sig = 0
    else:
        raise ValueError(f"unknown significance type {f_sig!r}")
    return out


def attribute_statistics(attr: np.ndarray, a_stats: str, v_stats: float,
                         profile: Profile) -> float | Histogram:
    """Condense an attribute vector into a scalar (or histogram)."""
    if a_stats not in STAT_TYPES:
        raise ValueError(f"unknown statistic {a_stats!r}")
    attr = np.asarray(attr, dtype=float)
    if attr.size == 0:
        return math.nan
    if a_stats == "Mean":
        return float(np.mean(attr))
    if a_stats == "Max":
        return float(np.max(attr))
    if a_stats == "Min":
        return float(np.min(attr))
    if a_stats == "StdDev":
        return float(np.std(attr, ddof=1)) if attr.size > 1 else math.nan
    if a_stats == "Perc":
        if math.isnan(v_stats):
            raise ValueError("Perc requires a limit value")
        return float(np.sum(attr > v_stats)) / attr.size
    if a_stats == "Hist":
        counts, edges = np.histogram(attr[np.isfinite(attr)], bins="sturges")
        return Histogram(edges=[float(e) for e in edges],
                         counts=[int(c) for c in counts])
    if a_stats == "Sum":
        return float(np.sum(attr))
    # Density
    return float(np.sum(attr)) / (profile.dx * profile.n)


def feature_parameter(profile: Profile, mset: MotifSet, f_sig: str = "All",
                      ni_sig: float = math.nan, at: str = "HDh",
                      a_stats: str = "Mean",
                      v_stats: float = math.nan) -> tuple[FcResult, MotifSet]:
    """Steps 4-6 in one call: significance, attributes, statistics.

    Degenerate inputs (no motifs, nothing significant) never abort; they
    yield a NaN result with a machine-readable warning code.
    """
    if at not in ATTR_TYPES:
        raise ValueError(f"unknown attribute type {at!r}")
    warnings = []
    meta = {"Fsig": f_sig, "NIsig": ni_sig, "AT": at,
            "Astats": a_stats, "vstats": v_stats}
    if len(mset) == 0:
        warnings.append(EMPTY_MOTIFS)
        meta["attr"] = [math.nan]
        return FcResult(math.nan, meta, warnings), mset
    flagged = select_significant(profile, mset, f_sig, ni_sig)
    if not flagged.significant:
        warnings.append(NO_SIGNIFICANT)
        meta["attr"] = [math.nan]
        return FcResult(math.nan, meta, warnings), flagged
    attr = attribute_values(profile.z, profile.dx, flagged.motifs, at)
    if at == "Curvature" and np.isnan(attr).any():
        warnings.append(CURVATURE_EDGE)
    value = attribute_statistics(attr, a_stats, v_stats, profile)
    meta["attr"] = [float(v) for v in attr]
    return FcResult(value, meta, warnings), flagged
