"""Watershed segmentation of surface profiles.

Steps: extrema detection (with plateau-center interpolation), motif
construction between surrounding peak pairs, and pruning of
under-threshold motifs by merging them into the neighbor they would
overflow into.

Hill/peak segmentation mirrors the profile on the x-axis and segments by
dales; all stored indices refer to the original profile, so heights read
back through them are correct either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .kernels import crossings_scan
from .model import FEATURE_TYPES, PRUNE_TYPES, Motif, MotifSet, Profile, zval


def find(a, first_only: bool = False) -> list[int]:
    """1-based indices of the non-zero entries of ``a``, ascending.

    With ``first_only`` at most one index is returned.
    """
    idx = np.flatnonzero(np.asarray(a))
    if first_only:
        return [int(idx[0]) + 1] if idx.size else []
    return [int(i) + 1 for i in idx]


@dataclass(frozen=True)
class ExtremaIndices:
    """Interpolated 1-based peak and pit indices, each ascending."""

    peaks: np.ndarray
    pits: np.ndarray


def working_profile(profile: Profile, ft: str) -> np.ndarray:
    """Ordinates used for segmentation: mirrored on the x-axis for hills/peaks."""
    if ft not in FEATURE_TYPES:
        raise ValueError(f"unknown feature type {ft!r}")
    return -profile.z if ft in ("H", "P") else profile.z


def _extrema(w: np.ndarray):
    """Peak/pit indices (1-based floats) of ``w``; plateaus at their center."""
    n = w.size
    if n < 3:
        empty = np.empty(0)
        return empty, empty.copy()
    # Compress consecutive duplicates: 0-based start index of every run.
    starts = np.concatenate(([0], np.flatnonzero(np.diff(w) != 0) + 1))
    dz = np.diff(w[starts])
    s = np.sign(dz)
    ds = np.diff(s)
    peak_runs = np.flatnonzero(ds == -2) + 1
    pit_runs = np.flatnonzero(ds == 2) + 1

    def centers(runs):
        left = starts[runs]
        length = starts[runs + 1] - left  # extremum runs are never the last run
        return left + (length - 1) / 2.0 + 1.0  # to 1-based

    return centers(peak_runs), centers(pit_runs)


def detect_extrema(profile: Profile, ft: str) -> ExtremaIndices:
    peaks, pits = _extrema(working_profile(profile, ft))
    return ExtremaIndices(peaks=peaks, pits=pits)


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def get_ilp_ihp(z: np.ndarray, i_p_surr) -> tuple[float, float]:
    """Order two surrounding peak indices as (lower peak, higher peak).

    Heights are read at floor(index); an exact tie makes the first (left)
    argument the lower peak.
    """
    i1, i2 = i_p_surr
    if zval(z, i2) < zval(z, i1):
        return i2, i1
    return i1, i2


def height_intersections(z: np.ndarray, i_lp: float, i_hp: float) -> list[float]:
    """Interpolated crossings of the low-peak level along the flank.

    The list is ordered from the low peak toward the high peak. The scan
    starts at the first sample strictly past the low-peak plateau so the
    plateau edge is never reported as a crossing.
    """
    direction = 1 if i_hp > i_lp else -1
    out = crossings_scan(np.asarray(z, dtype=np.float64),
                         _round_half_up(i_lp), _round_half_up(i_hp), direction)
    return [float(v) for v in out]


def build_motifs(profile: Profile, ex: ExtremaIndices, ft: str = "D") -> MotifSet:
    """Fill the motif array: one motif per pit between two surrounding peaks.

    Pits left of the leftmost peak and right of the rightmost peak are
    dropped (incomplete segments).
    """
    w = working_profile(profile, ft)
    peaks, pits = ex.peaks, ex.pits
    if peaks.size < 2:
        return MotifSet([], feature_type=ft)
    pits = pits[(pits > peaks[0]) & (pits < peaks[-1])]
    motifs = []
    for k, iv in enumerate(pits):
        ilp, ihp = get_ilp_ihp(w, (peaks[k], peaks[k + 1]))
        ihi = height_intersections(w, ilp, ihp)
        motifs.append(Motif(iv=float(iv), ilp=float(ilp), ihp=float(ihp), ihi=ihi))
    return MotifSet(motifs, feature_type=ft)


def prune_step(w: np.ndarray, dx: float, motifs: list[Motif], attr: list[float], pt: str) -> None:
    """Delete the motif with minimal attribute and merge it into the
    neighbor it would overflow into, updating that neighbor in place.

    ``motifs`` and ``attr`` are parallel lists, modified in place.
    """
    from .features import attribute_values

    r = attr.index(min(attr))  # ties: smallest row index
    m_min = motifs.pop(r)
    attr.pop(r)
    n_m = len(motifs)
    direction = 1 if m_min.ilp > m_min.iv else -1  # overflow toward the low peak
    r_u = r - 1 if direction == -1 else r
    if r_u < 0 or r_u > n_m - 1:
        return  # case 1: overflow off the profile edge
    tgt = motifs[r_u]
    if tgt.ilp == m_min.ilp:
        # case 2: shared low peak; the surviving motif spans the two high
        # peaks, passed left-to-right so a height tie selects the left one
        pair = (m_min.ihp, tgt.ihp) if direction == 1 else (tgt.ihp, m_min.ihp)
        tgt.ilp, tgt.ihp = get_ilp_ihp(w, pair)
    else:
        # case 3: adopt the deleted motif's high peak
        tgt.ihp = m_min.ihp
        if zval(w, tgt.ilp) <= zval(w, m_min.iv):
            return  # case 3.1: water level unchanged
    # case 2 / 3.2: deleted pit is below the new water level
    tgt.ihi = height_intersections(w, tgt.ilp, tgt.ihp)
    attr[r_u] = float(attribute_values(w, dx, [tgt], pt)[0])


def prune(profile: Profile, mset: MotifSet, pt: str, th: float) -> MotifSet:
    """Merge motifs whose pruning attribute is below ``th`` (strict).

    ``pt`` = "None" returns the input unchanged. May empty the motif set;
    that is a valid degenerate output handled downstream.
    """
    from .features import attribute_values

    if pt not in PRUNE_TYPES:
        raise ValueError(f"unknown pruning type {pt!r}")
    if pt == "None":
        return mset
    if not (isinstance(th, (int, float)) and th >= 0):
        raise ValueError("pruning threshold must be a non-negative number")
    w = working_profile(profile, mset.feature_type)
    motifs = [replace(m, ihi=list(m.ihi)) for m in mset.motifs]
    attr = [float(v) for v in attribute_values(w, profile.dx, motifs, pt)]
    while motifs and min(attr) < th:
        prune_step(w, profile.dx, motifs, attr, pt)
    return MotifSet(motifs, feature_type=mset.feature_type)


def watershed_segmentation(profile: Profile, ft: str, pt: str = "None",
                           th: float = math.nan) -> MotifSet:
    """Full segmentation pipeline: extrema -> motifs -> pruning."""
    ex = detect_extrema(profile, ft)
    mset = build_motifs(profile, ex, ft)
    return prune(profile, mset, pt, th)
