"""Independent oracles for cross-checking the production algorithms.

These deliberately use different mechanisms: run-based brute-force extrema
scanning, a rising-water sweep with union-find style interval merging, dense
numerical integration, and exhaustive threshold sweeps.
"""

from __future__ import annotations

import math

import numpy as np


def brute_extrema(z):
    """Local extrema via explicit run comparison; plateau centers are
    interpolated. Returns (peaks, pits) as 1-based float lists."""
    z = np.asarray(z, dtype=float)
    runs = []  # (value, start0, length)
    start = 0
    for i in range(1, z.size + 1):
        if i == z.size or z[i] != z[start]:
            runs.append((z[start], start, i - start))
            start = i
    peaks, pits = [], []
    for k in range(1, len(runs) - 1):
        v, s, ln = runs[k]
        center = s + (ln - 1) / 2.0 + 1.0
        if runs[k - 1][0] < v > runs[k + 1][0]:
            peaks.append(center)
        elif runs[k - 1][0] > v < runs[k + 1][0]:
            pits.append(center)
    return peaks, pits


def flood_segmentation(z, th):
    """Rising-water watershed with depth-threshold merging.

    Water level rises over the saddles in height order; when two regions
    meet, the one with the shallower pool (higher minimum; ties: the left
    one) is absorbed if its depth at the saddle is below ``th``, otherwise
    the saddle becomes a permanent watershed. Profile ends behave as
    bottomless sinks.

    Returns (pit_set, peak_set) of the surviving segmentation, matching the
    dale segmentation with depth ("Wolf") pruning.
    """
    z = np.asarray(z, dtype=float)

    def height(i):
        return z[int(math.floor(i)) - 1]

    peaks, pits = brute_extrema(z)
    if len(peaks) < 2:
        return set(), set()
    inner = [p for p in pits if peaks[0] < p < peaks[-1]]
    assert len(inner) == len(peaks) - 1  # strict alternation

    # groups of contiguous basins; index -1 and len(inner) are edge sinks
    class Group:
        def __init__(self, pit):
            self.pit = pit
            self.min = -math.inf if pit is None else height(pit)
            self.alive = pit is not None

    groups = {}
    parent = {}

    def root(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k in range(-1, len(inner) + 1):
        parent[k] = k
        groups[k] = Group(None if k in (-1, len(inner)) else inner[k])

    surviving_peaks = set()
    order = sorted(range(len(peaks)), key=lambda j: (height(peaks[j]), peaks[j]))
    for j in order:
        a, b = root(j - 1), root(j)
        ga, gb = groups[a], groups[b]
        # the shallower pool dies; ties: the left one
        dying, other = (a, b) if ga.min >= gb.min else (b, a)
        depth = height(peaks[j]) - groups[dying].min
        if depth < th:
            parent[dying] = other
            groups[other].min = min(groups[other].min, groups[dying].min)
            groups[dying].alive = False
        else:
            surviving_peaks.add(peaks[j])

    pit_set = {g.pit for g in groups.values() if g.alive and g.pit is not None}
    # a fixed saddle survives only as the boundary of a surviving basin;
    # saddles whose neighborhoods all drained into the edges are dropped
    fixed = sorted(surviving_peaks)
    peak_set = set()
    for p in pit_set:
        peak_set.add(max(q for q in fixed if q < p))
        peak_set.add(min(q for q in fixed if q > p))
    return pit_set, peak_set


def dense_dale_volume(z, dx, iv, ilp, ihp, samples_per_step=200):
    """Dale local volume by dense trapezoidal quadrature of
    max(z_lp - z, 0) over the dale span, on the piecewise-linear profile."""
    z = np.asarray(z, dtype=float)
    z_lp = z[int(math.floor(ilp)) - 1]
    lo, hi = sorted((ilp, ihp))
    t = np.linspace(lo, hi, int((hi - lo) * samples_per_step) + 1)
    zt = np.interp(t, np.arange(1, z.size + 1), z)
    depth = np.maximum(z_lp - zt, 0.0)
    area = np.trapezoid(depth, (t - 1.0) * dx)
    return area / (z.size * dx)


def sweep_optimal_threshold(profile, ft, pt, default_th):
    """Exhaustive threshold sweep maximizing Q = mean/std of the motif
    attributes after pruning, Q required to beat 3. Returns (th, q)."""
    from fcprofile.features import attribute_values
    from fcprofile.segmentation import (build_motifs, detect_extrema, prune,
                                        prune_step, working_profile)

    mset = build_motifs(profile, detect_extrema(profile, ft), ft)
    w = working_profile(profile, ft)

    # candidate thresholds: every attribute value observed anywhere in a
    # full merge cascade (merged motifs acquire new attribute values)
    from dataclasses import replace

    motifs = [replace(m, ihi=list(m.ihi)) for m in mset.motifs]
    attr = [float(v) for v in attribute_values(w, profile.dx, motifs, pt)]
    seen = set(attr)
    while len(motifs) > 1:
        prune_step(w, profile.dx, motifs, attr, pt)
        seen.update(attr)
    candidates = sorted(seen | {default_th})

    def q_of(ms):
        if len(ms) < 2:
            return -math.inf
        a = attribute_values(w, profile.dx, ms.motifs, pt)
        s = float(np.std(a, ddof=1))
        return math.inf if s == 0 else float(np.mean(a)) / s

    best_th, best_q = default_th, 3.0
    for c in candidates:
        ms = prune(profile, mset, pt, c)
        if len(ms) < 4:
            continue  # the search only inspects states with at least 4 motifs
        q = q_of(ms)
        if q > best_q:
            best_th, best_q = c, q
    return best_th, best_q
