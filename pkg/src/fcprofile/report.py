"""Shared JSON report shapes used by both the CLI and the HTTP service."""

from __future__ import annotations

import math

import numpy as np

from .model import FcResult, Histogram, Motif, MotifSet, Profile, zval


def sanitize(obj):
    """Replace NaN/inf with None recursively so the result is valid JSON."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, np.floating):
        return sanitize(float(obj))
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _value_json(value):
    if isinstance(value, Histogram):
        return value.to_json()
    return sanitize(float(value))


def water_polygons(profile: Profile, motif: Motif) -> list[list[list[float]]]:
    """Closed polygons (x, z in µm) of the water-filled regions at the
    lower-peak level, one per partial area between intersection pairs."""
    z, dx = profile.z, profile.dx
    z_lp = zval(z, motif.ilp)
    d = 1 if motif.ihp > motif.ilp else -1
    bounds = [motif.ilp] + list(motif.ihi)
    polys = []
    for a, b in zip(bounds[0::2], bounds[1::2]):
        i1 = abs(math.ceil(d * a))
        i2 = abs(math.floor(d * b))
        idx = np.arange(i1, i2 + d, d)
        pts = [[(a - 1.0) * dx, z_lp]]
        pts += [[(i - 1.0) * dx, float(z[i - 1])] for i in idx]
        pts += [[(b - 1.0) * dx, z_lp]]
        polys.append(pts)
    return polys


def motif_overlays(profile: Profile, mset: MotifSet) -> list[dict]:
    """UI-ready geometry per motif: pit/peak coordinates, height
    intersection points and the water-level polygons."""

    def point(i: float) -> list[float]:
        return [float(profile.x(i)), zval(profile.z, i)]

    out = []
    for m in mset:
        z_lp = zval(profile.z, m.ilp)
        out.append({
            "pit": point(m.iv),
            "lowerPeak": point(m.ilp),
            "higherPeak": point(m.ihp),
            "intersections": [[float(profile.x(i)), z_lp] for i in m.ihi],
            "waterPolygons": water_polygons(profile, m),
            "sig": m.sig,
        })
    return out


def result_document(result: FcResult, mset: MotifSet, meta: dict,
                    profile: Profile | None = None) -> dict:
    """Canonical evaluation report. With a profile, overlay geometry is
    included (service responses); without, the document matches the CLI
    ``--json`` output byte-for-byte."""
    doc = {
        "value": _value_json(result.value),
        "warnings": list(result.warnings),
        "motifs": mset.to_json(),
        "meta": sanitize(meta),
    }
    if profile is not None:
        doc["overlays"] = sanitize(motif_overlays(profile, mset))
    return doc
