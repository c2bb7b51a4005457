"""Hot numeric kernels with optional numba acceleration.

The pure-Python/numpy fallback is selected by setting the environment
variable ``FCPROFILE_NO_NUMBA=1`` (or automatically when numba is not
importable). Both paths compute bit-identical results; see
``benchmarks/bench_kernels.py`` for a speed comparison.
"""

from __future__ import annotations

import math
import os

import numpy as np

USE_NUMBA = os.environ.get("FCPROFILE_NO_NUMBA", "0") not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

def _crossings_scan_py(z: np.ndarray, i_lp: int, i_hp: int, direction: int) -> np.ndarray:
    """Scan from the low peak toward the high peak, recording every linear-
    interpolated crossing of the low-peak level.

    Indices are 1-based integers (already rounded); the scan starts at the
    first sample whose value differs from the low-peak level, so a plateau
    edge is never itself reported as a crossing.
    """
    z_lp = z[i_lp - 1]
    j = i_lp
    while j != i_hp and z[j - 1] == z_lp:
        j += direction
    out = np.empty(abs(i_hp - i_lp) + 1, dtype=np.float64)
    m = 0
    while j != i_hp:
        a = z[j - 1]
        b = z[j - 1 + direction]
        if (a < z_lp <= b) or (a >= z_lp > b):
            out[m] = j + direction * (z_lp - a) / (b - a)
            m += 1
        j += direction
    return out[:m].copy()


def _curvature_stencil_py(z: np.ndarray, i: int, dx: float) -> float:
    """Second derivative at 1-based integer index i from the degree-6
    interpolating polynomial over the 7 centered samples."""
    k = i - 1
    return (2.0 * z[k - 3] - 27.0 * z[k - 2] + 270.0 * z[k - 1] - 490.0 * z[k]
            + 270.0 * z[k + 1] - 27.0 * z[k + 2] + 2.0 * z[k + 3]) / (180.0 * dx * dx)


def _path_length_py(zf: np.ndarray, dx: float) -> float:
    """Sum of segment lengths sqrt(dx^2 + dz^2) along consecutive samples."""
    total = 0.0
    for k in range(zf.size - 1):
        dz = zf[k + 1] - zf[k]
        total += math.sqrt(dx * dx + dz * dz)
    return total


if USE_NUMBA:
    crossings_scan = njit(cache=True)(_crossings_scan_py)
    curvature_stencil = njit(cache=True)(_curvature_stencil_py)
    path_length = njit(cache=True)(_path_length_py)
else:
    crossings_scan = _crossings_scan_py
    curvature_stencil = _curvature_stencil_py

    def path_length(zf: np.ndarray, dx: float) -> float:
        dz = np.diff(zf)
        return float(np.sum(np.sqrt(dx * dx + dz * dz)))
