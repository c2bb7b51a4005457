"""Bundled deterministic example profiles.

The sine fixture reproduces the published reference values for the
segmentation (mean dale depth 2 µm, width 1200 µm, volume 0.3 ml/m²); the
other fixtures echo common machined-surface morphologies with
construction-known feature counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import Profile

_SEED = 20240815

SINE_AMPLITUDE = 1.0      # µm
SINE_WAVELENGTH = 1200.0  # µm
SINE_DX = 0.5             # µm
SINE_POINTS = 8000        # evaluation length 4000 µm -> mean HDv = 0.3 ml/m²

TURNED_FEED = 150.0       # µm
TURNED_DX = 0.5
TURNED_LENGTH = 3000.0

RIBLET_PERIOD = 200.0
RIBLET_DX = 0.5

HONED_GROOVE_SPACING = 400.0
HONED_DX = 0.5


@dataclass(frozen=True)
class ExampleProfile:
    name: str
    description: str
    profile: Profile


def sine_profile() -> Profile:
    x = np.arange(SINE_POINTS) * SINE_DX
    z = SINE_AMPLITUDE * np.sin(2.0 * np.pi * x / SINE_WAVELENGTH)
    return Profile(z=z, dx=SINE_DX)


def turned_profile(noise: bool = True) -> Profile:
    """Parabolic cutting-edge marks repeating at the feed rate, with seeded
    micro-roughness riding on the flanks."""
    x = np.arange(int(TURNED_LENGTH / TURNED_DX)) * TURNED_DX
    c = (x % TURNED_FEED) / TURNED_FEED
    z = 2.0 * (2.0 * c - 1.0) ** 2
    if noise:
        rng = np.random.default_rng(_SEED)
        z = z + 0.05 * np.sin(2.0 * np.pi * x / 7.0) + 0.02 * rng.standard_normal(x.size)
    return Profile(z=z, dx=TURNED_DX)


def riblet_profile() -> Profile:
    """Trapezoidal riblet ridges with flat tops and valley floors (plateau
    extrema exercise the interpolated-index paths)."""
    x = np.arange(int(4000.0 / RIBLET_DX)) * RIBLET_DX
    c = (x % RIBLET_PERIOD) / RIBLET_PERIOD
    z = np.interp(c, [0.0, 0.15, 0.35, 0.5, 0.65, 0.85, 1.0],
                  [0.0, 0.0, 5.0, 5.0, 5.0, 0.0, 0.0])
    return Profile(z=z, dx=RIBLET_DX)


def honed_profile() -> Profile:
    """Plateau-honed morphology: rough plateau with deep sparse grooves."""
    n = int(4000.0 / HONED_DX)
    x = np.arange(n) * HONED_DX
    rng = np.random.default_rng(_SEED + 1)
    z = 0.05 * rng.standard_normal(n)
    groove_centers = np.arange(200.0, 4000.0, HONED_GROOVE_SPACING)
    for xc in groove_centers:
        z -= 3.0 * np.exp(-0.5 * ((x - xc) / 12.0) ** 2)
    return Profile(z=z, dx=HONED_DX)


def generate_example_profiles() -> list[ExampleProfile]:
    return [
        ExampleProfile("sine-1200", "sinusoidal profile, amplitude 1 µm, wavelength 1.2 mm",
                       sine_profile()),
        ExampleProfile("turned", "turned surface, feed 150 µm, with micro-roughness",
                       turned_profile()),
        ExampleProfile("riblet", "trapezoidal riblet structure, period 200 µm",
                       riblet_profile()),
        ExampleProfile("honed", "plateau-honed surface with deep grooves",
                       honed_profile()),
    ]
