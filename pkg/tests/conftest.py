import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fcprofile import Profile
from fcprofile.examples import sine_profile


@pytest.fixture(scope="session")
def sine() -> Profile:
    """Bundled reference sine: amplitude 1 µm, wavelength 1200 µm, dx 0.5 µm,
    evaluation length 4000 µm."""
    return sine_profile()


@pytest.fixture(scope="session")
def sine_4periods() -> Profile:
    """Four whole sine periods (9600 points), 4 interior pits."""
    x = np.arange(9600) * 0.5
    return Profile(z=np.sin(2.0 * np.pi * x / 1200.0), dx=0.5)


def make_profile(z, dx=1.0) -> Profile:
    return Profile(z=np.asarray(z, dtype=float), dx=dx)
