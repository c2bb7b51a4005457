"""Profile file ingestion and serialization.

Supported formats:

* CSV, two columns (x, z) or one column (z, spacing via ``dx`` option).
  Delimiters: comma, semicolon or whitespace; ``#`` starts a comment.
* SMD, a minimal ISO 5436-2 style softgauge exchange format for profile
  records: a small key/value header (number of points, x increment,
  units, z scale) followed by one ordinate per line and ``END``.

All internal computation is in µm; loaders convert from file-declared
units on ingestion.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .model import Profile, ProfileError

#: factors to micrometers
_UNIT_UM = {"m": 1e6, "mm": 1e3, "um": 1.0, "µm": 1.0, "nm": 1e-3}

#: relative tolerance for the equidistance check of an x column
EQUIDISTANCE_RTOL = 1e-6


class ProfileLoadError(ValueError):
    """File could not be parsed; message carries line/field context."""


def _to_um(value, unit: str, context: str):
    try:
        return value * _UNIT_UM[unit]
    except KeyError:
        raise ProfileLoadError(f"{context}: unsupported unit {unit!r}") from None


def load_csv(path, dx: float | None = None, unit: str = "um") -> Profile:
    """Load a one- or two-column CSV profile. A two-column file carries
    (x, z); its x column must be equidistant. A one-column file needs
    ``dx`` (in the same unit)."""
    rows = []
    ncols = None
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            parts = re.split(r"[,;\s]+", text)
            if ncols is None:
                ncols = len(parts)
                if ncols not in (1, 2):
                    raise ProfileLoadError(f"{path}:{lineno}: expected 1 or 2 columns, got {ncols}")
            elif len(parts) != ncols:
                raise ProfileLoadError(f"{path}:{lineno}: inconsistent column count")
            try:
                rows.append([float(p) for p in parts])
            except ValueError:
                raise ProfileLoadError(f"{path}:{lineno}: non-numeric value in {text!r}") from None
    if not rows:
        raise ProfileLoadError(f"{path}: no data rows")
    data = np.asarray(rows)
    if ncols == 1:
        if dx is None:
            raise ProfileLoadError(f"{path}: one-column file requires an explicit dx")
        z = data[:, 0]
    else:
        x = data[:, 0]
        steps = np.diff(x)
        if steps.size == 0:
            raise ProfileLoadError(f"{path}: need at least 2 samples")
        step = float(np.mean(steps))
        if step <= 0 or np.any(np.abs(steps - step) > EQUIDISTANCE_RTOL * abs(step)):
            raise ProfileLoadError(f"{path}: x column is not equidistant")
        if dx is not None and abs(step - dx) > EQUIDISTANCE_RTOL * abs(dx):
            raise ProfileLoadError(f"{path}: x spacing {step} contradicts --dx {dx}")
        dx = step
        z = data[:, 1]
    try:
        return Profile(z=_to_um(z, unit, str(path)), dx=_to_um(dx, unit, str(path)))
    except ProfileError as exc:
        raise ProfileLoadError(f"{path}: {exc}") from exc


_SMD_MAGIC = "ISO5436-2 PROFILE"


def load_smd(path) -> Profile:
    """Load a minimal ISO 5436-2 style profile softgauge record."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != _SMD_MAGIC:
        raise ProfileLoadError(f"{path}:1: not a supported SMD profile record "
                               f"(expected header {_SMD_MAGIC!r})")
    header = {}
    data_start = None
    for lineno, line in enumerate(lines[1:], start=2):
        text = line.strip()
        if not text:
            continue
        if text == "DATA":
            data_start = lineno
            break
        if "=" not in text:
            raise ProfileLoadError(f"{path}:{lineno}: expected 'Key = value', got {text!r}")
        key, _, value = text.partition("=")
        header[key.strip()] = value.strip()
    if data_start is None:
        raise ProfileLoadError(f"{path}: missing DATA section")
    try:
        npoints = int(header["NumPoints"])
        dx = float(header["DX"])
    except KeyError as exc:
        raise ProfileLoadError(f"{path}: missing header field {exc}") from None
    except ValueError as exc:
        raise ProfileLoadError(f"{path}: bad header value ({exc})") from None
    xunit = header.get("XUnit", "um")
    zunit = header.get("ZUnit", "um")
    zscale = float(header.get("ZScale", "1.0"))

    values = []
    for lineno, line in enumerate(lines[data_start:], start=data_start + 1):
        text = line.strip()
        if not text:
            continue
        if text == "END":
            break
        try:
            values.append(float(text))
        except ValueError:
            raise ProfileLoadError(f"{path}:{lineno}: non-numeric ordinate {text!r}") from None
    else:
        raise ProfileLoadError(f"{path}: missing END marker")
    if len(values) != npoints:
        raise ProfileLoadError(f"{path}: NumPoints = {npoints} but {len(values)} ordinates found")
    z = np.asarray(values) * zscale
    try:
        return Profile(z=_to_um(z, zunit, str(path)), dx=_to_um(dx, xunit, str(path)))
    except ProfileError as exc:
        raise ProfileLoadError(f"{path}: {exc}") from exc


def save_smd(profile: Profile, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{_SMD_MAGIC}\n")
        fh.write(f"NumPoints = {profile.n}\n")
        fh.write(f"DX = {profile.dx!r}\n")
        fh.write("XUnit = um\nZUnit = um\nZScale = 1.0\nDATA\n")
        for v in profile.z:
            fh.write(f"{float(v)!r}\n")
        fh.write("END\n")


def save_csv(profile: Profile, path, two_column: bool = True) -> None:
    with open(path, "w") as fh:
        if two_column:
            for k, v in enumerate(profile.z):
                fh.write(f"{k * profile.dx!r},{float(v)!r}\n")
        else:
            for v in profile.z:
                fh.write(f"{float(v)!r}\n")


def load_profile(path, dx: float | None = None, unit: str = "um") -> Profile:
    """Dispatch on file extension (.smd vs CSV/plain text)."""
    p = Path(path)
    if p.suffix.lower() == ".smd":
        return load_smd(p)
    return load_csv(p, dx=dx, unit=unit)
