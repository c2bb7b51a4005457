#!/usr/bin/env python3
"""Compare the numba kernels against the pure-numpy fallback.

The kernel backend is chosen at import time via FCPROFILE_NO_NUMBA, so each
configuration runs in its own subprocess. Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json
import time

import numpy as np

from fcprofile import Profile
from fcprofile.fclang import feature_characterization
from fcprofile.kernels import USE_NUMBA, crossings_scan, path_length
from fcprofile.segmentation import watershed_segmentation

rng = np.random.default_rng(0)
repeat = int(__import__("os").environ["BENCH_REPEAT"])

# noisy profile: many extrema keep the crossing scans busy
n = 20_000
z = np.cumsum(rng.standard_normal(n)) + 5.0 * np.sin(np.linspace(0, 60 * np.pi, n))
profile = Profile(z=z, dx=0.1)
zf = np.ascontiguousarray(z)

# warm-up (includes JIT compilation on the numba path)
watershed_segmentation(Profile(z=z[:2000], dx=0.1), "D", "Wolfprune", 1.0)
path_length(zf[:100], 0.1)

results = {}

t0 = time.perf_counter()
for _ in range(repeat):
    crossings_scan(z, 1, n, 1)
results["crossings_scan"] = (time.perf_counter() - t0) / repeat

t0 = time.perf_counter()
for _ in range(repeat):
    path_length(zf, 0.1)
results["path_length"] = (time.perf_counter() - t0) / repeat

t0 = time.perf_counter()
for _ in range(repeat):
    watershed_segmentation(profile, "D", "Wolfprune", 5.0)
results["segmentation"] = (time.perf_counter() - t0) / repeat

t0 = time.perf_counter()
for _ in range(repeat):
    feature_characterization(profile, "FC;D;Wolfprune 5 %;All;HDl;Mean")
results["characterization"] = (time.perf_counter() - t0) / repeat

print(json.dumps({"numba": USE_NUMBA, "timings": results}))
"""


def run(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ, BENCH_REPEAT=str(repeat))
    if no_numba:
        env["FCPROFILE_NO_NUMBA"] = "1"
    else:
        env.pop("FCPROFILE_NO_NUMBA", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    fallback = run(no_numba=True, repeat=args.repeat)
    numba = run(no_numba=False, repeat=args.repeat)
    assert fallback["numba"] is False and numba["numba"] is True

    print(f"{'kernel':<20}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, base in fallback["timings"].items():
        fast = numba["timings"][name]
        print(f"{name:<20}{base * 1e3:>12.2f}{fast * 1e3:>12.2f}"
              f"{base / fast:>9.1f}x")


if __name__ == "__main__":
    main()
