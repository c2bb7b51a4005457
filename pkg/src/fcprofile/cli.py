"""Command-line surface: evaluation, segmentation, named parameters,
batch softgauge reports and the HTTP service launcher."""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import click

from .examples import generate_example_profiles
from .fclang import (
    FcParseError,
    NAMED_PARAMETERS,
    feature_characterization,
    parse_fc,
)
from .model import (
    ATTR_TYPES,
    FEATURE_TYPES,
    OPT,
    PRUNE_TYPES,
    SIG_TYPES,
    STAT_TYPES,
    Histogram,
    Profile,
)
from .profile_io import ProfileLoadError, load_profile, save_csv, save_smd
from .report import result_document
from .segmentation import watershed_segmentation

_CANONICAL_TOKENS = {t.lower(): t for t in
                     FEATURE_TYPES + PRUNE_TYPES + SIG_TYPES + ATTR_TYPES
                     + STAT_TYPES + ("FC", OPT)}

_ATTR_UNITS = {"HDh": "µm", "HDw": "µm", "HDl": "µm", "PVh": "µm",
               "HDv": "ml/m²", "Curvature": "1/µm", "Count": ""}


def _canonicalize_case(spec: str) -> str:
    fields = []
    for field in spec.split(";"):
        tokens = [_CANONICAL_TOKENS.get(t.lower(), t) for t in field.strip().split()]
        fields.append(" ".join(tokens))
    return ";".join(fields)


def _load(path: str, dx: float | None, unit: str) -> Profile:
    try:
        return load_profile(path, dx=dx, unit=unit)
    except ProfileLoadError as exc:
        raise click.ClickException(str(exc)) from exc


def _fmt_value(value, at: str, a_stats: str) -> str:
    if isinstance(value, Histogram):
        rows = [f"  [{lo:g}, {hi:g}): {c}"
                for lo, hi, c in zip(value.edges[:-1], value.edges[1:], value.counts)]
        return "histogram:\n" + "\n".join(rows)
    if math.isnan(value):
        return "NaN"
    unit = _ATTR_UNITS.get(at, "")
    if a_stats == "Density":
        # 1/µm natively; 1/mm is friendlier to read
        return f"{value:.9g} 1/µm ({value * 1000.0:.9g} 1/mm)"
    if a_stats == "Perc":
        unit = ""
    return f"{value:.9g} {unit}".rstrip()


input_options = [
    click.option("--input", "input_path", required=True, type=click.Path(exists=True),
                 help="profile file (.csv one/two column, or .smd)"),
    click.option("--dx", type=float, default=None, help="sampling interval for one-column files"),
    click.option("--unit", default="um", show_default=True,
                 help="unit of the file values (m, mm, um, nm)"),
]


def add_options(opts):
    def wrap(fn):
        for opt in reversed(opts):
            fn = opt(fn)
        return fn
    return wrap


@click.group()
def main():
    """Watershed segmentation and feature characterization for surface profiles."""


@main.command("eval")
@add_options(input_options)
@click.option("--spec", required=True, help='FC string, e.g. "FC;D;None;All;HDh;Mean"')
@click.option("--json", "as_json", is_flag=True, help="emit the full JSON report")
@click.option("--lenient-case", is_flag=True, help="accept case-insensitive tokens")
def eval_cmd(input_path, dx, unit, spec, as_json, lenient_case):
    """Evaluate one FC-convention feature parameter."""
    profile = _load(input_path, dx, unit)
    if lenient_case:
        spec = _canonicalize_case(spec)
    try:
        result, mset, meta = feature_characterization(profile, spec)
    except FcParseError as exc:
        raise click.ClickException(str(exc)) from exc
    if as_json:
        click.echo(json.dumps(result_document(result, mset, meta, profile)))
        return
    click.echo(_fmt_value(result.value, meta["AT"], meta["Astats"]))
    for w in result.warnings:
        click.echo(f"warning: {w}", err=True)


@main.command("segment")
@add_options(input_options)
@click.option("--spec", required=True,
              help="FC string; only the feature-type and pruning fields are used")
@click.option("--lenient-case", is_flag=True, help="accept case-insensitive tokens")
def segment_cmd(input_path, dx, unit, spec, lenient_case):
    """Run watershed segmentation and emit the motif set as JSON."""
    profile = _load(input_path, dx, unit)
    if lenient_case:
        spec = _canonicalize_case(spec)
    try:
        result, mset, meta = feature_characterization(profile, spec)
    except FcParseError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(json.dumps({"motifs": mset.to_json()}))


@main.command("named")
@add_options(input_options)
@click.option("--all", "run_all", is_flag=True, help="evaluate all named parameters")
@click.option("--name", "names", multiple=True,
              type=click.Choice(sorted(NAMED_PARAMETERS) + ["R10z"]))
@click.option("--json", "as_json", is_flag=True)
def named_cmd(input_path, dx, unit, run_all, names, as_json):
    """Evaluate named ISO feature parameters (Rpd, Rvd, Rmpc, Rmvc, R5p, R5v, R10z)."""
    from .fclang import named_parameter

    profile = _load(input_path, dx, unit)
    wanted = list(NAMED_PARAMETERS) + ["R10z"] if run_all or not names else list(names)
    values = {name: named_parameter(profile, name) for name in wanted}
    if as_json:
        click.echo(json.dumps({k: (None if math.isnan(v) else v) for k, v in values.items()}))
        return
    for name, value in values.items():
        click.echo(f"{name:6s} {'NaN' if math.isnan(value) else format(value, '.9g')}")


@main.command("softgauge")
@click.option("--dir", "directory", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--json", "as_json", is_flag=True)
def softgauge_cmd(directory, as_json):
    """Batch-evaluate the named parameters over every .smd file in a directory."""
    from concurrent.futures import ThreadPoolExecutor

    from .fclang import named_parameter

    files = sorted(Path(directory).glob("*.smd"))
    if not files:
        raise click.ClickException(f"no .smd files in {directory}")
    names = list(NAMED_PARAMETERS) + ["R10z"]

    def evaluate(path):
        profile = load_profile(path)
        return path.name, {n: named_parameter(profile, n) for n in names}

    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(evaluate, files))
    if as_json:
        click.echo(json.dumps({fname: {k: (None if math.isnan(v) else v) for k, v in vals.items()}
                               for fname, vals in rows}))
        return
    header = "file".ljust(28) + "".join(n.rjust(14) for n in names)
    click.echo(header)
    for fname, vals in rows:
        cells = "".join(("NaN" if math.isnan(vals[n]) else format(vals[n], ".6g")).rjust(14)
                        for n in names)
        click.echo(fname.ljust(28) + cells)


@main.command("examples")
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def examples_cmd(out_dir):
    """Write the bundled example profiles as CSV and SMD fixtures."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for ex in generate_example_profiles():
        save_csv(ex.profile, out / f"{ex.name}.csv")
        save_smd(ex.profile, out / f"{ex.name}.smd")
        click.echo(f"wrote {ex.name}.csv / {ex.name}.smd ({ex.profile.n} points)")


@main.command("serve")
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve_cmd(port, host):
    """Start the JSON-over-HTTP characterization service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
