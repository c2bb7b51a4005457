"""FC convention strings: parsing, threshold resolution and evaluation.

An FC string has six semicolon-separated fields::

    FC; <feature type>; <pruning>; <significance>; <attribute>; <statistic>

e.g. ``FC;D;Wolfprune 5 %;All;HDh;Mean``. Percentage thresholds are
resolved against Rz (Wolfprune) or the evaluation length (Width);
percentage significance levels against the inverse material ratio. The
pruning threshold ``opt`` triggers the optimal-periodicity search.
"""

from __future__ import annotations

import math

import numpy as np

from .features import attribute_values, feature_parameter
from .model import (
    ATTR_TYPES,
    FEATURE_TYPES,
    FEW_MOTIFS,
    OPT,
    PRUNE_TYPES,
    SIG_TYPES,
    STAT_TYPES,
    FcRequest,
    FcResult,
    MotifSet,
    Profile,
)
from .segmentation import (
    build_motifs,
    detect_extrema,
    prune_step,
    watershed_segmentation,
    working_profile,
)

_FIELD_NAMES = ("FC", "feature type", "pruning", "significant", "attribute", "stats")


class FcParseError(ValueError):
    """Malformed FC string; names the offending field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


def field_param_rz(profile: Profile) -> float:
    """Maximum height of the profile: mean over 5 equal sections of the
    sectionwise peak-to-valley; global peak-to-valley for short profiles."""
    z = profile.z
    if profile.n // 5 < 5:
        return float(np.max(z) - np.min(z))
    return float(np.mean([np.max(s) - np.min(s) for s in np.array_split(z, 5)]))


def field_param_rcm(profile: Profile, p: float) -> float:
    """Inverse material ratio: height offset (negative, measured down from
    max z) at which the material ratio reaches ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("material ratio must be in [0, 1]")
    z_desc = np.sort(profile.z)[::-1]
    k = math.ceil(p * z_desc.size)
    if k <= 0:
        return 0.0
    return float(z_desc[k - 1] - z_desc[0])


def _num(token: str, fieldname: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise FcParseError(fieldname, f"expected a number, got {token!r}") from None


def _tokens(text: str) -> list[str]:
    # "%" may be attached to the number; normalize by inserting a space
    return text.replace("%", " %").split()


def parse_fc(raw: str, profile: Profile) -> FcRequest:
    """Parse an FC string into a fully resolved request (absolute
    thresholds). Raises :class:`FcParseError` with the offending field."""
    fields = [f.strip() for f in raw.split(";")]
    if len(fields) != 6:
        raise FcParseError("FC", f"expected 6 semicolon-separated fields, got {len(fields)}")
    if fields[0] != "FC":
        raise FcParseError("FC", f"first field must be 'FC', got {fields[0]!r}")

    ft = fields[1]
    if ft not in FEATURE_TYPES:
        raise FcParseError("feature type", f"{ft!r} not in {FEATURE_TYPES}")

    # pruning: "None" | "<PT> <TH>[ %]" | "<PT> opt"
    toks = _tokens(fields[2])
    if not toks:
        raise FcParseError("pruning", "empty field")
    pt = toks[0]
    if pt not in PRUNE_TYPES:
        raise FcParseError("pruning", f"{pt!r} not in {PRUNE_TYPES}")
    th: float | str = math.nan
    if pt == "None":
        if len(toks) > 1:
            raise FcParseError("pruning", "no threshold allowed for 'None'")
    else:
        if len(toks) < 2:
            raise FcParseError("pruning", f"{pt} requires a threshold")
        if toks[1] == OPT:
            if len(toks) > 2:
                raise FcParseError("pruning", "unexpected tokens after 'opt'")
            th = OPT
        else:
            th = _num(toks[1], "pruning")
            if len(toks) == 3 and toks[2] == "%":
                if pt == "Wolfprune":
                    th = 0.01 * th * field_param_rz(profile)
                elif pt == "Width":
                    th = 0.01 * th * profile.length
                else:
                    raise FcParseError("pruning", f"{pt} does not support a percentage threshold")
            elif len(toks) > 2:
                raise FcParseError("pruning", f"unexpected tokens {toks[2:]!r}")
            if th < 0:
                raise FcParseError("pruning", "threshold must be non-negative")

    # significant: "All" | "<Fsig> <NI>[ %]"
    toks = _tokens(fields[3])
    if not toks:
        raise FcParseError("significant", "empty field")
    f_sig = toks[0]
    if f_sig not in SIG_TYPES:
        raise FcParseError("significant", f"{f_sig!r} not in {SIG_TYPES}")
    ni_sig = math.nan
    if f_sig == "All":
        if len(toks) > 1:
            raise FcParseError("significant", "no value allowed for 'All'")
    else:
        if len(toks) < 2:
            raise FcParseError("significant", f"{f_sig} requires a value")
        ni_sig = _num(toks[1], "significant")
        if len(toks) == 3 and toks[2] == "%":
            if f_sig in ("Top", "Bot"):
                raise FcParseError("significant", f"{f_sig} does not support a percentage")
            # inverse material ratio, translated into an absolute height
            ni_sig = float(np.max(profile.z)) + field_param_rcm(profile, 0.01 * ni_sig)
        elif len(toks) > 2:
            raise FcParseError("significant", f"unexpected tokens {toks[2:]!r}")

    at = fields[4]
    if at not in ATTR_TYPES:
        raise FcParseError("attribute", f"{at!r} not in {ATTR_TYPES}")

    toks = fields[5].split()
    if not toks:
        raise FcParseError("stats", "empty field")
    a_stats = toks[0]
    if a_stats not in STAT_TYPES:
        raise FcParseError("stats", f"{a_stats!r} not in {STAT_TYPES}")
    v_stats = math.nan
    if len(toks) > 1:
        if len(toks) > 2:
            raise FcParseError("stats", f"unexpected tokens {toks[2:]!r}")
        v_stats = _num(toks[1], "stats")
    if a_stats == "Perc" and math.isnan(v_stats):
        raise FcParseError("stats", "Perc requires a limit value")

    return FcRequest(ft=ft, pt=pt, th=th, f_sig=f_sig, ni_sig=ni_sig,
                     at=at, a_stats=a_stats, v_stats=v_stats)


def _fmt(x: float) -> str:
    if isinstance(x, float) and x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def serialize_fc(req: FcRequest) -> str:
    """Canonical FC text for a (resolved) request; re-parsing yields an
    identical request."""
    if req.pt == "None":
        pruning = "None"
    elif req.th == OPT:
        pruning = f"{req.pt} {OPT}"
    else:
        pruning = f"{req.pt} {_fmt(req.th)}"
    sig = req.f_sig if req.f_sig == "All" else f"{req.f_sig} {_fmt(req.ni_sig)}"
    stats = req.a_stats if math.isnan(req.v_stats) else f"{req.a_stats} {_fmt(req.v_stats)}"
    return ";".join(["FC", req.ft, pruning, sig, req.at, stats])


_DEFAULT_TH_FRACTION = 0.05  # of Rz (Wolfprune) or evaluation length (Width)


def optimal_periodicity(profile: Profile, ft: str, pt: str) -> tuple[float, list[str]]:
    """Threshold at which the motifs are as uniform as possible.

    Iteratively prunes the minimal motif down to 3 motifs; whenever the
    periodicity measure Q = mean(attr)/std(attr) exceeds the best Q so far,
    the threshold is set to the current minimal attribute. Returns the
    threshold and a list of warning codes (FEW_MOTIFS when the search is
    not meaningful).
    """
    if pt == "None" or pt not in PRUNE_TYPES:
        raise ValueError(f"optimal periodicity needs a pruning type, got {pt!r}")
    if pt == "Wolfprune":
        th = _DEFAULT_TH_FRACTION * field_param_rz(profile)
    elif pt == "Width":
        th = _DEFAULT_TH_FRACTION * profile.length
    else:
        th = 0.0
    mset = build_motifs(profile, detect_extrema(profile, ft), ft)
    if len(mset) < 4:
        return th, [FEW_MOTIFS]
    w = working_profile(profile, ft)
    motifs = list(mset.motifs)
    attr = [float(v) for v in attribute_values(w, profile.dx, motifs, pt)]
    q_min = 3.0
    while len(motifs) > 3:
        a = np.asarray(attr)
        std = float(np.std(a, ddof=1))
        q = math.inf if std == 0.0 else float(np.mean(a)) / std
        if q > q_min:
            th = min(attr)
            q_min = q
        prune_step(w, profile.dx, motifs, attr, pt)
    return th, []


def feature_characterization(profile: Profile, spec: str) -> tuple[FcResult, MotifSet, dict]:
    """Parse, segment and evaluate an FC string in one step.

    Returns the result, the (significance-flagged) motif set, and the META
    record with the resolved thresholds.
    """
    req = parse_fc(spec, profile)
    warnings = []
    th = req.th
    if th == OPT:
        th, warnings = optimal_periodicity(profile, req.ft, req.pt)
    mset = watershed_segmentation(profile, req.ft, req.pt, th)
    result, flagged = feature_parameter(profile, mset, req.f_sig, req.ni_sig,
                                        req.at, req.a_stats, req.v_stats)
    result.meta["PT"] = req.pt
    result.meta["TH"] = th
    result.warnings = warnings + result.warnings
    return result, flagged, result.meta


#: Named parameters of the R family (P/W variants differ only upstream).
NAMED_PARAMETERS = {
    "Rpd": "FC;P;Wolfprune 5 %;All;Count;Density",
    "Rvd": "FC;V;Wolfprune 5 %;All;Count;Density",
    "Rmpc": "FC;P;Wolfprune 5 %;All;Curvature;Mean",
    "Rmvc": "FC;V;Wolfprune 5 %;All;Curvature;Mean",
    "R5p": "FC;P;Wolfprune 5 %;Top 5;PVh;Mean",
    "R5v": "FC;V;Wolfprune 5 %;Top 5;PVh;Mean",
}


def named_parameter(profile: Profile, name: str) -> float:
    """Evaluate one of the named ISO feature parameters."""
    if name == "R10z":
        return named_parameter(profile, "R5p") + named_parameter(profile, "R5v")
    try:
        spec = NAMED_PARAMETERS[name]
    except KeyError:
        raise ValueError(f"unknown named parameter {name!r}") from None
    result, _, _ = feature_characterization(profile, spec)
    return result.value
