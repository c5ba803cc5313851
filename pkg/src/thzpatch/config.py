"""Config-file grammar for sweep runs.

Flat INI-like sections of `key = value` lines. Dimensioned values carry a
mandatory unit suffix; lists are comma separated; arithmetic ranges use
start:stop:step (inclusive stop). A unit written once at the end of a list
or range applies to every element before it.

    # reference setup
    [substrate]
    rel_permittivity = 3.5
    loss_tangent = 0.0027
    thickness = 50 um

    [design]
    frequency = 280 GHz

    [sweep]
    fermi_levels = 0.3:1.2:0.3 eV
    relaxation_times = 0.3, 0.6, 0.9, 1.2 ps
    band = 220, 325 GHz
    points = 211
    variants = metal, graphene
    temperature = 300 K

    [output]
    format = csv
    path = paper_out

An optional [pads] section (signal_pad_width, ground_pad_width, gap,
tsv_radius, all lengths) is carried through to serialization only.

Every parse or validation problem is reported with the offending key and
line number. Validation is fail-fast: nothing is computed from a config
that has any invalid value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .circuit import ConductorSpec
from .errors import ConfigError, UnitError
from .materials import FERMI_LEVEL_RANGE_EV, RELAXATION_RANGE_S
from .patch import FREQUENCY_RANGE_HZ, PadGeometry, SubstrateSpec

_UNIT_TABLES: dict[str, dict[str, float]] = {
    # canonical units: length m, frequency Hz, energy eV, time ps, temperature K
    "length": {"nm": 1e-9, "um": 1e-6, "µm": 1e-6, "mm": 1e-3, "cm": 1e-2, "m": 1.0},
    "frequency": {"Hz": 1.0, "kHz": 1e3, "MHz": 1e6, "GHz": 1e9, "THz": 1e12},
    "energy": {"meV": 1e-3, "eV": 1.0},
    "time": {"fs": 1e-3, "ps": 1.0, "ns": 1e3, "us": 1e9, "s": 1e12},
    "temperature": {"K": 1.0},
}

_QUANTITY_RE = re.compile(r"^([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*([A-Za-zµ]*)$")


@dataclass(frozen=True)
class SweepGrid:
    """Parameter grid of one sweep.

    fermi_levels in eV, relaxation_times in ps, frequency_band in Hz.
    conductor_variants lists the variants in input order; graphene entries
    are templates whose sheet is filled per (fermi, tau) cell.
    """

    fermi_levels: list[float]
    relaxation_times: list[float]
    frequency_band: tuple[float, float]
    frequency_points: int
    conductor_variants: list[ConductorSpec]


@dataclass(frozen=True)
class RunConfig:
    """Everything one sweep run needs, fully validated."""

    substrate: SubstrateSpec
    design_frequency: float
    sweep: SweepGrid
    output_format: str
    output_path: str
    temperature: float = 300.0


def _ctx(key: str, line: int) -> str:
    """Error-message prefix: config keys carry their line, flags do not."""
    if line > 0:
        return f"line {line}: key '{key}'"
    return f"'{key}'"


def _parse_number(text: str, key: str, line: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{_ctx(key, line)}: not a number: {text!r}")


def parse_quantity(text: str, dimension: str, key: str, line: int = 0,
                   unit: str | None = None) -> float:
    """One number with unit suffix, converted to the canonical unit.

    `unit` supplies an inherited suffix for list elements written without
    their own. line = 0 marks a command-line flag rather than a file key.
    """
    table = _UNIT_TABLES[dimension]
    m = _QUANTITY_RE.match(text.strip())
    if not m:
        raise ConfigError(f"{_ctx(key, line)}: cannot parse quantity {text!r}")
    number, suffix = m.group(1), m.group(2)
    if not suffix:
        suffix = unit or ""
    if not suffix:
        raise UnitError(
            f"{_ctx(key, line)}: missing unit suffix on {text!r} "
            f"(expected one of {', '.join(sorted(table))})")
    if suffix not in table:
        raise UnitError(
            f"{_ctx(key, line)}: unknown unit {suffix!r} "
            f"(expected one of {', '.join(sorted(table))})")
    return _parse_number(number, key, line) * table[suffix]


def _trailing_unit(text: str) -> tuple[str, str | None]:
    """Split a trailing alphabetic unit off a numeric expression."""
    m = re.match(r"^(.*?)\s*([A-Za-zµ]+)$", text.strip())
    if m:
        return m.group(1), m.group(2)
    return text.strip(), None


def parse_quantity_list(text: str, dimension: str, key: str,
                        line: int = 0) -> list[float]:
    """Comma list or start:stop:step range, with unit inheritance."""
    table = _UNIT_TABLES[dimension]
    if ":" in text:
        body, unit = _trailing_unit(text)
        parts = body.split(":")
        if len(parts) != 3:
            raise ConfigError(f"{_ctx(key, line)}: range must be "
                              f"start:stop:step, got {text!r}")
        if unit is None:
            raise UnitError(f"{_ctx(key, line)}: range needs a unit "
                            f"suffix (one of {', '.join(sorted(table))})")
        start = parse_quantity(parts[0], dimension, key, line, unit)
        stop = parse_quantity(parts[1], dimension, key, line, unit)
        step = parse_quantity(parts[2], dimension, key, line, unit)
        if step <= 0 or stop < start:
            raise ConfigError(f"{_ctx(key, line)}: need step > 0 and "
                              f"stop >= start")
        values = []
        k = 0
        while True:
            v = start + k * step
            if v > stop * (1 + 1e-9):
                break
            values.append(v)
            k += 1
        return values

    items = [item.strip() for item in text.split(",")]
    if any(not item for item in items):
        raise ConfigError(f"{_ctx(key, line)}: empty list element")
    # Walk right to left so a final unit annotates the bare values before it.
    unit: str | None = None
    out: list[float] = []
    for item in reversed(items):
        _, own_unit = _trailing_unit(item)
        if own_unit is not None:
            unit = own_unit
        out.append(parse_quantity(item, dimension, key, line, unit))
    out.reverse()
    return out


_REQUIRED_KEYS = [
    ("substrate", "rel_permittivity"),
    ("substrate", "loss_tangent"),
    ("substrate", "thickness"),
    ("design", "frequency"),
    ("sweep", "fermi_levels"),
    ("sweep", "relaxation_times"),
    ("sweep", "band"),
    ("sweep", "points"),
    ("sweep", "variants"),
    ("output", "format"),
    ("output", "path"),
]

_KNOWN_KEYS = {
    "substrate": {"rel_permittivity", "loss_tangent", "thickness"},
    "design": {"frequency"},
    "sweep": {"fermi_levels", "relaxation_times", "band", "points",
              "variants", "temperature"},
    "output": {"format", "path"},
    "pads": {"signal_pad_width", "ground_pad_width", "gap", "tsv_radius"},
}


def _read_pairs(text: str) -> dict[tuple[str, str], tuple[str, int]]:
    pairs: dict[tuple[str, str], tuple[str, int]] = {}
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split(";", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"line {lineno}: malformed section header "
                                  f"{raw.strip()!r}")
            section = line[1:-1].strip()
            if section not in _KNOWN_KEYS:
                raise ConfigError(f"line {lineno}: unknown section "
                                  f"[{section}]")
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got "
                              f"{raw.strip()!r}")
        if section is None:
            raise ConfigError(f"line {lineno}: key outside any [section]")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS[section]:
            raise ConfigError(f"line {lineno}: unknown key '{key}' in "
                              f"[{section}]")
        if (section, key) in pairs:
            raise ConfigError(f"line {lineno}: duplicate key '{key}' in "
                              f"[{section}]")
        if not value:
            raise ConfigError(f"line {lineno}: key '{key}': empty value")
        pairs[(section, key)] = (value, lineno)
    return pairs


def parse_config(text: str) -> RunConfig:
    """Parse and validate a config; raises ConfigError/UnitError on problems."""
    pairs = _read_pairs(text)

    for section, key in _REQUIRED_KEYS:
        if (section, key) not in pairs:
            raise ConfigError(f"missing required key '{section}.{key}'")

    def get(section: str, key: str) -> tuple[str, int]:
        return pairs[(section, key)]

    val, ln = get("substrate", "rel_permittivity")
    eps_r = _parse_number(val, "rel_permittivity", ln)
    if eps_r <= 1:
        raise ConfigError(f"line {ln}: key 'rel_permittivity': must be > 1")

    val, ln = get("substrate", "loss_tangent")
    tan_d = _parse_number(val, "loss_tangent", ln)
    if not (0 <= tan_d < 0.1):
        raise ConfigError(f"line {ln}: key 'loss_tangent': must be in [0, 0.1)")

    val, ln = get("substrate", "thickness")
    thickness = parse_quantity(val, "length", "thickness", ln)
    if thickness <= 0:
        raise ConfigError(f"line {ln}: key 'thickness': must be > 0")

    pads = None
    pad_keys = [(k, pairs.get(("pads", k)))
                for k in ("signal_pad_width", "ground_pad_width", "gap",
                          "tsv_radius")]
    present = [k for k, v in pad_keys if v is not None]
    if present and len(present) < len(pad_keys):
        missing = next(k for k, v in pad_keys if v is None)
        raise ConfigError(f"missing required key 'pads.{missing}' "
                          f"([pads] is all-or-none)")
    if present:
        dims = {}
        for k, entry in pad_keys:
            val, ln = entry
            dims[k] = parse_quantity(val, "length", k, ln)
            if dims[k] <= 0:
                raise ConfigError(f"line {ln}: key '{k}': must be > 0")
        pads = PadGeometry(**dims)

    substrate = SubstrateSpec(rel_permittivity=eps_r, loss_tangent=tan_d,
                              thickness=thickness, pads=pads)

    val, ln = get("design", "frequency")
    f_design = parse_quantity(val, "frequency", "frequency", ln)
    f_min, f_max = FREQUENCY_RANGE_HZ
    if not (f_min <= f_design <= f_max):
        raise ConfigError(f"line {ln}: key 'frequency': must be within "
                          f"[{f_min:.0e}, {f_max:.0e}] Hz")

    val, ln = get("sweep", "fermi_levels")
    fermi = parse_quantity_list(val, "energy", "fermi_levels", ln)
    ef_lo, ef_hi = FERMI_LEVEL_RANGE_EV
    for ef in fermi:
        if not (ef_lo <= ef <= ef_hi):
            raise ConfigError(
                f"line {ln}: key 'fermi_levels': {ef:g} eV outside accepted "
                f"range [{ef_lo}, {ef_hi}] eV")

    val, ln = get("sweep", "relaxation_times")
    taus = parse_quantity_list(val, "time", "relaxation_times", ln)
    tau_lo, tau_hi = (t * 1e12 for t in RELAXATION_RANGE_S)
    for tp in taus:
        if not (tau_lo <= tp <= tau_hi):
            raise ConfigError(
                f"line {ln}: key 'relaxation_times': {tp:g} ps outside "
                f"accepted range [{tau_lo:g}, {tau_hi:g}] ps")

    val, ln = get("sweep", "band")
    band_vals = parse_quantity_list(val, "frequency", "band", ln)
    if len(band_vals) != 2 or not (band_vals[0] < band_vals[1]):
        raise ConfigError(f"line {ln}: key 'band': need exactly two "
                          f"frequencies with lo < hi")
    if not (f_min <= band_vals[0] and band_vals[1] <= f_max):
        raise ConfigError(f"line {ln}: key 'band': must lie within "
                          f"[{f_min:.0e}, {f_max:.0e}] Hz")

    val, ln = get("sweep", "points")
    try:
        points = int(val)
    except ValueError:
        raise ConfigError(f"line {ln}: key 'points': not an integer: {val!r}")
    if points < 2:
        raise ConfigError(f"line {ln}: key 'points': must be >= 2")

    val, ln = get("sweep", "variants")
    names = [item.strip() for item in val.split(",")]
    variants: list[ConductorSpec] = []
    seen = set()
    for name in names:
        if name not in ("metal", "graphene"):
            raise ConfigError(f"line {ln}: key 'variants': unknown variant "
                              f"{name!r} (metal or graphene)")
        if name in seen:
            raise ConfigError(f"line {ln}: key 'variants': duplicate "
                              f"{name!r}")
        seen.add(name)
        variants.append(ConductorSpec.metal() if name == "metal"
                        else ConductorSpec.graphene(None))
    if not variants:
        raise ConfigError(f"line {ln}: key 'variants': must not be empty")

    temperature = 300.0
    if ("sweep", "temperature") in pairs:
        val, ln = get("sweep", "temperature")
        temperature = parse_quantity(val, "temperature", "temperature", ln)
        if temperature <= 0:
            raise ConfigError(f"line {ln}: key 'temperature': must be > 0 K")

    val, ln = get("output", "format")
    fmt = val.strip()
    if fmt not in ("csv", "json"):
        raise ConfigError(f"line {ln}: key 'format': must be csv or json")

    path, _ = get("output", "path")

    grid = SweepGrid(fermi_levels=fermi, relaxation_times=taus,
                     frequency_band=(band_vals[0], band_vals[1]),
                     frequency_points=points, conductor_variants=variants)
    return RunConfig(substrate=substrate, design_frequency=f_design,
                     sweep=grid, output_format=fmt, output_path=path,
                     temperature=temperature)
