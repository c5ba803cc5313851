"""Equivalent-circuit cavity model of the patch antenna.

The patch is a parallel RLC resonator. Three loss channels set the quality
factor: dielectric (1/tan_delta), conductor (skin effect for bulk metal,
sheet resistance against the combined magnetic plus kinetic inductance for
graphene), and radiation through the two slot apertures. The radiating
slots are modeled with the standard slot conductance G1 = (1/90)(W/lambda0)^2
plus the mutual conductance of the slot pair at separation L + 2 dL,

    g12 = Int_0^pi B(theta) J0(k0 (L + 2 dL) sin theta) d_theta / Int_0^pi B d_theta,
    B(theta) = (sin((k0 W / 2) cos theta) / cos theta)^2 sin^3 theta,

so Q_radiation = w C / (2 G1 (1 + g12)) with the cavity capacitance
C = eps0 eps_eff L W / (2 h).

A graphene patch resonates below the metal patch of the same dimensions
because the sheet's kinetic inductance adds to the magnetic inductance of
the patch line: f_graphene = f_metal / sqrt(1 + L_k / (mu0 h)).

The feed is a fixed ideal transformer chosen once per geometry so that the
metal variant is matched to the 50 ohm reference at its resonance; graphene
variants then show up as mismatch, with shallower dips for lossier sheets.
S11 floors at -120 dB to keep logs finite at a perfect match.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import j0

from .constants import CODATA2018, PhysicalConstants
from .errors import ValidationError
from .materials import GrapheneSheet, sheet_impedance
from .patch import PatchGeometry, f_res_metal

ALUMINUM_CONDUCTIVITY = 3.56e7  # S/m

REFERENCE_IMPEDANCE = 50.0  # ohm
S11_FLOOR_DB = -120.0


@dataclass(frozen=True)
class ConductorSpec:
    """The patch conductor: bulk metal or a graphene sheet.

    Use the metal() / graphene() constructors. A graphene spec with
    sheet=None is a sweep template (the sheet is filled in per grid cell)
    and is rejected by every computation here.
    """

    kind: str
    bulk_conductivity: float | None = None
    sheet: GrapheneSheet | None = None

    def __post_init__(self) -> None:
        if self.kind == "metal":
            if self.bulk_conductivity is None or self.bulk_conductivity <= 0:
                raise ValidationError("metal conductor needs bulk_conductivity > 0")
        elif self.kind == "graphene":
            if self.bulk_conductivity is not None:
                raise ValidationError("graphene conductor takes no bulk conductivity")
        else:
            raise ValidationError(f"unknown conductor kind {self.kind!r}")

    @classmethod
    def metal(cls, bulk_conductivity: float = ALUMINUM_CONDUCTIVITY) -> "ConductorSpec":
        return cls(kind="metal", bulk_conductivity=bulk_conductivity)

    @classmethod
    def graphene(cls, sheet: GrapheneSheet | None) -> "ConductorSpec":
        return cls(kind="graphene", sheet=sheet)

    def require_sheet(self) -> GrapheneSheet:
        if self.sheet is None:
            raise ValidationError("graphene conductor template has no sheet")
        return self.sheet


@dataclass(frozen=True)
class QFactors:
    """Loss bookkeeping; q_total is the harmonic combination."""

    q_radiation: float
    q_conductor: float
    q_dielectric: float
    q_total: float


@dataclass(frozen=True)
class SpectrumResult:
    """One frequency point of the reflection response."""

    frequency: float
    s11_db: float
    input_resistance: float
    input_reactance: float


@dataclass(frozen=True)
class AntennaReport:
    """Scalar summary of one antenna variant."""

    resonant_frequency: float
    min_s11_db: float
    bandwidth_minus10db: float
    efficiency: float
    directivity_dbi: float
    gain_dbi: float


def graphene_resonance(geometry: PatchGeometry, conductor: ConductorSpec,
                       constants: PhysicalConstants = CODATA2018) -> float:
    """Resonance of the patch with its conductor loading, in Hz.

    Metal returns the cavity resonance unchanged; graphene is pulled down
    by the kinetic-to-magnetic inductance ratio.
    """
    f_metal = f_res_metal(geometry, constants)
    if conductor.kind == "metal":
        return f_metal
    sheet = conductor.require_sheet()
    l_k = sheet_impedance(sheet, constants).kinetic_inductance
    l_m = constants.vacuum_permeability * geometry.substrate.thickness
    return f_metal / math.sqrt(1 + l_k / l_m)


def _cavity_capacitance(geometry: PatchGeometry,
                        constants: PhysicalConstants) -> float:
    return (constants.vacuum_permittivity * geometry.eps_eff
            * geometry.length * geometry.width
            / (2 * geometry.substrate.thickness))


def _slot_base(theta: float, k0w_half: float) -> float:
    c = math.cos(theta)
    if abs(c) < 1e-9:
        amp = k0w_half
    else:
        amp = math.sin(k0w_half * c) / c
    return amp * amp * math.sin(theta) ** 3


def mutual_conductance_ratio(geometry: PatchGeometry, frequency: float,
                             constants: PhysicalConstants = CODATA2018) -> float:
    """g12: mutual slot conductance relative to the self conductance.

    The slot pair sits at the effective resonant length L + 2 dL apart.
    """
    k0 = 2 * math.pi * frequency / constants.light_speed
    k0w_half = k0 * geometry.width / 2
    sep = geometry.length + 2 * geometry.fringing_extension
    num, _ = quad(lambda t: _slot_base(t, k0w_half) * j0(k0 * sep * math.sin(t)),
                  0, math.pi, limit=200)
    den, _ = quad(lambda t: _slot_base(t, k0w_half), 0, math.pi, limit=200)
    return num / den


def q_factors(geometry: PatchGeometry, conductor: ConductorSpec,
              frequency: float,
              constants: PhysicalConstants = CODATA2018) -> QFactors:
    """Radiation, conductor, and dielectric Q at the given frequency."""
    if frequency <= 0:
        raise ValidationError("frequency must be > 0")
    w = 2 * math.pi * frequency
    h = geometry.substrate.thickness
    lam0 = constants.light_speed / frequency

    q_diel = 1.0 / geometry.substrate.loss_tangent

    if conductor.kind == "metal":
        r_skin = math.sqrt(w * constants.vacuum_permeability
                           / (2 * conductor.bulk_conductivity))
        q_cond = w * constants.vacuum_permeability * h / r_skin
    else:
        z = sheet_impedance(conductor.require_sheet(), constants)
        l_total = constants.vacuum_permeability * h + z.kinetic_inductance
        q_cond = w * l_total / z.sheet_resistance

    g1 = (1.0 / 90.0) * (geometry.width / lam0) ** 2
    g12 = mutual_conductance_ratio(geometry, frequency, constants)
    c = _cavity_capacitance(geometry, constants)
    q_rad = w * c / (2 * g1 * (1 + g12))

    q_total = 1.0 / (1.0 / q_rad + 1.0 / q_cond + 1.0 / q_diel)
    return QFactors(q_radiation=q_rad, q_conductor=q_cond,
                    q_dielectric=q_diel, q_total=q_total)


def _resonator_parameters(geometry: PatchGeometry, conductor: ConductorSpec,
                          constants: PhysicalConstants,
                          ) -> tuple[float, float, float]:
    """(f_res, Q, R_peak) of the variant's parallel RLC equivalent."""
    f_res = graphene_resonance(geometry, conductor, constants)
    q = q_factors(geometry, conductor, f_res, constants).q_total
    c = _cavity_capacitance(geometry, constants)
    r_peak = q / (2 * math.pi * f_res * c)
    return f_res, q, r_peak


def _transformer_ratio(geometry: PatchGeometry,
                       constants: PhysicalConstants) -> float:
    """n^2 of the feed transformer that matches the metal variant to 50 ohm."""
    _, _, r_peak_metal = _resonator_parameters(
        geometry, ConductorSpec.metal(), constants)
    return r_peak_metal / REFERENCE_IMPEDANCE


def s11_spectrum(geometry: PatchGeometry, conductor: ConductorSpec,
                 band: tuple[float, float], points: int,
                 constants: PhysicalConstants = CODATA2018,
                 ) -> list[SpectrumResult]:
    """Reflection response over the band against the 50 ohm reference."""
    f_lo, f_hi = band
    if not (f_lo < f_hi):
        raise ValidationError("band must satisfy f_lo < f_hi")
    if points < 2:
        raise ValidationError("points must be >= 2")
    f_res, q, r_peak = _resonator_parameters(geometry, conductor, constants)
    n_sq = _transformer_ratio(geometry, constants)

    freqs = np.linspace(f_lo, f_hi, points)
    detune = freqs / f_res - f_res / freqs
    z_in = (r_peak / (1 + 1j * q * detune)) / n_sq
    gamma = (z_in - REFERENCE_IMPEDANCE) / (z_in + REFERENCE_IMPEDANCE)
    with np.errstate(divide="ignore"):
        s11_db = 20 * np.log10(np.abs(gamma))
    s11_db = np.maximum(s11_db, S11_FLOOR_DB)

    return [SpectrumResult(frequency=float(f), s11_db=float(s),
                           input_resistance=float(z.real),
                           input_reactance=float(z.imag))
            for f, s, z in zip(freqs, s11_db, z_in)]


def bandwidth_minus10db(spectrum: list[SpectrumResult]) -> float:
    """Width of the -10 dB interval around the deepest dip, in Hz.

    Linear interpolation at the crossings; 0 when the dip never reaches
    -10 dB. If the dip region runs into the spectrum edge the edge
    frequency bounds the interval.
    """
    if len(spectrum) < 2:
        raise ValidationError("spectrum needs at least 2 points")
    freqs = [p.frequency for p in spectrum]
    if any(b <= a for a, b in zip(freqs, freqs[1:])):
        raise ValidationError("spectrum must be sorted by frequency")
    s11 = [p.s11_db for p in spectrum]
    threshold = -10.0
    i_min = min(range(len(s11)), key=s11.__getitem__)
    if s11[i_min] > threshold:
        return 0.0

    lo = i_min
    while lo > 0 and s11[lo - 1] <= threshold:
        lo -= 1
    hi = i_min
    while hi < len(s11) - 1 and s11[hi + 1] <= threshold:
        hi += 1

    if lo == 0:
        f_left = freqs[0]
    else:
        frac = (threshold - s11[lo - 1]) / (s11[lo] - s11[lo - 1])
        f_left = freqs[lo - 1] + frac * (freqs[lo] - freqs[lo - 1])
    if hi == len(s11) - 1:
        f_right = freqs[-1]
    else:
        frac = (threshold - s11[hi]) / (s11[hi + 1] - s11[hi])
        f_right = freqs[hi] + frac * (freqs[hi + 1] - freqs[hi])
    return f_right - f_left


def directivity_dbi(geometry: PatchGeometry, frequency: float,
                    constants: PhysicalConstants = CODATA2018) -> float:
    """Broadside directivity of the radiating aperture, in dBi.

    Frozen closed form 6.6 + 10 log10(3 W / lambda0): the slot directivity
    figure scaled by the aperture width in wavelengths. Chosen for the
    W ~ lambda0 regime of these designs; pattern details (lobe tilt,
    array factor of the slot pair) are out of scope.
    """
    lam0 = constants.light_speed / frequency
    return 6.6 + 10 * math.log10(3 * geometry.width / lam0)


def gain_report(geometry: PatchGeometry, conductor: ConductorSpec,
                band: tuple[float, float] = (220e9, 325e9),
                points: int = 211,
                constants: PhysicalConstants = CODATA2018) -> AntennaReport:
    """Scalar antenna summary: resonance, dip, bandwidth, efficiency, gain.

    Efficiency is q_total/q_radiation at the variant's own resonance;
    directivity is evaluated there too. The dip depth and bandwidth come
    from the sampled spectrum over the band.
    """
    f_res = graphene_resonance(geometry, conductor, constants)
    qf = q_factors(geometry, conductor, f_res, constants)
    efficiency = qf.q_total / qf.q_radiation
    spectrum = s11_spectrum(geometry, conductor, band, points, constants)
    d_dbi = directivity_dbi(geometry, f_res, constants)
    return AntennaReport(
        resonant_frequency=f_res,
        min_s11_db=min(p.s11_db for p in spectrum),
        bandwidth_minus10db=bandwidth_minus10db(spectrum),
        efficiency=efficiency,
        directivity_dbi=d_dbi,
        gain_dbi=d_dbi + 10 * math.log10(efficiency),
    )
