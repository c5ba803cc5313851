"""Graphene sheet electromagnetic properties from electronic parameters.

The free-carrier (intraband) response of graphene in the lower THz band is
Drude-like: sigma(w) = A * i / (w + i/tau), with the weight

    A = (2 e^2 k_B T / (pi hbar^2)) * ln[2 cosh(E_F / (2 k_B T))]

set by Fermi level and temperature. This module computes that conductivity,
the equivalent frequency-independent sheet resistance / kinetic inductance
pair, and the mobility relation mu = tau e v_F^2 / E_F used to translate
scattering time into a material quality figure.

Conventions: exp(-i w t) time dependence, so the inductive sheet has
Im(sigma) > 0. Fermi level is carried in eV and relaxation time in seconds;
all other quantities are SI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CODATA2018, PhysicalConstants
from .errors import ValidationError

FERMI_LEVEL_RANGE_EV = (0.05, 2.0)
RELAXATION_RANGE_S = (0.05e-12, 5.0e-12)

PHYSICS_CONVENTION = "physics_minus_iwt"


@dataclass(frozen=True)
class GrapheneSheet:
    """Electronic state of a graphene sheet.

    fermi_level is the chemical potential of the carriers in eV (gate
    tunable), relaxation_time the carrier scattering time in seconds,
    temperature in kelvin.
    """

    fermi_level: float
    relaxation_time: float
    temperature: float = 300.0

    def __post_init__(self) -> None:
        lo, hi = FERMI_LEVEL_RANGE_EV
        if not (lo <= self.fermi_level <= hi):
            raise ValidationError(
                f"fermi_level {self.fermi_level} eV outside accepted "
                f"range [{lo}, {hi}] eV")
        lo, hi = RELAXATION_RANGE_S
        if not (lo <= self.relaxation_time <= hi):
            raise ValidationError(
                f"relaxation_time {self.relaxation_time} s outside accepted "
                f"range [{lo:.0e}, {hi:.0e}] s")
        if self.temperature <= 0:
            raise ValidationError("temperature must be > 0 K")


@dataclass(frozen=True)
class SheetConductivity:
    """Complex surface conductivity in S per square.

    convention records the time dependence the imaginary part refers to;
    only exp(-i w t) is produced here (inductive response positive).
    """

    real_part: float
    imag_part: float
    convention: str = PHYSICS_CONVENTION

    def __post_init__(self) -> None:
        if self.convention != PHYSICS_CONVENTION:
            raise ValidationError(
                f"unknown time convention {self.convention!r}")

    @property
    def value(self) -> complex:
        return complex(self.real_part, self.imag_part)


@dataclass(frozen=True)
class SheetImpedance:
    """Series R-L equivalent of the Drude sheet, per square.

    Both members are frequency independent: R_s = 1/(A tau) and
    L_k = 1/A, where A is the Drude weight.
    """

    sheet_resistance: float
    kinetic_inductance: float

    def __post_init__(self) -> None:
        if self.sheet_resistance <= 0 or self.kinetic_inductance <= 0:
            raise ValidationError("sheet impedance members must be > 0")


def drude_weight(sheet: GrapheneSheet,
                 constants: PhysicalConstants = CODATA2018) -> float:
    """Drude weight A in S/s.

    Uses ln(2 cosh x) = x + ln(1 + exp(-2x)) for large x so that cold or
    strongly doped sheets do not overflow.
    """
    e = constants.electron_charge
    x = sheet.fermi_level * e / (2 * constants.boltzmann * sheet.temperature)
    if x > 20.0:
        ln_2cosh = x + math.log1p(math.exp(-2 * x))
    else:
        ln_2cosh = math.log(2 * math.cosh(x))
    prefactor = (2 * e**2 * constants.boltzmann * sheet.temperature
                 / (math.pi * constants.reduced_planck**2))
    return prefactor * ln_2cosh


def kubo_sigma(sheet: GrapheneSheet, angular_frequency: float,
               constants: PhysicalConstants = CODATA2018) -> SheetConductivity:
    """Intraband surface conductivity at angular frequency w (rad/s)."""
    if angular_frequency <= 0:
        raise ValidationError("angular_frequency must be > 0")
    a = drude_weight(sheet, constants)
    sigma = a * 1j / (angular_frequency + 1j / sheet.relaxation_time)
    return SheetConductivity(sigma.real, sigma.imag)


def sheet_impedance(sheet: GrapheneSheet,
                    constants: PhysicalConstants = CODATA2018) -> SheetImpedance:
    """Frequency-independent R_s and L_k of the Drude sheet."""
    a = drude_weight(sheet, constants)
    return SheetImpedance(sheet_resistance=1.0 / (a * sheet.relaxation_time),
                          kinetic_inductance=1.0 / a)


def mobility(sheet: GrapheneSheet,
             constants: PhysicalConstants = CODATA2018) -> float:
    """Carrier mobility mu = tau e v_F^2 / E_F, in cm^2/(V s)."""
    ef_joule = sheet.fermi_level * constants.electron_charge
    mu_si = (sheet.relaxation_time * constants.electron_charge
             * constants.fermi_velocity**2 / ef_joule)
    return mu_si * 1e4


def relaxation_from_mobility(mobility_cm2: float, fermi_level: float,
                             constants: PhysicalConstants = CODATA2018) -> float:
    """Scattering time in seconds from mobility (cm^2/(V s)) and E_F (eV).

    Inverse of mobility(); the pair round-trips to double precision.
    """
    if mobility_cm2 <= 0 or fermi_level <= 0:
        raise ValidationError("mobility and fermi_level must be > 0")
    mu_si = mobility_cm2 * 1e-4
    ef_joule = fermi_level * constants.electron_charge
    return mu_si * ef_joule / (constants.electron_charge
                               * constants.fermi_velocity**2)
