"""Exact spinor L-factor calculator for GSp(4) with split Bessel models."""

from .chars import Character, CharacterGroup, Generator, LFactorProduct, tate_factor
from .catalog import (
    BesselDatum,
    GKData,
    ReprSpec,
    admissible_bessel_set,
    bessel_datum,
    central_character,
    delta0,
    delta_minus,
    delta_plus,
    gk_decomposition,
)
from .engine import (
    VerificationReport,
    correspondence_check,
    divisibility_and_independence_check,
    hom_dim,
    subregular_factor,
    total_lfactor,
)
from .specialize import central_specialization

__all__ = [
    "BesselDatum",
    "Character",
    "CharacterGroup",
    "GKData",
    "Generator",
    "LFactorProduct",
    "ReprSpec",
    "VerificationReport",
    "admissible_bessel_set",
    "bessel_datum",
    "central_character",
    "central_specialization",
    "correspondence_check",
    "delta0",
    "delta_minus",
    "delta_plus",
    "divisibility_and_independence_check",
    "gk_decomposition",
    "hom_dim",
    "subregular_factor",
    "tate_factor",
    "total_lfactor",
]

__version__ = "0.1.0"
