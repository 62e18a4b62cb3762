"""Semifields from BEL-configurations over finite fields."""

from .bel import BelConfig
from .gf import FieldCtx
from .gtf import GtfParams, gtf_isotopic, gtf_knuth, gtf_to_cubical, gtf_valid
from .isotopy import Isotopism, invariants, isotopic_bruteforce
from .linpoly import LinPoly
from .rank2 import Rank2Pair, StabElement
from .semifield import CubicalMult, spread_of

__all__ = [
    "BelConfig",
    "CubicalMult",
    "FieldCtx",
    "GtfParams",
    "Isotopism",
    "LinPoly",
    "Rank2Pair",
    "StabElement",
    "gtf_isotopic",
    "gtf_knuth",
    "gtf_to_cubical",
    "gtf_valid",
    "invariants",
    "isotopic_bruteforce",
    "spread_of",
]

__version__ = "0.1.0"
