"""Exact computations with type-A Iwahori-Hecke algebras and their homology."""

from .scalars import CyclotomicRoot, GenericQ, PrimeField, RationalQ, parse_field
from .hecke import HeckeElement, T_ba, character, generator, mult, t_basis, unit
from .induced import InducedModule
from .complexes import FreeChainComplex, ChainMap, homology_dims
from .dcomplex import build_D, build_induced_D
from .injective_words import build_C, build_Cprime, theta
from .homalg import build_resolution, ext, stabilization_map, tor

__all__ = [
    "RationalQ", "PrimeField", "CyclotomicRoot", "GenericQ", "parse_field",
    "HeckeElement", "t_basis", "unit", "generator", "T_ba", "mult", "character",
    "InducedModule", "FreeChainComplex", "ChainMap", "homology_dims",
    "build_D", "build_induced_D", "build_C", "build_Cprime", "theta",
    "build_resolution", "tor", "ext", "stabilization_map",
]
