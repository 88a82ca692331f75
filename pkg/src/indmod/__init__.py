"""Composition factors of induced modules M(theta) from Weyl-group combinatorics,
with an independent finite-field oracle for the SL2 case."""
from .caps import CapError, Caps, get_caps, set_caps
from .charlat import RationalCharacter, i_theta, is_antidominant, is_strongly_antidominant, stabilizer
from .decomp import DecompositionReport, FactorDescriptor, decompose, dimension_identity_check, finite_level_dimensions
from .klpoly import c_element, expand_in_translates, kl_basis_expand, kl_polynomial
from .rootsys import CartanMatrix, RootDatum, build_root_system, datum_from_name
from .weyl import WeylElement, WeylGroup, partition_check, weyl_group

__version__ = "0.1.0"

__all__ = [
    "CapError",
    "Caps",
    "CartanMatrix",
    "DecompositionReport",
    "FactorDescriptor",
    "RationalCharacter",
    "RootDatum",
    "WeylElement",
    "WeylGroup",
    "build_root_system",
    "c_element",
    "datum_from_name",
    "decompose",
    "dimension_identity_check",
    "expand_in_translates",
    "finite_level_dimensions",
    "get_caps",
    "i_theta",
    "is_antidominant",
    "is_strongly_antidominant",
    "kl_basis_expand",
    "kl_polynomial",
    "partition_check",
    "set_caps",
    "stabilizer",
    "weyl_group",
]
