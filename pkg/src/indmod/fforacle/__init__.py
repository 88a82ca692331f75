"""Finite-field brute force for SL2: fields, explicit modules, spinning, checks."""
from .checks import (
    CheckResult,
    SpinLattice,
    SusSolution,
    brute_factors,
    respin_no_growth,
    solve_sus,
    spin_lattice,
    steinberg_dim,
    sus_unique,
    verify_chain,
    verify_exact_sequence,
    verify_extend,
    verify_power_sum,
    verify_wtvec,
)
from .field import AmbientField, ambient_field
from .kernels import BACKEND
from .modules import FqModule, InducedModel, SubspaceBasis, induced_model, make_h0

__all__ = [
    "BACKEND",
    "AmbientField",
    "CheckResult",
    "FqModule",
    "InducedModel",
    "SpinLattice",
    "SubspaceBasis",
    "SusSolution",
    "ambient_field",
    "brute_factors",
    "induced_model",
    "make_h0",
    "respin_no_growth",
    "solve_sus",
    "spin_lattice",
    "steinberg_dim",
    "sus_unique",
    "verify_chain",
    "verify_exact_sequence",
    "verify_extend",
    "verify_power_sum",
    "verify_wtvec",
]
