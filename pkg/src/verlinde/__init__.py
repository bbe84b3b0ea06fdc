"""Exact combinatorics for Verlinde categories Ver_p(G).

Everything here works over the integers (or exact rationals): root data for
the simple types, Freudenthal characters, restriction along a principal SL2,
the fusion ring of Ver_p, the bracket support of sl(L_{n-1}) and its
subalgebra lattice, fusion in Ver_p(G) via the affine Weyl group, and the
mod-p dimension series for symmetric and exterior powers.
"""

from verlinde.rootsys import RootDatum, build_root_datum, pair, minuscule_weights, alcove_weights
from verlinde.charmod import DominantCharacter, dominant_character, weight_multiplicity
from verlinde.principal import (
    SL2Char,
    CyclotomicInt,
    restrict_principal,
    weyl_strings,
    verp_image,
    verp_image_cyclotomic,
    halfspin_image,
)
from verlinde.verp import VerpObject, fuse, sym_ext_power, invariants_profile, dim_mod_p
from verlinde.liealg import (
    SubalgebraMask,
    s_value,
    bracket_nonzero,
    bracket_support,
    enumerate_subalgebras,
    classify_mask,
    verify_p_identities,
    six_j_cross_check,
)
from verlinde.verlinde_g import (
    StraightenResult,
    straighten_dot,
    tensor_decompose,
    tensor_multiplicity,
    invertibles,
    verify_minuscule_symmetry,
)
from verlinde.dims import power_series, divisibility_check

__version__ = "0.1.0"

__all__ = [
    "RootDatum", "build_root_datum", "pair", "minuscule_weights", "alcove_weights",
    "DominantCharacter", "dominant_character", "weight_multiplicity",
    "SL2Char", "CyclotomicInt", "restrict_principal", "weyl_strings", "verp_image",
    "verp_image_cyclotomic", "halfspin_image",
    "VerpObject", "fuse", "sym_ext_power", "invariants_profile", "dim_mod_p",
    "SubalgebraMask", "s_value", "bracket_nonzero", "bracket_support",
    "enumerate_subalgebras", "classify_mask", "verify_p_identities", "six_j_cross_check",
    "StraightenResult", "straighten_dot", "tensor_decompose", "tensor_multiplicity",
    "invertibles", "verify_minuscule_symmetry",
    "power_series", "divisibility_check",
]
