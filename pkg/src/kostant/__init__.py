"""Exact-arithmetic Lie theory: root systems, Weyl combinatorics, formal
characters, explicit simple modules, nilradical cohomology and its
verification, and affine-linkage regime tests.

Everything is computed over the integers and rationals; no floating point.
"""

from .affinelinkage import (
    UnityParams,
    affine_linked,
    bottom_alcove_weights_check,
    in_closed_lowest_alcove,
    polo_tilouine_regime,
    restricted_decompose,
)
from .cecohomology import CochainComplex, build_complex, cohomology, cohomology_levi
from .charring import (
    FormalCharacter,
    LeviDecomposition,
    decompose_levi,
    euler_characteristic,
    exterior_character,
    simple_character,
    weyl_dimension,
)
from .errors import CapExceededError, DecompositionError, InvariantError
from .kostantcalc import KostantPrediction, VerifyResult, linkage_ok, predict, verify
from .repmodel import (
    ModuleRealization,
    check_module,
    construct_simple,
    kostant_partitions,
    realization_to_json,
)
from .rootdata import (
    Root,
    RootSystem,
    build_root_system,
    coxeter_number,
    nilradical_roots,
    pairing,
    parse_type,
    rho,
)
from .weylgroup import (
    WeylElement,
    act,
    dot_act,
    enumerate_weyl,
    inversion_set,
    longest_element,
    min_coset_reps,
    parse_word,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CochainComplex",
    "DecompositionError",
    "FormalCharacter",
    "InvariantError",
    "KostantPrediction",
    "LeviDecomposition",
    "ModuleRealization",
    "Root",
    "RootSystem",
    "UnityParams",
    "VerifyResult",
    "WeylElement",
    "act",
    "affine_linked",
    "bottom_alcove_weights_check",
    "build_complex",
    "build_root_system",
    "check_module",
    "cohomology",
    "cohomology_levi",
    "construct_simple",
    "coxeter_number",
    "decompose_levi",
    "dot_act",
    "enumerate_weyl",
    "euler_characteristic",
    "exterior_character",
    "in_closed_lowest_alcove",
    "inversion_set",
    "kostant_partitions",
    "linkage_ok",
    "longest_element",
    "min_coset_reps",
    "nilradical_roots",
    "pairing",
    "parse_type",
    "parse_word",
    "polo_tilouine_regime",
    "predict",
    "realization_to_json",
    "restricted_decompose",
    "rho",
    "simple_character",
    "verify",
    "weyl_dimension",
]
