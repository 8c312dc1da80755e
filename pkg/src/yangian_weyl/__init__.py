"""Exact computations with local Weyl modules of Yangians.

The package computes, over the Gaussian rationals, the ordered
tensor-product factorization of local Weyl modules from Drinfeld
polynomial data for the classical families and G2, the finite criterion
sets governing cyclicity and irreducibility of tensor products of
fundamental modules, the supporting Weyl-group and weight-path
combinatorics, and an explicit rank-one module engine used as a
brute-force verification oracle.
"""

__version__ = "0.1.0"

from .criteria import (
    CriterionSet,
    CriterionSetMismatch,
    Verdict,
    criterion_set,
    criterion_set_from_ledger,
    cyclicity_guaranteed,
    dual_chain,
    irreducibility_guaranteed,
)
from .dims import (
    chain_dim,
    decomposition_table,
    lie_fundamental_dim,
    weyl_module_dim,
    yangian_fundamental_dim,
)
from .drinfeld import (
    DrinfeldTuple,
    FactorChain,
    NotDrinfeldSeriesError,
    TrivialModuleError,
    chain_to_poly,
    eigenvalue_series,
    order_factors,
    series_to_roots,
    shift_tuple,
)
from .exact import (
    GaussianRational,
    Matrix,
    ScalarParseError,
    Series,
    format_scalar,
    parse_scalar,
    re_compare,
    row_space_closure,
)
from .rootsys import (
    CartanDatum,
    LieType,
    cartan_datum,
    duality_shift,
    lie_type,
    longest_word,
    node_involution,
    positive_roots,
    reflect,
)
from .weylpath import (
    Ledger,
    SigmaChain,
    descent_chain,
    lowering_word,
    parameter_ledger,
)
from .ysl2 import (
    GeneratorLadder,
    SL2Module,
    defining_relation_failures,
    evaluation_module,
    extend_generators,
    is_highest_weight,
    is_irreducible,
    tensor_module,
    trivial_submodule_check,
    verify_drinfeld_series,
)

__all__ = [name for name in dir() if not name.startswith("_")]
