"""Exact symbolic computations with pointed Hopf algebras: presentations,
dual pairings, Drinfel'd doubles, and module-algebra actions on k[u]/(u^n-1)."""

from .cyclotomic import (
    CycloNum,
    root_of_unity,
    order_of,
    embed_to_conductor,
    q_int,
    q_factorial,
    q_binom,
    bracket_int,
    bracket_factorial,
)
from .algebra import PresentedHopfAlgebra, HopfElement, TensorElement, GeneratorSpec
from .catalog import (
    HnParams,
    taft,
    sweedler,
    hnzmt,
    hnzmt_dual,
    gen_taft,
    t421,
    t421_dual,
    uqsl2,
    oq_sl2_bar,
    hnzmt_isomorphic,
)
from .pairing import DualityPairing, catalog_pairing, dual_basis_identities
from .double import build_double, cross_relation, matches_paper_presentation
from .modalg import (
    CyclicAlgebra,
    ModuleAlgebraAction,
    classify_actions,
    extend_to_double,
    verify_action,
    is_inner_faithful,
    action_of,
)

__version__ = "0.1.0"
