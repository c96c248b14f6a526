"""Exact BCH, Zassenhaus and q-Zassenhaus expansions over Q(q)."""

from .coeffield import (
    PoleError,
    QRationalFunction,
    c_coeff,
    eval_at,
    limit_q1,
    q_binomial,
    q_factorial,
    q_number,
)
from .freealgebra import (
    A,
    B,
    Bracket,
    CommutatorExpr,
    Leaf,
    NCPolynomial,
    bracket,
    exp_trunc,
    expand_comm_expr,
    homogeneous_part,
    inv_trunc,
    jackson_qexp_trunc,
    log_trunc,
    nc_mul,
    q_commutator,
    qplane_normal_form,
)
from .disentangle import (
    DisentangleResult,
    bch_terms,
    classical_limit,
    default_alphas,
    q_zassenhaus_terms,
    reconstruct,
    zassenhaus_terms,
)
from .catalog import catalog_formula

__version__ = "0.1.0"
