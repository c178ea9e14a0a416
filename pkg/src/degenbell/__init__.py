"""Exact algebra of degenerate Stirling/Whitney triangles, the
Bell/Dowling polynomial families built on them, boson normal ordering,
and a differential-operator model, all over Q[L].

L is the printed name of the degeneracy parameter; every classical
object is recovered by substituting 0 for it.
"""

from .rings import (
    CLASSICAL,
    DEGENERATE,
    LAM,
    LambdaPoly,
    X,
    XPoly,
    ff_classical,
    ff_degenerate,
    from_falling_basis,
    subst_lambda,
    to_falling_basis,
)
from .triangles import (
    TABLE_KINDS,
    TriangleTable,
    make_table,
    orthogonality_sum,
    stirling1_degenerate,
    stirling2_classical,
    stirling2_degenerate,
    whitney_degenerate,
    whitney_r_degenerate,
)
from .polynomials import (
    FAMILY_KINDS,
    PolyFamily,
    bell_classical,
    bell_degenerate,
    bell_gf_oracle,
    bell_number,
    dowling,
    dowling_r,
    make_family,
)
from .spivey import (
    IDENTITY_NAMES,
    VerificationCertificate,
    make_certificate,
    r_dowling_classical_limit,
    run_identity,
    spivey_classical,
    spivey_degenerate_bell,
    spivey_degenerate_dowling,
    spivey_degenerate_r_dowling,
)
from .weyl import (
    NormalForm,
    check_commutator_rule,
    check_creation_shift,
    check_ff_splitting,
    check_index_splitting,
    check_number_ff_expansion,
    check_ordered_power,
    check_whitney_expansion,
    classical_ff_power,
    commutator,
    degenerate_power,
    nf_multiply,
    normal_order_word,
)
from .diffrep import (
    TruncatedSeries,
    check_annihilation_fixed_point,
    check_dowling_fock,
    check_number_ff_on_coherent,
    vacuum_coherent,
)
from .expr import (
    ExprError,
    LexError,
    ParseError,
    eval_source,
    format_lambda_poly,
    format_nf,
    format_xpoly,
    parse,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL",
    "DEGENERATE",
    "ExprError",
    "FAMILY_KINDS",
    "IDENTITY_NAMES",
    "LAM",
    "LambdaPoly",
    "LexError",
    "NormalForm",
    "ParseError",
    "PolyFamily",
    "TABLE_KINDS",
    "TriangleTable",
    "TruncatedSeries",
    "VerificationCertificate",
    "X",
    "XPoly",
    "bell_classical",
    "bell_degenerate",
    "bell_gf_oracle",
    "bell_number",
    "check_annihilation_fixed_point",
    "check_commutator_rule",
    "check_creation_shift",
    "check_dowling_fock",
    "check_ff_splitting",
    "check_index_splitting",
    "check_number_ff_expansion",
    "check_number_ff_on_coherent",
    "check_ordered_power",
    "check_whitney_expansion",
    "classical_ff_power",
    "commutator",
    "degenerate_power",
    "dowling",
    "dowling_r",
    "eval_source",
    "ff_classical",
    "ff_degenerate",
    "format_lambda_poly",
    "format_nf",
    "format_xpoly",
    "from_falling_basis",
    "make_certificate",
    "make_family",
    "make_table",
    "nf_multiply",
    "normal_order_word",
    "orthogonality_sum",
    "parse",
    "r_dowling_classical_limit",
    "run_identity",
    "spivey_classical",
    "spivey_degenerate_bell",
    "spivey_degenerate_dowling",
    "spivey_degenerate_r_dowling",
    "stirling1_degenerate",
    "stirling2_classical",
    "stirling2_degenerate",
    "subst_lambda",
    "to_falling_basis",
    "vacuum_coherent",
    "whitney_degenerate",
    "whitney_r_degenerate",
]
