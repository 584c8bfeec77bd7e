"""gapseq: exact gap-sum and gap-product sequences of integer sequences.

The gaps of a sequence are the runs of consecutive integers strictly
between successive terms; this package computes their sums and products
exactly, builds the rational generating functions of Horadam gap-sums,
verifies the Fuss-Catalan and Raney gap-product identities, and
cross-checks everything against OEIS b-files.
"""

from .combinatorics import (
    as_integer,
    binom,
    check_fc_identity,
    check_raney_identity,
    fuss_catalan,
    gap_product_closed,
    raney,
)
from .folding import a088748, descent_marker, fold, fold_identity_check
from .gaps import (
    Gap,
    gap,
    gap_product,
    gap_sum,
    gap_sum_abs,
    gap_sum_geometric_closed,
    gap_sum_linear_closed,
    gap_sum_signed,
    product_range,
)
from .genfun import (
    Poly,
    RatFunc,
    horadam_gap_sum_gf,
    horadam_gf,
    horadam_shift_gf,
    horadam_shift_square_gf,
    horadam_square_gf,
    integer_coefficients,
    poly_gcd,
    ratfunc,
    ratfunc_from_text,
    ratfunc_to_text,
)
from .oeis import (
    BFile,
    BFileError,
    CheckReport,
    FetchError,
    Mismatch,
    cross_check,
    fetch_bfile,
    parse_bfile,
    render_bfile,
)
from .sequences import (
    FIBONACCI,
    JACOBSTHAL,
    PELL,
    Binomial,
    Explicit,
    Fold,
    Geometric,
    Horadam,
    Linear,
    Polynomial,
    Primes,
    SeqSpec,
    SpecError,
    nth_prime,
    term,
    terms,
)

__version__ = "0.1.0"

__all__ = [
    "BFile",
    "BFileError",
    "Binomial",
    "CheckReport",
    "Explicit",
    "FIBONACCI",
    "FetchError",
    "Fold",
    "Gap",
    "Geometric",
    "Horadam",
    "JACOBSTHAL",
    "Linear",
    "Mismatch",
    "PELL",
    "Poly",
    "Polynomial",
    "Primes",
    "RatFunc",
    "SeqSpec",
    "SpecError",
    "a088748",
    "as_integer",
    "binom",
    "check_fc_identity",
    "check_raney_identity",
    "cross_check",
    "descent_marker",
    "fetch_bfile",
    "fold",
    "fold_identity_check",
    "fuss_catalan",
    "gap",
    "gap_product",
    "gap_product_closed",
    "gap_sum",
    "gap_sum_abs",
    "gap_sum_geometric_closed",
    "gap_sum_linear_closed",
    "gap_sum_signed",
    "horadam_gap_sum_gf",
    "horadam_gf",
    "horadam_shift_gf",
    "horadam_shift_square_gf",
    "horadam_square_gf",
    "integer_coefficients",
    "nth_prime",
    "parse_bfile",
    "poly_gcd",
    "product_range",
    "raney",
    "ratfunc",
    "ratfunc_from_text",
    "ratfunc_to_text",
    "render_bfile",
    "term",
    "terms",
]
