"""Point counts, zeta functions and evaluation codes of diagonal and
Hermitian hypersurfaces over finite fields, with brute-force cross-checks."""

from .counts import (
    BoundReport,
    CountTriple,
    DiagonalParams,
    b_function,
    derive_n1_n2,
    pi_size,
    projective_count,
    tss_check,
    weil_deligne_check,
    wolfmann_counts,
)
from .errors import (
    BadParams,
    DiagsurfError,
    InexactDivision,
    NotADivisor,
    NotPrime,
    SizeExceeded,
    ZeroToNonpositive,
)
from .ff import FieldCtx, FieldSpec, build_field, dth_roots, neg_in_unit_group, unit_group
from .zeta import FactoredRational, diagonal_zeta, ratio_f_check, series_counts, tower_counts

__version__ = "0.1.0"
