"""Quaternary Legendre pairs of even length: constructions and exact verification."""

from ._backend import BACKEND
from .constructions import (
    ConstructionError,
    HadamardMatrix,
    Matrix2,
    compression_check,
    gs_matrices,
    gs_pair,
    theorem1_pair,
    theorem2_pair,
    turyn_double,
    verify_hadamard,
    w1_pair,
    w2_sequence,
)
from .field import FieldElement, FieldError, FieldSpec, chi, element_order, make_field
from .sequences import (
    GaussianInt,
    Sequence,
    autocorrelation_spectrum,
    cross_correlation,
    gray_combine,
    gray_split,
    is_amicable_set,
    is_complementary,
    is_legendre_pair,
    is_symmetric,
    pair_sums,
    seq,
)

__version__ = "0.1.0"
