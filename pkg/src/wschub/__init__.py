"""Exact equivariant Schubert calculus on weighted flag varieties."""
from .exactpoly import Poly, NotDivisible, divided_difference, exact_divide_linear, substitute_linear
from .rootdata import ParabolicCosets, RootDatum, WeylElement, WeylGroup, build_root_datum
from .weighted import ConfigError, SymbolicChiError, WeightedConfig, nonweighted_chi
from .schubert import ChevalleyMismatch, GKMClass, Schubert, SchubertExpansion
from .positivity import (
    Certificate,
    NotNonnegative,
    SquarefreeDecomposition,
    certify_structure_constants,
    negroot_expand_at,
    reexpand_weighted,
    squarefree_decompose,
    verify_certificate,
)

__version__ = "0.1.0"
