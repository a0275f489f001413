"""Hall-Littlewood P-polynomials of types B and C for regular weights."""

from .alcove import enumerate_admissible, schwer_evaluate
from .chains import lambda_chain, validate_chain
from .characters import dimension, orbit_sum, weyl_character
from .exactpoly import HLPoly
from .fillings import enumerate_fillings, filling_map, kn_fillings
from .formula import tableau_evaluate, verify_compression

__version__ = "0.1.0"

__all__ = [
    "HLPoly", "lambda_chain", "validate_chain", "enumerate_admissible", "schwer_evaluate",
    "enumerate_fillings", "filling_map", "kn_fillings", "tableau_evaluate",
    "verify_compression", "weyl_character", "orbit_sum", "dimension",
]
