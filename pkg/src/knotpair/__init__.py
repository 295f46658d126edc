"""Blanchfield pairings, weight sums of quandle colorings and the constant relating them."""

__version__ = "0.1.0"

from .laurent import LaurentPoly, T, ONE, ZERO, parse_laurent
from .quotient import Modulus, QElem
from .seifert import seifert_data, blanchfield_gram, cbl_gram, GramForm
from .diagram import KnotDiagram, parse_pd, braid_closure, coloring_generators, weight_gram
from .alpha import alpha_extract, alpha_classify

__all__ = [
    "__version__", "LaurentPoly", "T", "ONE", "ZERO", "parse_laurent", "Modulus", "QElem",
    "seifert_data", "blanchfield_gram", "cbl_gram", "GramForm", "KnotDiagram", "parse_pd",
    "braid_closure", "coloring_generators", "weight_gram", "alpha_extract", "alpha_classify",
]
