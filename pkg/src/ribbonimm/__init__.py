"""Exact combinatorics of ribbon decomposition matrices.

Skew shapes cut along translated copies of an infinite ribbon give a
matrix of skew Schur functions whose determinant is the skew Schur
function of the whole shape.  This package computes that matrix, its
Temperley-Lieb and Kazhdan-Lusztig immanants, and several independent
combinatorial models for them (path covers, shuffle tableaux, crystal
operators), all over exact integer arithmetic.
"""

from .errors import (EmptySection, IncompatibleShape, NotSkew, RibbonError,
                     StrandTraceError, ValidityError)
from .shapes import (BELOW, LEFT, InfiniteRibbon, RibbonDecomposition,
                     SkewShape, decompose, ribbon_section_shape,
                     shape_from_tuples)
from .symfunc import (SchurExpansion, SFMatrix, SymPoly, determinant,
                      expand_schur, schur_poly, skew_schur)
from .tlalgebra import (NoncrossingMatching, enumerate_321_avoiding, imm_tl,
                        is_321_avoiding, perm_to_matching)
from .ribbonmat import RibbonMatrix, build, check_determinant, principal_minor
from .network import (build_network, count_covers, covers_by_type,
                      enumerate_covers, imm_by_covers, uncross_type)
from .shuffle import (ShuffleDiagram, ShuffleTableau, build_diagram,
                      crystal_E, crystal_F, enumerate_shuffle_tableaux,
                      imm_by_shuffle, is_yamanouchi, reading_word,
                      schur_expand_by_crystal, tableau_from_cover,
                      tableaux_by_type, tl_type)
from .klbase import (KLTable, bruhat_leq, conjecture12_harness, imm_kl,
                     kl_polynomials, kl_polynomials_hecke)
from .corpus import enumerate_decompositions, sweep_corpus

__version__ = "1.0.0"

__all__ = [
    "BELOW", "LEFT", "EmptySection", "IncompatibleShape", "NotSkew",
    "RibbonError", "StrandTraceError", "ValidityError",
    "InfiniteRibbon", "RibbonDecomposition", "SkewShape", "decompose",
    "ribbon_section_shape", "shape_from_tuples",
    "SchurExpansion", "SFMatrix", "SymPoly", "determinant", "expand_schur",
    "schur_poly", "skew_schur",
    "NoncrossingMatching", "enumerate_321_avoiding", "imm_tl",
    "is_321_avoiding", "perm_to_matching",
    "RibbonMatrix", "build", "check_determinant", "principal_minor",
    "build_network", "count_covers", "covers_by_type", "enumerate_covers",
    "imm_by_covers", "uncross_type",
    "ShuffleDiagram", "ShuffleTableau", "build_diagram", "crystal_E",
    "crystal_F", "enumerate_shuffle_tableaux", "imm_by_shuffle",
    "is_yamanouchi", "reading_word", "schur_expand_by_crystal",
    "tableau_from_cover", "tableaux_by_type", "tl_type",
    "KLTable", "bruhat_leq", "conjecture12_harness", "imm_kl",
    "kl_polynomials", "kl_polynomials_hecke",
    "enumerate_decompositions", "sweep_corpus",
    "__version__",
]
