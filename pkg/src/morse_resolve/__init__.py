"""Cellular free resolutions of monomial ideals via homogeneous acyclic matchings."""

from .chain import BoundaryMatrix, HomologyProfile, boundary_matrix, rational_rank, reduced_homology
from .errors import GuardError
from .ideals import IdealParseError, LcmLattice, MonomialIdeal, face_label, lcm_lattice, minimalize, parse_ideal, read_ideal
from .monomials import Monomial, divides, lcm, parse_monomial
from .morse import (
    HomogeneousPair,
    Matching,
    MatchingError,
    MorseComplex,
    enumerate_maximal_matchings,
    exists_polyhedral_maximal_matching,
    homogeneous_pairs,
    is_acyclic,
    minimal_homogeneous_pairs,
    morse_complex,
    morse_fvector,
)
from .polyhedral import PolyhedralVerdict, candidate_3polytope_check, check_polyhedral, is_simplex_cell, meet_check
from .taylor import LabeledComplex, is_minimal_support, multigraded_betti, scarf_complex, taylor_complex, total_betti

__version__ = "0.1.0"
