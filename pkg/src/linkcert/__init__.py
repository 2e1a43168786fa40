"""Exact certificates for linkage of cyclic algebras over two-variable function fields."""

__version__ = "0.1.0"

from .algebra import (AlgebraSpec, AlgElem, CyclicAlgebra, KMatrix, Variant, additive_spec,
                      make_algebra, multiplicative_spec)
from .certificates import (Certificate, CertKind, CosetProfile, FamilyIndex, char0_family,
                           charp_family, coset_profile, coset_profile_certificate,
                           lemma_useful_V, lemma_useful_W, monomial_values, norm_residue_check,
                           profile_intersection, residue_degree_check, totally_ramified_certificate,
                           trace_formula_certificate)
from .errors import *  # noqa: F401,F403
from .expressions import parse_element
from .funcfield.frobenius import EpVector, ep_coordinates, is_pth_power
from .funcfield.poly import BiPoly, PolynomialRing
from .funcfield.ratfunc import RatFunc, RationalFunctionField
from .funcfield.valuation import Coset2, Value2, gauss_residue, gauss_valuation, rank2_valuation
from .linalg import ExactMatrix, nullspace, rank, row_basis, same_span, subspace_intersection
from .scalars import CycloNum, CyclotomicField, FpScalar, PrimeField, PrimeParam, RationalField
