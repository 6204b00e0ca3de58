"""Polynomials, Gröbner bases and finitely presented Q-algebras."""
from .finite import (ConnectednessCertificate, FiniteStructure, PointSet,
                     connectedness_certificate, finite_dim_basis, idempotents,
                     is_finite_dimensional, is_weil, points, primitive_idempotents,
                     rational_roots, standard_monomials, structure, weil_point)
from .fpalgebra import (AlgMorphism, FpAlgebra, InfiniteDimensional, NotWellDefined,
                        PositiveDimensional, copair, direct_product, hom_check,
                        jointly_monic, quotient, rename, renaming_isomorphism, reorder,
                        tensor_coproduct)
from .groebner import Ideal, division, groebner_basis, ideal_membership, normal_form
from .parse import ParseError, parse_polynomial
from .polynomial import (GREVLEX, GRLEX, LEX, MonomialOrder, Polynomial,
                         elimination_order, format_polynomial, get_order)

__all__ = [
    "AlgMorphism", "ConnectednessCertificate", "FiniteStructure", "FpAlgebra", "GREVLEX",
    "GRLEX", "Ideal", "InfiniteDimensional", "LEX", "MonomialOrder", "NotWellDefined",
    "ParseError", "PointSet", "Polynomial", "PositiveDimensional", "connectedness_certificate",
    "copair", "direct_product", "division", "elimination_order", "finite_dim_basis",
    "format_polynomial", "get_order", "groebner_basis", "hom_check", "ideal_membership",
    "idempotents", "is_finite_dimensional", "is_weil", "jointly_monic", "normal_form",
    "parse_polynomial", "points", "primitive_idempotents", "quotient", "rational_roots",
    "rename", "renaming_isomorphism", "reorder", "standard_monomials", "structure", "tensor_coproduct", "weil_point",
]
