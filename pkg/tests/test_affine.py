from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohesion_lab import affine as af
from cohesion_lab.algebra import (FpAlgebra, finite_dim_basis, parse_polynomial,
                                  renaming_isomorphism)


def alg(gens, *rels):
    gens = tuple(gens) if not isinstance(gens, str) else (gens,)
    return FpAlgebra(gens, [parse_polynomial(r, list(gens)) for r in rels])


EPS = alg("eps", "eps^2")
Y2 = alg("y", "y^2")
Y3 = alg("y", "y^3")
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


# -- Weil prolongation -------------------------------------------------------

def test_tangent_bundle_of_the_line():
    pro = af.weil_prolongation(FpAlgebra.free("x"), Y2)
    assert pro.algebra.presentation() == "k[a, b]"


def test_prolongation_of_first_order_infinitesimal():
    pro = af.weil_prolongation(Y2, Y2)
    assert pro.algebra == alg(("a", "b"), "a b", "a^2")
    # same algebra as k[x, y]/(x y, y^2) after renaming a -> y, b -> x
    assert renaming_isomorphism(pro.algebra, alg(("x", "y"), "x y", "y^2")) == {"a": "y", "b": "x"}


def test_prolongation_structure_maps():
    pro = af.weil_prolongation(FpAlgebra.free("x"), Y2)
    # evaluation at the point keeps the constant coefficient
    assert pro.ev_alg.describe() == "x ↦ a"
    assert pro.ev_alg.compose(pro.const_alg).is_identity() is False
    assert pro.const_alg.compose(pro.ev_alg).is_identity()


def test_non_weil_exponent_refused():
    with pytest.raises(af.NotWeil):
        af.weil_prolongation(FpAlgebra.free("x"), alg("x", "x^2 - 1"))
    with pytest.raises(af.NotWeil):
        af.PointedScheme.weil(alg("x", "x^2 - x"))


# -- Euler reals -----------------------------------------------------------------

def test_euler_reals_of_first_order_infinitesimal():
    E = af.euler_reals(af.PointedScheme.weil(EPS))
    assert str(E.R) == "Spec(k[x])"
    assert af.monoid_mult(E).describe() == "x ↦ y z"
    assert af.unit_point(E).describe() == "x ↦ 1"
    assert af.zero_point(E).describe() == "x ↦ 0"


@pytest.mark.parametrize("W", [EPS, Y3, alg(("x", "y"), "x^2", "y^2")])
def test_euler_monoid_with_zero(W):
    E = af.euler_reals(af.PointedScheme.weil(W))
    laws = af.monoid_laws(E.algebra, af.monoid_mult(E), af.unit_point(E), af.zero_point(E))
    assert laws.monoid_with_zero


def test_second_order_euler_monoid_is_not_commutative():
    E = af.euler_reals(af.PointedScheme.weil(Y3))
    assert str(E.R) == "Spec(k[x, y])"
    laws = af.monoid_laws(E.algebra, af.monoid_mult(E), af.unit_point(E), af.zero_point(E))
    assert not laws.commutative


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_second_order_mult_matches_substitution(a, b, c, d):
    # f(y) = a y + b y^2, g(y) = c y + d y^2 modulo y^3; f∘g = ac y + (ad + b c^2) y^2
    E = af.euler_reals(af.PointedScheme.weil(Y3))
    mult = af.monoid_mult(E)
    point = [a, b, c, d]  # x_1, y_1, x_2, y_2
    assert mult.codomain.gens == ("x_1", "y_1", "x_2", "y_2")
    x_img, y_img = (im.evaluate(point) for im in mult.images)
    assert x_img == a * c
    assert y_img == a * d + b * c * c


def test_euler_composition_calculus():
    res = af.check_euler_composition(af.PointedScheme.weil(EPS))
    assert len(res) == 5 and all(res.values())


def test_euler_composition_rejects_other_T():
    with pytest.raises(ValueError):
        af.check_euler_composition(af.PointedScheme.weil(Y3))


# -- rings and the KL check -----------------------------------------------------

def test_kl_holds_for_the_line():
    rep = af.check_kl(af.RingObject.line())
    assert rep.verdict is True
    assert rep.forward is not None and rep.inverse is not None


def test_kl_fails_on_an_infinitesimal_with_dimension_certificate():
    ring = af.RingObject.from_formulas(Y2)
    # y + z is not an algebra map on k[y]/(y^2), so addition is dropped
    assert any(i.startswith("add:") for i in ring.issues)
    rep = af.check_kl(ring)
    assert rep.verdict is False
    assert "dimension mismatch" in rep.certificate


def test_zero_ring_is_trivially_kl():
    assert af.check_kl(af.RingObject.from_formulas(alg("x", "1"))).verdict is True


def test_units_of_the_line_are_connected():
    rep = af.invertibles_scheme(af.RingObject.line())
    assert str(rep.U) == "Spec(k[x, u]/(x u - 1))"
    assert rep.certificate.no_nontrivial_idempotent
    assert rep.inclusion_alg.describe() == "x ↦ x"


def test_pullback_of_points_is_their_intersection():
    line = FpAlgebra.free("x")
    k = FpAlgebra.ground()
    from cohesion_lab.algebra import hom_check
    p0 = hom_check(line, k, [Fraction(0)])
    p1 = hom_check(line, k, [Fraction(1)])
    P, _, _ = af.pullback(p0, p0)
    assert not P.algebra.is_zero_algebra()
    P, _, _ = af.pullback(p0, p1)
    assert P.algebra.is_zero_algebra()


def test_simplify_eliminates_solved_generators():
    A = alg(("x", "y"), "y - x^2", "x^3")
    B, to_B, from_B = af.simplify(A)
    assert len(B.gens) == 1
    assert len(finite_dim_basis(B)) == 3
    assert from_B.compose(to_B).is_identity()
