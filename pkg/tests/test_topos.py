import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohesion_lab.rig import FINITE_CATALOG, verify_prop2
from cohesion_lab.topos import (AdjointString, Exponential, NotPreCohesiveSite, arrow_site,
                                check_precohesive_site, check_triangles, constant,
                                constant_monoid01, constant_rig, coproduct,
                                euler_reals_presheaf, exponential_instances, fully_faithful_check,
                                hom_count, hyperconnected_check, interval_site, pi0,
                                point_site, pointed_T, preserves_product, presheaf_family,
                                prop1_check, prop2_internal, product, representable,
                                retract_site, surrogate_group, t_discrete_check, terminal,
                                units_and_bidirectional)

from oracles import brute_hom_count

SITES = {"point": point_site, "retract": retract_site, "interval": interval_site}


@pytest.fixture(params=sorted(SITES))
def site(request):
    return SITES[request.param]()


# -- sites ----------------------------------------------------------------------

def test_arrow_site_is_rejected_with_witness():
    v = check_precohesive_site(arrow_site())
    assert not v.precohesive
    assert str(v.witness) == "0"


def test_accepted_sites(site):
    v = check_precohesive_site(site)
    assert v.precohesive and v.witness is None


def test_adjoints_refuse_arrow_site():
    with pytest.raises(NotPreCohesiveSite):
        prop1_check(terminal(arrow_site()), terminal(arrow_site()), {})


# -- presheaf algebra against brute force --------------------------------------

def test_hom_count_matches_brute_force(site):
    fam = presheaf_family(site, count=10, max_size=2, seed=3)
    for X in fam[:6]:
        for Y in fam[:6]:
            assert hom_count(X, Y) == brute_hom_count(X, Y)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(sorted(SITES)), st.integers(0, 10_000))
def test_exponential_adjunction_counts(name, seed):
    C = SITES[name]()
    for Z, X, T in exponential_instances(C, 3, max_size=2, seed=seed):
        lhs = hom_count(Z, Exponential(X, T).presheaf)
        assert lhs == hom_count(product(Z, T)[0], X)


def test_exponential_by_terminal_is_trivial(site):
    X = representable(site, site.objects[-1])
    E = Exponential(X, terminal(site))
    assert E.presheaf.sizes() == X.sizes()


def test_coproduct_components_add(site):
    fam = presheaf_family(site, count=8, max_size=2, seed=1)
    for X in fam[:4]:
        for Y in fam[:4]:
            S, _, _ = coproduct(X, Y)
            assert len(pi0(S)) == len(pi0(X)) + len(pi0(Y))


def test_representables_are_connected(site):
    for c in site.objects:
        assert len(pi0(representable(site, c))) == 1


# -- the adjoint string --------------------------------------------------------

def test_triangle_identities(site):
    fam = presheaf_family(site, count=20, max_size=3, seed=0)
    rep = check_triangles(AdjointString(site), fam, [(), (0,), (0, 1)])
    assert rep.ok, rep.failures
    assert rep.checked == 3 * len(fam) + 9


def test_hyperconnected_and_products(site):
    fam = presheaf_family(site, count=20, max_size=3, seed=0)
    for X in fam:
        r = hyperconnected_check(site, X)
        assert r.beta_monic and r.sigma_epic
    for X in fam[:10]:
        for Y in fam[:10]:
            assert preserves_product(X, Y)


def test_arrow_site_breaks_sigma_surjectivity():
    C = arrow_site()
    # y(0) is empty at the terminal object 1, so stage 1 reaches no component
    r = hyperconnected_check(C, representable(C, "0"))
    assert r.beta_monic and not r.sigma_epic
    assert r.sigma_witness == "1"


def test_constant_presheaves_fully_faithful(site):
    adj = AdjointString(site)
    assert fully_faithful_check(adj, (0, 1), (0, 1, 2))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_product_preservation_random(seed):
    C = interval_site()
    fam = presheaf_family(C, count=8, max_size=3, seed=seed)
    assert all(preserves_product(X, Y) for X in fam[-3:] for Y in fam[-3:])


# -- Euler reals presheaf and components of X^T --------------------------------

def test_euler_reals_sizes():
    C = interval_site()
    T, pt = pointed_T(C)
    R = euler_reals_presheaf(T, pt)
    assert R.monoid.carrier.sizes() == {"1": 2, "I": 3}
    assert len(pi0(R.monoid.carrier)) == 1
    assert R.monoid.verify() == []


def test_euler_reals_on_retract_site_is_disconnected():
    C = retract_site()
    T, pt = pointed_T(C)
    R = euler_reals_presheaf(T, pt)
    assert len(pi0(R.monoid.carrier)) == 2
    rep = prop1_check(terminal(C), T, pt, R=R)
    assert rep.hypothesis is False and rep.holds is None


@pytest.mark.parametrize("name", ["point", "interval"])
def test_prop1_holds(name):
    C = SITES[name]()
    T, pt = pointed_T(C)
    R = euler_reals_presheaf(T, pt)
    for X in presheaf_family(C, count=15, max_size=3, seed=2):
        assert prop1_check(X, T, pt, R=R).holds is True


def test_t_discrete():
    C = retract_site()
    T, pt = pointed_T(C)
    assert t_discrete_check(constant(C, (0, 1)), T, pt)
    assert not t_discrete_check(representable(C, "c"), T, pt)


# -- units -----------------------------------------------------------------------

def test_surrogate_group_units():
    M = surrogate_group()
    assert M.verify() == []
    rep = units_and_bidirectional(M)
    assert rep.pi0_size == 2 and rep.bidirectional
    assert rep.pi0_is_group and rep.inverses_preserved
    assert rep.U_plus.sizes() == {"1": 1, "c": 2}


def test_constant_bits_have_connected_units():
    rep = units_and_bidirectional(constant_monoid01())
    assert rep.pi0_size == 1 and not rep.bidirectional


# -- A and M by forcing ---------------------------------------------------------

@pytest.mark.parametrize("name", sorted(FINITE_CATALOG))
def test_internal_matches_external(name):
    K = FINITE_CATALOG[name]()
    C = retract_site()
    IR = constant_rig(C, K)
    for P in K.subsets():
        ri = prop2_internal(IR, {c: P for c in C.objects})
        re_ = verify_prop2(K, P)
        assert ri.ok
        assert all(ri.A[c] == re_.A and ri.M[c] == re_.M for c in C.objects)
