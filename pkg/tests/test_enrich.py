"""Enrichment checks, normality, the comparison correspondence, change of base."""
import pytest

from skewcat.cats import SET, discrete_cat, default_set_objects
from skewcat.enrich import (NotLeftNormal, SVCategory, SkewEnrichment, VCategory,
                            VFunctorRep, VNatRep, change_of_base,
                            change_of_base_vcategory, check_normal, check_sv_category,
                            check_skew_enrichment, check_strict_to_weak_injective,
                            check_v_category, check_v_functor, check_v_nat,
                            closed_self_enrichment, comma_right_adjoint,
                            enrichment_from_vcategory, from_sv_category,
                            identity_v_functor, normalize_unit_component, p2_monoidal,
                            set_self_enrichment, strict_to_weak,
                            sv_category_to_comma_vcategory, to_sv_category,
                            weak_morphism_vcategory)
from skewcat.functors import Family
from skewcat.sets import FinFn, FinSet, power_set
from skewcat.skewmon import (cartesian_fragment_structure, check_left_normal,
                             check_skew_monoidal, comma_sV, check_monoidal_functor,
                             compose_monoidal, identity_monoidal,
                             set_cartesian_structure, z2_strict_structure)


@pytest.fixture(scope="module")
def z2_enrichment():
    """Discrete one-point carrier enriched over one-object Z/2; M = j = s."""
    v = z2_strict_structure()
    carrier = discrete_cat(("P",), "pt")
    vc = VCategory(v, ("P",), {("P", "P"): "*"}, {("P", "P", "P"): "s"}, {"P": "s"},
                   "Z2pt")
    return enrichment_from_vcategory(vc, carrier)


@pytest.fixture(scope="module")
def fragment_enrichment():
    s, _, _ = cartesian_fragment_structure((0, 1))
    return closed_self_enrichment(s)


def small_family():
    objs = default_set_objects()[:3]
    from skewcat.cats import all_fns
    return Family(objs, tuple(f for a in objs for b in objs for f in all_fns(a, b)))


def test_discrete_carrier_enrichment_is_vcategory(z2_enrichment):
    assert check_skew_enrichment(z2_enrichment).ok
    vc = weak_morphism_vcategory(z2_enrichment)
    assert check_v_category(vc).ok


def test_vcategory_lawcheck_catches_bad_unit():
    v = z2_strict_structure()
    vc = VCategory(v, ("P",), {("P", "P"): "*"}, {("P", "P", "P"): "s"}, {"P": "e"},
                   "bad")
    rep = check_v_category(vc)
    assert rep.status == "fail"
    assert any(x.axiom == "left-unit" for x in rep.violations)


def test_cartesian_fragment_self_enrichment(fragment_enrichment):
    assert check_skew_enrichment(fragment_enrichment).ok
    assert check_normal(fragment_enrichment).ok
    assert check_strict_to_weak_injective(fragment_enrichment).ok


def test_set_self_enrichment_sampled():
    e = set_self_enrichment(set_cartesian_structure())
    rep = check_skew_enrichment(e, small_family())
    assert rep.ok and rep.sampled
    # strict-to-weak is a bijection on sampled pairs: the base is left normal
    objs = small_family().objects
    for a in objs:
        for b in objs:
            assert strict_to_weak(e, a, b).is_bijective()


def test_strict_to_weak_identity_lands_on_unit(z2_enrichment):
    e = z2_enrichment
    stw = strict_to_weak(e, "P", "P")
    assert stw(e.carrier.id("P")) == e.j.at("P")


def test_z2_enrichment_not_normal(z2_enrichment):
    rep = check_normal(z2_enrichment)
    assert rep.status == "fail"
    # one strict morphism against two weak ones
    assert "1 strict" in rep.violations[0].lhs
    assert "2 weak" in rep.violations[0].rhs


def test_sv_roundtrip_field_exact(z2_enrichment, fragment_enrichment):
    for e in (z2_enrichment, fragment_enrichment):
        s = to_sv_category(e)
        assert check_sv_category(s).ok
        back = from_sv_category(s, e.base)
        assert back == e
        again = to_sv_category(back)
        assert again.omega == s.omega
        assert again.enriched.hom == s.enriched.hom
        assert again.enriched.M == s.enriched.M
        assert again.enriched.j == s.enriched.j


def test_corrupted_omega_fails_identity_law(z2_enrichment):
    s = to_sv_category(z2_enrichment)
    om = dict(s.omega)
    good = om[("P", "P")]
    om[("P", "P")] = FinFn(good.dom, good.cod, ("e",))
    bad = SVCategory(s.carrier, s.enriched, om, "bad")
    rep = check_sv_category(bad)
    assert rep.status == "fail"
    assert any(v.axiom == "omega-identity" for v in rep.violations)


def test_from_sv_rejects_non_left_normal_base():
    # a base whose left unit constraint collapses two points: l at "2" not invertible
    from skewcat.skewmon import monoid_set_structure, SkewMonoidalStructure
    from skewcat.cats import discrete_cat
    m2 = monoid_set_structure(("e", "a"), "e",
                              {("e", "e"): "e", ("e", "a"): "a",
                               ("a", "e"): "a", ("a", "a"): "a"}, "M2")
    carrier = discrete_cat(("P",), "pt")
    x = FinSet("W", ("w",))
    hom = {("P", "P"): x}
    j = {"P": FinFn.from_map(m2.unit, m2.ten(m2.unit, x) if False else x,
                             lambda _: "w")}
    M = {("P", "P", "P"): FinFn.from_map(m2.ten(x, x), x, lambda _: "w")}
    vc = VCategory(m2, ("P",), hom, M, j, "w")
    e = enrichment_from_vcategory(vc, carrier)
    s = to_sv_category(e)
    with pytest.raises(NotLeftNormal) as exc:
        from_sv_category(s, m2)
    assert exc.value.obj == x


def test_normalize_unit_agrees_with_check_normal(z2_enrichment, fragment_enrichment):
    for e in (z2_enrichment, fragment_enrichment):
        s = to_sv_category(e)
        assert normalize_unit_component(s).ok == check_normal(e).ok


def test_identity_change_of_base(z2_enrichment):
    e = z2_enrichment
    out = change_of_base(identity_monoidal(e.base), e)
    assert out == e


def test_change_of_base_functoriality(z2_enrichment):
    e = z2_enrichment
    idm = identity_monoidal(e.base)
    both = change_of_base(compose_monoidal(idm, idm), e)
    seq = change_of_base(idm, change_of_base(idm, e))
    assert both == seq


def test_comma_adjunction_counit_identity(z2_enrichment):
    e = z2_enrichment
    v = e.base
    sv = comma_sV(v)
    R = comma_right_adjoint(sv)
    P2 = p2_monoidal(sv)
    assert check_monoidal_functor(R).ok
    rep = check_monoidal_functor(P2, sv.samples)
    assert rep.ok
    lifted = change_of_base(R, e)
    assert check_skew_enrichment(lifted).ok
    back = change_of_base(P2, lifted)
    assert back == e


def test_p2_recovers_weak_morphism_data(z2_enrichment):
    e = z2_enrichment
    sv = comma_sV(e.base)
    s = to_sv_category(e)
    comma_vc = sv_category_to_comma_vcategory(s, sv)
    assert check_v_category(comma_vc).ok
    recovered = change_of_base_vcategory(p2_monoidal(sv), comma_vc)
    weak = s.enriched
    assert recovered.hom == weak.hom
    assert recovered.M == weak.M
    assert recovered.j == weak.j


def test_identity_v_functor_and_nat(z2_enrichment):
    vf = identity_v_functor(z2_enrichment)
    assert check_v_functor(vf).ok
    vn = VNatRep(vf, vf, lambda a: z2_enrichment.carrier.id(a))
    assert check_v_nat(vn).ok


def test_constant_fbar_fails_composition(z2_enrichment):
    e = z2_enrichment
    from skewcat.functors import identity_functor
    vf = VFunctorRep(e, e, identity_functor(e.carrier), lambda ab: "s", "bad")
    rep = check_v_functor(vf)
    assert rep.status == "fail"
    assert any(v.axiom == "preserves-composition" for v in rep.violations)


def test_weak_morphism_vcategory_roundtrip_discrete(z2_enrichment):
    vc = weak_morphism_vcategory(z2_enrichment)
    again = enrichment_from_vcategory(vc, z2_enrichment.carrier)
    assert again == z2_enrichment
