"""Monoidal comonads, the induced monoidal structure and enrichment."""
import pytest

from skewcat.cats import all_fns, default_set_objects
from skewcat.comonadic import (LocallyWeakComonad, MonoidalComonad, NotClosed,
                               check_locally_weak_comonad, check_monoidal_comonad,
                               environment_comonad, environment_lwc, identity_comonad,
                               identity_lwc, induced_internal_hom,
                               induced_skew_enrichment, induced_skew_monoidal,
                               z2_tabulated_comonad, z2_tabulated_lwc)
from skewcat.enrich import check_skew_enrichment, set_self_enrichment
from skewcat.functors import Family
from skewcat.sets import FinSet, power_set, prod_set
from skewcat.skewmon import (check_left_normal, check_skew_monoidal, find_internal_hom,
                             nat_family, set_cartesian_structure, z2_strict_structure)

Z2 = (("e", "s"), "e", {("e", "e"): "e", ("e", "s"): "s",
                        ("s", "e"): "s", ("s", "s"): "e"})
IDEM = (("e", "a"), "e", {("e", "e"): "e", ("e", "a"): "a",
                          ("a", "e"): "a", ("a", "a"): "a"})


def set_family(n=3):
    objs = default_set_objects()[:n]
    return Family(objs, tuple(f for a in objs for b in objs for f in all_fns(a, b)))


def tiny_family():
    objs = (default_set_objects()[0], default_set_objects()[1])
    return Family(objs, tuple(f for a in objs for b in objs for f in all_fns(a, b)))


def test_identity_comonad_passes():
    base = z2_strict_structure()
    assert check_monoidal_comonad(identity_comonad(base)).ok


def test_environment_comonad_passes():
    q = environment_comonad(*Z2)
    rep = check_monoidal_comonad(q, set_family())
    assert rep.ok and rep.sampled


def test_environment_comonad_nonassociative_fails():
    bad_mult = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "e", ("s", "s"): "s"}
    # not a monoid action table: (s.e).s = s but s.(e.s) = e under this table
    q = environment_comonad(("e", "s"), "e", bad_mult)
    rep = check_monoidal_comonad(q, tiny_family())
    assert rep.status == "fail"


def test_z2_tabulated_comonad_passes():
    assert check_monoidal_comonad(z2_tabulated_comonad()).ok


def test_induced_monoidal_identity_is_base_exactly():
    base = z2_strict_structure()
    out = induced_skew_monoidal(identity_comonad(base))
    assert out == base


def test_induced_monoidal_environment_passes_checker():
    q = environment_comonad(*IDEM)
    out = induced_skew_monoidal(q)
    fam = tiny_family()
    assert check_skew_monoidal(out, fam).ok
    # X @' Y = X x (E x Y)
    x, y = fam.objects[1], fam.objects[1]
    assert len(out.ten(x, y)) == len(x) * 2 * len(y)


def test_induced_monoidal_z2_tabulated_passes():
    out = induced_skew_monoidal(z2_tabulated_comonad())
    assert check_skew_monoidal(out).ok


def test_induced_left_normal_fails_when_eps_not_invertible():
    q = environment_comonad(*Z2)
    out = induced_skew_monoidal(q)
    rep = check_left_normal(out, tiny_family())
    assert rep.status == "fail"


def test_induced_internal_hom_environment():
    q = environment_comonad(*Z2)
    s = q.base
    fam = tiny_family()

    def witness(x):
        def hob(y):
            return power_set(x, y)

        def har(g):
            from skewcat.sets import power_fn_post
            return power_fn_post(x, g)

        def ev(y):
            from skewcat.sets import FinFn
            return FinFn.from_map(prod_set(hob(y), x), y, lambda p: p[0][x.index(p[1])])

        def transpose(z, y, g):
            from skewcat.sets import FinFn
            return FinFn.from_map(z, hob(y), lambda c: tuple(g((c, p)) for p in x))

        return find_internal_hom(s, x, fam, candidate=(hob, har, ev, transpose))

    homs, rep = induced_internal_hom(q, witness, fam)
    assert rep.ok
    # [X,Y]' = Y ** (E x X)
    x, y = fam.objects[1], fam.objects[1]
    assert len(homs[x].hom.ob(y)) == len(y) ** (2 * len(x))


def test_induced_internal_hom_not_closed():
    q = z2_tabulated_comonad()
    with pytest.raises(NotClosed):
        induced_internal_hom(q, lambda x: None, Family(("*",), ()))


def test_identity_lwc_passes_and_induces_host():
    e = _z2pt_enrichment()
    w = identity_lwc(e)
    assert check_locally_weak_comonad(w).ok
    out = induced_skew_enrichment(w)
    assert out == e


def _z2pt_enrichment():
    from skewcat.cats import discrete_cat
    from skewcat.enrich import VCategory, enrichment_from_vcategory
    v = z2_strict_structure()
    vc = VCategory(v, ("P",), {("P", "P"): "*"}, {("P", "P", "P"): "s"}, {"P": "s"},
                   "Z2pt")
    return enrichment_from_vcategory(vc, discrete_cat(("P",), "pt"))


def test_z2_tabulated_lwc_passes():
    w = z2_tabulated_lwc()
    assert check_skew_enrichment(w.host).ok
    assert check_locally_weak_comonad(w).ok
    out = induced_skew_enrichment(w)
    assert check_skew_enrichment(out).ok


def test_z2_tabulated_lwc_perturbed_psi_fails_delta_axiom():
    w = z2_tabulated_lwc()
    bad = LocallyWeakComonad(w.q, w.host, w.S, w.delta_s, w.eps_s,
                             nat_family({("P", "P"): "e"}, "psi"), "bad")
    rep = check_locally_weak_comonad(bad)
    assert rep.status == "fail"
    assert any(v.axiom == "psi-delta-compatible" for v in rep.violations)


def test_environment_lwc_passes():
    w = environment_lwc(*Z2)
    fam = _single_family()
    rep = check_locally_weak_comonad(w, fam)
    assert rep.ok and rep.sampled


def _single_family():
    # sizes 0 and 1 keep the iterated homs small while the monoid part stays live
    a, b = FinSet("{}", ()), FinSet("{a}", ("a",))
    b2 = FinSet("{b}", ("b",))
    objs = (a, b, b2)
    return Family(objs, tuple(f for x in objs for y in objs for f in all_fns(x, y)))


def test_environment_lwc_forgetful_psi_fails_multiplicativity():
    from skewcat.sets import apply_power

    # keeps the stored environment but ignores the incoming one; iterated
    # composition then multiplies on the wrong side and drops a factor
    def forgetful(a, e, t, d, x):
        return (e, apply_power(a, t, x))

    w = environment_lwc(*Z2, psi_formula=forgetful)
    rep = check_locally_weak_comonad(w, _single_family())
    assert rep.status == "fail"
    assert any(v.axiom == "psi-multiplicative" for v in rep.violations)


def test_environment_lwc_induced_enrichment_passes():
    w = environment_lwc(*Z2)
    fam = _single_family()
    out = induced_skew_enrichment(w)
    rep = check_skew_enrichment(out, fam)
    assert rep.ok
    # hom'(A,B) = hom(E x A, B)
    a, b = fam.objects[1], fam.objects[2]
    assert out.hom_ob(a, b) == power_set(prod_set(w.q.eset, a), b)
