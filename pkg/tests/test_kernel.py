"""Kernel tests: sets, categories, functors, coends and ends."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcat.cats import (SET, FinCat, check_category, discrete_cat, parallel_pair,
                          product_cat, sets_fragment, terminal_cat, walking_arrow,
                          z2_cat)
from skewcat.functors import (Family, FunctorRep, ProfunctorRep, check_functor,
                              check_profunctor, hom_functor, hom_profunctor,
                              identity_functor, tabulate_functor)
from skewcat.limits import TwoSided, coend, end, profunctor_two_sided
from skewcat.report import Report
from skewcat.sets import (EMPTY, SINGLETON, FinFn, FinSet, apply_power, finset,
                          power_set, prod_set, quotient)

from oracles import coend_oracle, end_oracle

# ---------------------------------------------------------------------------
# sets


def test_finset_rejects_duplicates():
    with pytest.raises(ValueError):
        finset("bad", ("a", "a"))


def test_finfn_totality_and_membership():
    a, b = finset("A", "xy"), finset("B", "uv")
    with pytest.raises(ValueError):
        FinFn(a, b, ("u",))
    with pytest.raises(ValueError):
        FinFn(a, b, ("u", "w"))
    f = FinFn(a, b, ("u", "u"))
    assert f("x") == "u" and not f.is_bijective()


def test_power_empty_exponent_is_singleton():
    x = finset("X", "abc")
    assert len(power_set(EMPTY, x)) == 1


def test_power_cardinality():
    s, x = finset("S", "pq"), finset("X", "abc")
    p = power_set(s, x)
    assert len(p) == 9
    e = p.elements[5]
    assert apply_power(s, e, "p") == e[0]


@given(st.integers(0, 3), st.integers(0, 3))
def test_power_cardinality_law(m, n):
    s = FinSet("S", tuple(f"s{i}" for i in range(m)))
    x = FinSet("X", tuple(f"x{i}" for i in range(n)))
    expected = n ** m if m else 1
    if expected == 0:
        assert len(power_set(s, x)) == 0
    else:
        assert len(power_set(s, x)) == expected


def test_quotient_reps_are_order_least():
    s = finset("S", "abcd")
    q, proj = quotient(s, [("a", "c"), ("b", "d")])
    assert q.elements == ("a", "b")
    assert proj("c") == "a" and proj("d") == "b"


# ---------------------------------------------------------------------------
# categories


def test_walking_arrow_is_a_category():
    assert check_category(walking_arrow()).ok


def test_z2_is_a_category():
    assert check_category(z2_cat()).ok


def test_redirected_composite_fails_with_one_violation():
    c = parallel_pair()
    comp = dict(c.comp_table)
    comp[("f", "idA")] = "g"
    bad = FinCat("bad", c.objects, c.hom_table, c.id_map, comp)
    rep = check_category(bad)
    assert rep.status == "fail"
    assert len(rep.violations) == 1
    assert rep.violations[0].axiom == "right-identity"


def test_dangling_label_is_structural():
    c = walking_arrow()
    comp = dict(c.comp_table)
    comp[("u", "id0")] = "nope"
    bad = FinCat("bad", c.objects, c.hom_table, c.id_map, comp)
    assert check_category(bad).status == "error"


# ---------------------------------------------------------------------------
# functors


def test_identity_functor_passes():
    c = walking_arrow()
    assert check_functor(tabulate_functor(identity_functor(c))).ok


def test_hom_functor_passes():
    c = walking_arrow()
    f = hom_functor(c, "0")
    assert check_functor(f, Family(tuple(c.objects), tuple(c.arrows()))).ok


def test_object_swap_without_arrow_adjustment_fails():
    c = walking_arrow()
    swap = {"0": "1", "1": "0"}
    f = FunctorRep(c, c, swap, {"id0": "id1", "id1": "id0", "u": "u"})
    rep = check_functor(f)
    assert rep.status == "fail"
    assert any(v.axiom == "arrow-typing" for v in rep.violations)


def test_rule_functor_requires_tests():
    f = hom_functor(walking_arrow(), "0")
    g = FunctorRep(SET, SET, lambda s: s, lambda h: h)
    assert check_functor(g).status == "error"
    assert check_functor(g, Family((EMPTY, SINGLETON),
                                       (FinFn.identity(SINGLETON),))).ok
    del f


def test_profunctor_check():
    c = walking_arrow()
    assert check_profunctor(hom_profunctor(c)).ok


# ---------------------------------------------------------------------------
# coends and ends


def _two_sided(p: ProfunctorRep) -> TwoSided:
    return profunctor_two_sided(p)


def test_coend_collapses_walking_arrow_pair():
    c = walking_arrow()

    def value(m, n):
        return prod_set(c.hom(m, "1"), c.hom("0", n))

    def action(f, g):
        dom = prod_set(c.hom(c.tgt(f), "1"), c.hom("0", c.src(g)))
        cod = prod_set(c.hom(c.src(f), "1"), c.hom("0", c.tgt(g)))
        return FinFn.from_map(dom, cod,
                              lambda p: (c.compose(p[0], f), c.compose(g, p[1])))

    ce = coend(c, TwoSided(value, action))
    assert len(ce.carrier) == 1
    assert ce.classify("0", ("u", "id0")) == ce.classify("1", ("id1", "u"))


def test_coend_over_terminal_is_identity():
    t = terminal_cat()
    s = finset("S", "abc")
    ce = coend(t, TwoSided(lambda m, n: s, lambda f, g: FinFn.identity(s)))
    assert len(ce.carrier) == 3
    inj = ce.inject("*", s)
    assert inj.is_bijective()


def test_coend_z2_regular_swap_collapses():
    z = z2_cat()
    s = finset("R", ("r0", "r1"))
    swap = FinFn(s, s, ("r1", "r0"))

    # one-sided action: the contravariant slot acts by the group, the
    # covariant slot is inert
    def action(f, g):
        return swap if f == "s" else FinFn.identity(s)

    ce = coend(z, TwoSided(lambda m, n: s, action))
    assert len(ce.carrier) == 1


def test_end_walking_arrow_hom_has_identity_family():
    c = walking_arrow()
    en = end(c, _two_sided(hom_profunctor(c)))
    assert en.carrier.elements == (("id0", "id1"),)


def test_end_discrete_is_product():
    d = discrete_cat(("p", "q"))
    s = {"p": finset("Sp", "ab"), "q": finset("Sq", "uvw")}
    en = end(d, TwoSided(lambda m, n: s[m], lambda f, g: FinFn.identity(s[d.src(f)])))
    assert len(en.carrier) == 6


def test_coend_discrete_is_coproduct():
    d = discrete_cat(("p", "q"))
    s = {"p": finset("Sp", "ab"), "q": finset("Sq", "uvw")}
    ce = coend(d, TwoSided(lambda m, n: s[m], lambda f, g: FinFn.identity(s[d.src(f)])))
    assert len(ce.carrier) == 5


def test_end_z2_conjugation_families():
    z = z2_cat()
    en = end(z, _two_sided(hom_profunctor(z)))
    assert sorted(en.carrier.elements) == [("e",), ("s",)]


def _relabel(c: FinCat, tag: str) -> tuple[FinCat, dict, dict]:
    omap = {a: f"{tag}{a}" for a in c.objects}
    amap = {f: (tag, f) for f in c.arrows()}
    hom = {(omap[a], omap[b]): FinSet(f"{tag}h{a}{b}", tuple(amap[f] for f in c.hom(a, b)))
           for a in c.objects for b in c.objects}
    ids = {omap[a]: amap[c.id(a)] for a in c.objects}
    comp = {(amap[g], amap[f]): amap[h] for (g, f), h in c.comp_table.items()}
    return FinCat(f"{tag}{c.label}", tuple(omap[a] for a in c.objects), hom, ids, comp), omap, amap


def test_coend_invariant_under_relabeling():
    c = walking_arrow()
    h = _two_sided(hom_profunctor(c))
    c2, omap, amap = _relabel(c, "R")
    inv_a = {v: k for k, v in amap.items()}
    inv_o = {v: k for k, v in omap.items()}

    def value(m, n):
        return c2.hom(m, n)

    def action(f, g):
        dom, cod = c2.hom(c2.tgt(f), c2.src(g)), c2.hom(c2.src(f), c2.tgt(g))
        return FinFn.from_map(dom, cod, lambda x: amap[
            c.compose(inv_a[g], c.compose(inv_a[x], inv_a[f]))])

    ce1 = coend(c, h)
    ce2 = coend(c2, TwoSided(value, action))
    assert len(ce1.carrier) == len(ce2.carrier)
    # the canonical bijection matches representatives through the relabeling
    assert {(inv_o[o], inv_a[x]) for o, x in ce2.carrier} == set(ce1.carrier)


def test_injections_constant_on_classes():
    c = z2_cat()
    h = _two_sided(hom_profunctor(c))
    ce = coend(c, h)
    inj = ce.inject("*", c.hom("*", "*"))
    for x in c.hom("*", "*"):
        assert inj(x) == ce.classify("*", x)


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_coend_end_bounds_random(seed):
    rng = random.Random(seed)
    from oracles import sample_profunctors
    ((c, h),) = sample_profunctors(rng, 1)
    ce, en = coend(c, h), end(c, h)
    total = sum(len(h.value(o, o)) for o in c.objects)
    prod = 1
    for o in c.objects:
        prod *= len(h.value(o, o))
    assert len(ce.carrier) <= total
    assert len(en.carrier) <= prod


def test_coend_end_match_oracles_on_50_random_profunctors():
    rng = random.Random(20240915)
    from oracles import sample_profunctors
    for c, h in sample_profunctors(rng, 50):
        ce = coend(c, h)
        oracle_classes = coend_oracle(c, h)
        assert len(ce.carrier) == len(oracle_classes)
        grouped = {}
        for o in c.objects:
            for x in h.value(o, o):
                grouped.setdefault(ce.classify(o, x), set()).add((o, x))
        assert sorted(map(frozenset, grouped.values()), key=sorted) == \
               sorted(oracle_classes, key=sorted)
        en = end(c, h)
        assert sorted(en.carrier.elements) == sorted(end_oracle(c, h))


def test_report_rendering_deterministic():
    r = Report("demo")
    r.law("b-axiom", ("x",), "l", "r")
    r.law("a-axiom", ("y",), "l2", "r2")
    t1 = r.format_text()
    assert t1 == r.format_text()
    assert t1.splitlines()[1].startswith("  a-axiom")


def test_product_cat_and_sets_fragment():
    cat, obj_of, arrow_of = sets_fragment([EMPTY, SINGLETON])
    assert check_category(cat).ok
    p = product_cat(cat, cat)
    assert len(p.objects) == 4
    assert check_category_product(p)


def check_category_product(p):
    for a in p.objects:
        i = p.id(a)
        assert p.src(i) == a and p.tgt(i) == a
    return True
