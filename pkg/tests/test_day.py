"""Day convolution structures, action, and the convolution enrichment."""
import itertools

import pytest

from skewcat.cats import parallel_pair, terminal_cat, walking_arrow, z2_cat, idem2_cat
from skewcat.day import convolution_enrichment, day_convolution_action, \
    day_convolution_monoidal
from skewcat.enrich import check_normal, check_skew_enrichment, strict_to_weak
from skewcat.functors import Family, FunctorRep, NatTransRep, presheaf_from_sets
from skewcat.proact import category_to_promonoidal, presheaf_to_proaction
from skewcat.actegory import check_skew_actegory
from skewcat.sets import EMPTY, FinFn, FinSet, finset, prod_set
from skewcat.skewmon import check_left_normal, check_skew_monoidal


def _sets(*sizes):
    alphabet = "xy"
    return [FinSet("{" + alphabet[:n] + "}", tuple(alphabet[:n])) for n in sizes]


def presheaf_family(v, sizes=(0, 1, 2)):
    """Presheaves on a discrete one-object carrier are plain finite sets."""
    objs = []
    for n, s in zip(sizes, _sets(*sizes)):
        objs.append(presheaf_from_sets(v, {i: s for i in v.objects}, name=f"X{n}"))
    arrows = []
    for f in objs:
        for g in objs:
            for images in itertools.product(g.ob(v.objects[0]).elements,
                                            repeat=len(f.ob(v.objects[0]))):
                comp = {i: FinFn(f.ob(i), g.ob(i), images) for i in v.objects}
                arrows.append(NatTransRep(f, g, comp, "h"))
    return Family(tuple(objs), tuple(arrows))


@pytest.fixture(scope="module")
def day_idem2():
    p = category_to_promonoidal(idem2_cat())
    return p, day_convolution_monoidal(p)


def test_day_tensor_matches_monoid_formula(day_idem2):
    p, s = day_idem2
    v = p.carrier
    fam = presheaf_family(v, (0, 1, 2))
    m = finset("M", ("e", "a"))
    for x in fam.objects:
        for y in fam.objects:
            txy = s.ten(x, y)
            got = txy.ob("*")
            want = prod_set(m, x.ob("*"), y.ob("*"))
            assert len(got) == len(want)
            # classes of a coend over a discrete base are exactly the summands;
            # the monoid element is the P-component of each class
            decode = {r: r[1] for r in got}
            assert sorted(decode.values()) == sorted(want.elements)


def test_day_tensor_bijection_is_natural(day_idem2):
    p, s = day_idem2
    fam = presheaf_family(p.carrier, (1, 2))
    x, y = fam.objects
    for phi in fam.arrows:
        if phi.dom != x or phi.cod != y:
            continue
        t_ar = s.tena(phi, phi)
        for r in s.ten(x, x).ob("*"):
            (i, j), (u, xe, ye) = r
            image = t_ar.at("*")(r)
            assert image[1] == (u, phi.at("*")(xe), phi.at("*")(ye))


def test_day_structure_passes_five_axioms(day_idem2):
    p, s = day_idem2
    fam = presheaf_family(p.carrier, (0, 1, 2))
    rep = check_skew_monoidal(s, fam)
    assert rep.ok and rep.sampled


def test_day_unit_is_constant_singleton(day_idem2):
    p, s = day_idem2
    assert all(len(s.unit.ob(i)) == 1 for i in p.carrier.objects)


def test_day_left_normality_fails_for_two_element_monoid(day_idem2):
    p, s = day_idem2
    fam = presheaf_family(p.carrier, (1, 2))
    rep = check_left_normal(s, fam)
    assert rep.status == "fail"


def test_day_walking_arrow_formula():
    # (X@Y)_0 = X_0 x Y_0 and (X@Y)_1 = (X_0 + X_1) x Y_1
    p = category_to_promonoidal(walking_arrow())
    s = day_convolution_monoidal(p)
    v = p.carrier
    x = presheaf_from_sets(v, {"0": finset("X0", "ab"), "1": finset("X1", "c")}, "X")
    y = presheaf_from_sets(v, {"0": finset("Y0", "u"), "1": finset("Y1", "vw")}, "Y")
    txy = s.ten(x, y)
    assert len(txy.ob("0")) == 2 * 1
    assert len(txy.ob("1")) == (2 + 1) * 2


def test_day_action_of_regular_torsor():
    c = z2_cat()
    r = finset("R", ("r0", "r1"))
    swap = FinFn(r, r, ("r1", "r0"))
    f = FunctorRep(c, None, {"*": r}, {"e": FinFn.identity(r), "s": swap}, "reg")
    t = presheaf_to_proaction(c, f)
    act = day_convolution_action(t)
    vfam = presheaf_family(t.base.carrier, (0, 1, 2))
    afam = presheaf_family(t.carrier, (0, 1, 2))
    rep = check_skew_actegory(act, vfam, afam)
    assert rep.ok
    # brute-force cardinality of the mixed coend: sum_i F_i x M_i x F_*
    m, g = vfam.objects[2], afam.objects[1]
    star = act.star(m, g)
    assert len(star.ob("*")) == len(r) * len(m.ob("*")) * len(g.ob("*"))


def test_day_action_empty_presheaf_is_empty():
    c = z2_cat()
    r = finset("R", ("r0", "r1"))
    swap = FinFn(r, r, ("r1", "r0"))
    f = FunctorRep(c, None, {"*": r}, {"e": FinFn.identity(r), "s": swap}, "reg")
    t = presheaf_to_proaction(c, f)
    act = day_convolution_action(t)
    vfam = presheaf_family(t.base.carrier, (2,))
    empty = presheaf_from_sets(t.carrier, {"*": EMPTY}, "E0")
    assert len(act.star(vfam.objects[0], empty).ob("*")) == 0


def test_day_representable_weight_recovers_action_table():
    # M = V(i,-) on a discrete carrier is the one-point presheaf at i; the
    # coend Yoneda collapse leaves T(i, A; -)-many classes
    c = z2_cat()
    r = finset("R", ("r0", "r1"))
    swap = FinFn(r, r, ("r1", "r0"))
    f = FunctorRep(c, None, {"*": r}, {"e": FinFn.identity(r), "s": swap}, "reg")
    t = presheaf_to_proaction(c, f)
    act = day_convolution_action(t)
    v = t.base.carrier
    rep_i = presheaf_from_sets(v, {"*": finset("pt", "p")}, "V(i,-)")
    g = presheaf_from_sets(t.carrier, {"*": finset("G", "g")}, "G")
    star = act.star(rep_i, g)
    assert len(star.ob("*")) == len(t.tvalue("*", "*", "*"))


# ---------------------------------------------------------------------------
# convolution enrichment


@pytest.fixture(scope="module")
def conv_enrichment():
    c = z2_cat()
    r = finset("R", ("r0", "r1"))
    swap = FinFn(r, r, ("r1", "r0"))
    f = FunctorRep(c, None, {"*": r}, {"e": FinFn.identity(r), "s": swap}, "reg")
    t = presheaf_to_proaction(c, f)
    return t, convolution_enrichment(t, parallel_pair())


def test_convolution_enrichment_matches_power_formula(conv_enrichment):
    t, e = conv_enrichment
    host = parallel_pair()
    for fl in e.carrier.objects:
        for gl in e.carrier.objects:
            a = e.fun_of[fl].ob("*")
            b = e.fun_of[gl].ob("*")
            hom = e.hom_ob(fl, gl)
            expected = len(host.hom(a, b)) ** len(t.tvalue("*", "*", "*"))
            assert len(hom.ob("*")) == expected


def test_convolution_enrichment_passes(conv_enrichment):
    _, e = conv_enrichment
    rep = check_skew_enrichment(e)
    assert rep.ok


def test_convolution_enrichment_not_normal(conv_enrichment):
    t, e = conv_enrichment
    # strict morphisms: host arrows; weak morphisms: squared families
    pairs = [(a, b) for a in e.carrier.objects for b in e.carrier.objects]
    some_gap = False
    for a, b in pairs:
        stw = strict_to_weak(e, a, b)
        if len(stw.cod) > len(stw.dom):
            some_gap = True
    assert some_gap
    rep = check_normal(e)
    assert rep.status == "fail"


def test_convolution_composition_formula(conv_enrichment):
    # composition follows (u, g, f) -> (g at (Fu)x compose f at x)
    t, e = conv_enrichment
    host = parallel_pair()
    day = e.base.day
    la = next(l for l in e.carrier.objects if e.fun_of[l].ob("*") == "A")
    lb = next(l for l in e.carrier.objects if e.fun_of[l].ob("*") == "B")
    m = e.M.at((la, la, lb))
    dce = day.coend_at(e.hom_ob(la, lb), e.hom_ob(la, la), "*")
    rset = t.tvalue("*", "*", "*")

    def acted_by(u, tv):
        # alpha sends (t, u) to ((Fu)t, t); F(s) is the swap on {r0, r1}
        if u == "e":
            return tv
        return "r1" if tv == "r0" else "r0"

    for rep_ in dce.carrier:
        (i, j), (u, gfam, ffam) = rep_
        out = m.at("*")(rep_)
        for idx, tv in enumerate(rset.elements):
            gval = gfam[0][rset.index(acted_by(u, tv))]
            fval = ffam[0][idx]
            assert out[0][idx] == host.compose(gval, fval)
