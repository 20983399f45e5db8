"""Skew-monoidal structure checks, reversal, internal homs, comma structure."""
import pytest

from skewcat.cats import SET, default_set_arrows, default_set_objects
from skewcat.functors import Family
from skewcat.sets import EMPTY, SINGLETON, FinFn, FinSet, power_set, prod_set
from skewcat.skewmon import (CommaBoundExceeded, Family as _F, MonoidalFunctorRep,
                             SkewMonoidalStructure, arrow_invertible,
                             cartesian_fragment_structure, check_comma_projections,
                             check_left_normal, check_monoidal_functor,
                             check_skew_monoidal, comma_sV, discrete_monoid_structure,
                             find_internal_hom, identity_monoidal, monoid_set_structure,
                             nat_family, object_k_structure, reverse_handedness,
                             set_cartesian_structure, z2_strict_structure)

Z2_MULT = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}


def small_family(max_size=2):
    objs = default_set_objects()[: (4 if max_size == 2 else 2)]
    return Family(objs, tuple(f for a in objs for b in objs
                              for f in _all_fns(a, b)))


def _all_fns(a, b):
    return [FinFn(a, b, images) for images in power_set(a, b)]


def test_strict_discrete_monoid_structure_passes():
    s = discrete_monoid_structure(("e", "s"), "e", Z2_MULT, "Z2disc")
    assert check_skew_monoidal(s).ok


def test_strict_one_object_z2_passes():
    assert check_skew_monoidal(z2_strict_structure()).ok


def test_cartesian_set_structure_passes_sampled():
    rep = check_skew_monoidal(set_cartesian_structure(), small_family())
    assert rep.ok and rep.sampled


def test_cartesian_fragment_structure_passes():
    s, _, _ = cartesian_fragment_structure((0, 1))
    assert check_skew_monoidal(s).ok


def test_monoid_set_structure_passes_and_not_left_normal():
    s = monoid_set_structure(("e", "a"), "e",
                             {("e", "e"): "e", ("e", "a"): "a",
                              ("a", "e"): "a", ("a", "a"): "a"}, "M2")
    fam = small_family()
    assert check_skew_monoidal(s, fam).ok
    rep = check_left_normal(s, fam)
    assert rep.status == "fail"
    # l: M x 1 x X -> X has |M||X| != |X| for X nonempty
    assert any("left-unit-invertible" == v.axiom for v in rep.violations)


def test_cartesian_left_normal():
    assert check_left_normal(set_cartesian_structure(), small_family()).ok


def test_object_k_singleton_left_normal():
    s = object_k_structure(SINGLETON)
    fam = small_family()
    assert check_skew_monoidal(s, fam).ok
    assert check_left_normal(s, fam).ok


def test_perturbed_unit_triangle_fails():
    base = monoid_set_structure(("e", "a"), "e",
                                {("e", "e"): "e", ("e", "a"): "a",
                                 ("a", "e"): "a", ("a", "a"): "a"}, "M2")

    def bad_r(x):
        cod = base.r.at(x).cod
        return FinFn.from_map(x, cod, lambda e: ("a", e, "*"))

    bad = SkewMonoidalStructure("left", SET, base.tensor, base.unit, base.a,
                                base.l, nat_family(bad_r, "r!"), "M2-bad")
    rep = check_skew_monoidal(bad, small_family(1))
    assert rep.status == "fail"
    assert any(v.axiom == "unit-triangle" for v in rep.violations)


def test_reverse_is_involution_and_right_checker():
    s = monoid_set_structure(("e", "s"), "e", Z2_MULT, "MZ2")
    r = reverse_handedness(s)
    assert r.handedness == "right"
    assert reverse_handedness(r) is s
    rep = check_skew_monoidal(r, small_family(1))
    assert rep.ok


def test_reverse_of_symmetric_cartesian_passes():
    s = set_cartesian_structure()
    r = reverse_handedness(s)
    assert check_skew_monoidal(r, small_family(1)).ok


def test_find_internal_hom_cartesian():
    s = set_cartesian_structure()
    x = FinSet("2", ("x", "y"))
    objs = default_set_objects()
    fam = Family(objs, ())

    def hom_ob(y):
        return power_set(x, y)

    def hom_ar(g):
        from skewcat.sets import power_fn_post
        return power_fn_post(x, g)

    def ev(y):
        return FinFn.from_map(prod_set(hom_ob(y), x), y,
                              lambda p: p[0][x.index(p[1])])

    def transpose(z, y, g):
        return FinFn.from_map(z, hom_ob(y), lambda c: tuple(g((c, p)) for p in x))

    ih = find_internal_hom(s, x, fam, candidate=(hom_ob, hom_ar, ev, transpose))
    assert ih is not None
    y = FinSet("3", ("u", "v", "w"))
    assert len(ih.hom.ob(y)) == len(y) ** 2


def test_find_internal_hom_object_k():
    # [B,C] = C ** Set(K,B), verified through the candidate interface
    k = FinSet("2", ("x", "y"))
    s = object_k_structure(k)
    objs = default_set_objects()[:3]
    fam = Family(objs, ())
    x = objs[1]
    kx = power_set(k, x)

    def hob(y):
        return power_set(kx, y)

    def har(g):
        from skewcat.sets import power_fn_post
        return power_fn_post(kx, g)

    def ev(y):
        # tensor is Set(K, B) x A with A = [x,y]: evaluate the table at the K-map
        return FinFn.from_map(prod_set(kx, hob(y)), y,
                              lambda p: p[1][kx.index(p[0])])

    def transpose(z, y, g):
        return FinFn.from_map(z, hob(y), lambda c: tuple(g((t, c)) for t in kx))

    ih = find_internal_hom(s, x, fam, candidate=(hob, har, ev, transpose))
    assert ih is not None
    for b in objs:
        for c_ in objs:
            assert len(power_set(power_set(k, b), c_)) == \
                   len(c_) ** len(power_set(k, b))


def test_find_internal_hom_absent_for_constant_tensor():
    s, obj_of, arrow_of = cartesian_fragment_structure((0, 1))
    c = s.carrier
    from skewcat.cats import fn_label
    from skewcat.functors import FunctorRep
    one = obj_of["1"]

    def const_ob(p):
        return "1"

    def const_ar(p):
        return fn_label(one, one, one.elements)

    bad_tensor = FunctorRep(s.tensor.dom, c, const_ob, const_ar, "const1")
    bad = SkewMonoidalStructure("left", c, bad_tensor, s.unit, s.a, s.l, s.r, "bad")
    assert find_internal_hom(bad, "1") is None


def test_identity_monoidal_functor_passes():
    s = z2_strict_structure()
    assert check_monoidal_functor(identity_monoidal(s)).ok


def test_comma_sv_terminal_base_is_cartesian_like():
    from skewcat.cats import terminal_cat
    from skewcat.functors import FunctorRep
    from skewcat.cats import product_cat
    t = terminal_cat()
    ob = {("*", "*"): "*"}
    ar = {("id*", "id*"): "id*"}
    tensor = FunctorRep(product_cat(t, t), t, ob, ar, "x")
    v = SkewMonoidalStructure("left", t, tensor, "*",
                              nat_family({("*", "*", "*"): "id*"}, "a"),
                              nat_family({"*": "id*"}, "l"),
                              nat_family({"*": "id*"}, "r"), "1")
    sv = comma_sV(v)
    rep = check_comma_projections(sv)
    assert rep.ok
    # V(I,I) = 1: tensoring two comma objects multiplies the set parts
    o1, o2 = sv.samples.objects[1], sv.samples.objects[1]
    t12 = sv.structure.ten(o1, o2)
    assert len(sv.p1.ob(t12)) == len(o1.eset) * len(o2.eset)
    assert sv.p2.ob(t12) == "*"


def test_comma_sv_z2_base_passes_checker():
    v = z2_strict_structure()
    sv = comma_sV(v)
    rep = check_comma_projections(sv)
    assert rep.ok
    for o in sv.samples.objects:
        assert sv.p2.ob(o) == o.vobj


def test_comma_bound_exceeded():
    v = z2_strict_structure()
    sv = comma_sV(v, bound=1)
    big = FinSet("{pq}", ("p", "q"))
    with pytest.raises(CommaBoundExceeded):
        sv.comma.obj(big, FinFn.from_map(big, sv.comma.points("*"), lambda e: "e"), "*")


def test_arrow_invertible_dispatch():
    f = FinFn(SINGLETON, SINGLETON, ("*",))
    assert arrow_invertible(SET, f)
    g = FinFn(FinSet("2", ("x", "y")), SINGLETON, ("*", "*"))
    assert not arrow_invertible(SET, g)
