"""Skew actegories: an action of a skew-monoidal base on a carrier with
directed associativity and unit constraints."""
from __future__ import annotations

import itertools

from .functors import Family, FunctorRep, NatTransRep, check_functor, family_for
from .report import Report
from .skewmon import LEFT, SkewMonoidalStructure, nat_family


class SkewActegory:
    def __init__(self, base: SkewMonoidalStructure, carrier, act: FunctorRep,
                 a, l, name="A*"):
        self.handedness = LEFT
        self.base = base
        self.carrier = carrier
        self.act = act
        self.a = a if isinstance(a, NatTransRep) else nat_family(a, "a")
        self.l = l if isinstance(l, NatTransRep) else nat_family(l, "l")
        self.name = name

    def star(self, x, a):
        return self.act.ob((x, a))

    def stara(self, f, g):
        return self.act.ar((f, g))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SkewActegory):
            return NotImplemented
        return (self.base == other.base and self.act == other.act
                and self.a == other.a and self.l == other.l)

    def __repr__(self):
        return f"SkewActegory({self.name})"


def check_skew_actegory(s: SkewActegory, tests_base: Family | None = None,
                        tests_carrier: Family | None = None) -> Report:
    """Functoriality of the action, naturality of a and l, three axioms."""
    rep = Report(f"actegory {s.name}")
    v, c = s.base, s.carrier
    vc = v.carrier
    if v.handedness != LEFT:
        rep.error("only left skew actegories are supported")
        return rep.finalize()
    vfam = family_for(vc, tests_base, rep)
    afam = family_for(c, tests_carrier, rep)
    if vfam is None or afam is None:
        return rep.finalize()

    pair_objects = tuple(itertools.product(vfam.objects, afam.objects))
    pair_arrows = tuple((f, c.id(a)) for f in vfam.arrows for a in afam.objects) + \
        tuple((vc.id(x), g) for x in vfam.objects for g in afam.arrows)
    rep.merge(check_functor(s.act, Family(pair_objects, pair_arrows), "action"))
    if rep.structural:
        return rep.finalize()

    comp = c.compose
    # naturality of a, axis by axis
    for (fx, fy, ga) in _axes(vc, c, vfam, afam):
        xs, ys, as_ = vc.src(fx), vc.src(fy), c.src(ga)
        xt, yt, at_ = vc.tgt(fx), vc.tgt(fy), c.tgt(ga)
        lhs = comp(s.a.at((xt, yt, at_)), s.stara(v.tena(fx, fy), ga))
        rhs = comp(s.stara(fx, s.stara(fy, ga)), s.a.at((xs, ys, as_)))
        rep.require(lhs == rhs, "naturality:a", (fx, fy, ga), lhs, rhs)
    for ga in afam.arrows:
        lhs = comp(s.l.at(c.tgt(ga)), s.stara(vc.id(v.unit), ga))
        rhs = comp(ga, s.l.at(c.src(ga)))
        rep.require(lhs == rhs, "naturality:l", (ga,), lhs, rhs)

    for x, y, z in itertools.product(vfam.objects, repeat=3):
        for a in afam.objects:
            lhs = comp(s.stara(vc.id(x), s.a.at((y, z, a))),
                       comp(s.a.at((x, v.ten(y, z), a)),
                            s.stara(v.a.at((x, y, z)), c.id(a))))
            rhs = comp(s.a.at((x, y, s.star(z, a))), s.a.at((v.ten(x, y), z, a)))
            rep.require(lhs == rhs, "act-pentagon", (x, y, z, a), lhs, rhs)
    for y in vfam.objects:
        for a in afam.objects:
            lhs = comp(s.l.at(s.star(y, a)), s.a.at((v.unit, y, a)))
            rhs = s.stara(v.l.at(y), c.id(a))
            rep.require(lhs == rhs, "act-left-unit", (y, a), lhs, rhs)
            lhs = comp(s.stara(vc.id(y), s.l.at(a)),
                       comp(s.a.at((y, v.unit, a)), s.stara(v.r.at(y), c.id(a))))
            rep.require(lhs == c.id(s.star(y, a)), "act-unit-triangle", (y, a),
                        lhs, c.id(s.star(y, a)))
    return rep.finalize()


def cartesian_action(v_sizes=(0, 1), a_sizes=(0, 1, 2)):
    """Product action of a cartesian fragment on a larger finite-set fragment.

    The base sizes must be closed under products with themselves and must keep
    products with the carrier sizes inside the carrier.
    """
    from .cats import SIZE_SETS, fn_label, sets_fragment
    from .sets import FinFn, prod_set
    from .skewmon import cartesian_fragment_structure
    base, vobj_of, varrow_of = cartesian_fragment_structure(v_sizes, name="cartV")
    for n in v_sizes:
        for m in a_sizes:
            if n * m not in a_sizes:
                raise ValueError("carrier is not closed under the action")
    carrier, aobj_of, aarrow_of = sets_fragment([SIZE_SETS[n] for n in a_sizes], "cartA")

    def star_label(xl, al):
        return str(len(vobj_of[xl]) * len(aobj_of[al]))

    def pair_iso(xl, al):
        x, a = vobj_of[xl], aobj_of[al]
        target = aobj_of[star_label(xl, al)]
        p = prod_set(x, a)
        return FinFn.from_map(p, target, lambda e: target.elements[p.index(e)])

    ob = {(xl, al): star_label(xl, al)
          for xl in base.carrier.objects for al in carrier.objects}
    ar = {}
    for f in base.carrier.arrows():
        for g in carrier.arrows():
            ff, gf = varrow_of[f], aarrow_of[g]
            iso_d = pair_iso(base.carrier.src(f), carrier.src(g))
            iso_c = pair_iso(base.carrier.tgt(f), carrier.tgt(g))
            fn = iso_d.inverse().then(
                FinFn.from_map(iso_d.dom, iso_c.dom,
                               lambda p: (ff(p[0]), gf(p[1])))).then(iso_c)
            ar[(f, g)] = fn_label(fn.dom, fn.cod, fn.images)
    from .cats import product_cat
    act = FunctorRep(product_cat(base.carrier, carrier), carrier, ob, ar, "x*")

    def vdecode(lbl):
        return vobj_of[lbl]

    def adecode(lbl):
        return aobj_of[lbl]

    def a_at(t):
        x, y, a = t
        xy = base.ten(x, y)
        dset = adecode(ob[(xy, a)])
        cset = adecode(ob[(x, ob[(y, a)])])
        iso_left = pair_iso(xy, a)
        vx, vy = vdecode(x), vdecode(y)
        vxy = vobj_of[xy]
        p_xy = prod_set(vx, vy)
        xy_iso = FinFn.from_map(p_xy, vxy, lambda e: vxy.elements[p_xy.index(e)])
        iso_right, iso_ya = pair_iso(x, ob[(y, a)]), pair_iso(y, a)

        def fn(e):
            pv, av = iso_left.inverse()(e)
            xv, yv = xy_iso.inverse()(pv)
            return iso_right((xv, iso_ya((yv, av))))
        return fn_label(dset, cset, FinFn.from_map(dset, cset, fn).images)

    def l_at(a):
        dom = adecode(ob[("1", a)])
        iso = pair_iso("1", a)
        return fn_label(dom, adecode(a),
                        FinFn.from_map(dom, adecode(a),
                                       lambda e: iso.inverse()(e)[1]).images)

    import itertools as _it
    s = SkewActegory(base, carrier, act,
                     nat_family({t: a_at(t) for t in _it.product(
                         base.carrier.objects, base.carrier.objects,
                         carrier.objects)}, "a"),
                     nat_family({a: l_at(a) for a in carrier.objects}, "l"),
                     name="cart*")
    s.obj_of = {**vobj_of, **aobj_of}
    s.arrow_of = {**varrow_of, **aarrow_of}
    return s


def _axes(vc, c, vfam: Family, afam: Family):
    for fx in vfam.arrows:
        for y, a in itertools.product(vfam.objects, afam.objects):
            yield fx, vc.id(y), c.id(a)
    for fy in vfam.arrows:
        for x, a in itertools.product(vfam.objects, afam.objects):
            yield vc.id(x), fy, c.id(a)
    for ga in afam.arrows:
        for x, y in itertools.product(vfam.objects, repeat=2):
            yield vc.id(x), vc.id(y), ga
