"""Skew enrichments of a category over a skew-monoidal base.

An enrichment keeps the carrier category, a hom functor valued in the base,
a composition family M: hom(B,C) @ hom(A,B) -> hom(A,C) and a unit family
j: I -> hom(A,A). Hom elements need not biject with carrier morphisms; the
strict-to-weak comparison and the normality test quantify that gap. The
plain (non-natural) variant of the same data is VCategory; SVCategory packs
a VCategory together with the carrier and the comparison family.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cats import product_cat
from .functors import (Family, FunctorRep, NatTransRep, check_functor, family_for,
                       tabulate_functor)
from .report import Report, render
from .sets import FinFn, FinSet, power_set, prod_set, apply_power, SINGLETON
from .skewmon import (LEFT, CommaArrow, MonoidalFunctorRep, SkewMonoidalStructure,
                      SVStructure, arrow_invertible, nat_family)


class SkewEnrichment:
    def __init__(self, base: SkewMonoidalStructure, carrier, hom: FunctorRep,
                 M, j, name="A"):
        self.base = base
        self.carrier = carrier
        self.hom = hom
        self.M = M if isinstance(M, NatTransRep) else nat_family(M, "M")
        self.j = j if isinstance(j, NatTransRep) else nat_family(j, "j")
        self.name = name

    def hom_ob(self, a, b):
        return self.hom.ob((a, b))

    def hom_ar(self, f, g):
        """Action on a pair (f contravariant, g covariant)."""
        return self.hom.ar((f, g))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SkewEnrichment):
            return NotImplemented
        return (self.base == other.base and self.hom == other.hom
                and self.M == other.M and self.j == other.j)

    def __repr__(self):
        return f"SkewEnrichment({self.name} over {self.base.name})"


@dataclass
class VCategory:
    base: SkewMonoidalStructure
    objects: tuple
    hom: dict       # (A, B) -> base object
    M: dict         # (A, B, C) -> base arrow hom(B,C) @ hom(A,B) -> hom(A,C)
    j: dict         # A -> base arrow I -> hom(A,A)
    name: str = "VCat"


@dataclass
class SVCategory:
    carrier: object            # a finite category value
    enriched: VCategory
    omega: dict                # (A, B) -> FinFn carrier-hom -> V(I, hom(A,B))
    name: str = "SVCat"


def check_skew_enrichment(e: SkewEnrichment, tests: Family | None = None) -> Report:
    """Naturality of hom, M, j plus the three composition/unit axioms."""
    rep = Report(f"enrichment {e.name}")
    v, c = e.base, e.carrier
    vc = v.carrier
    fam = family_for(c, tests, rep)
    if fam is None:
        return rep.finalize()
    if v.handedness != LEFT:
        rep.error("enrichment requires a left skew-monoidal base")
        return rep.finalize()

    # shape of M and j on the first instance
    for a, b, cc_ in itertools.islice(itertools.product(fam.objects, repeat=3), 1):
        m = e.M.at((a, b, cc_))
        want = (v.ten(e.hom_ob(b, cc_), e.hom_ob(a, b)), e.hom_ob(a, cc_))
        if (vc.src(m), vc.tgt(m)) != want:
            rep.error(f"M at {render((a, b, cc_))} is not typed "
                      f"hom(B,C)@hom(A,B) -> hom(A,C)")
            return rep.finalize()
        ja = e.j.at(a)
        if (vc.src(ja), vc.tgt(ja)) != (v.unit, e.hom_ob(a, a)):
            rep.error(f"j at {render(a)} is not typed I -> hom(A,A)")
            return rep.finalize()

    pair_objects = tuple(itertools.product(fam.objects, repeat=2))
    pair_arrows = tuple((f, c.id(x)) for f in fam.arrows for x in fam.objects) + \
        tuple((c.id(x), f) for f in fam.arrows for x in fam.objects)
    rep.merge(check_functor(e.hom, Family(pair_objects, pair_arrows), "hom functor"))

    comp, ten, tena = vc.compose, v.ten, v.tena

    def vid(x):
        return vc.id(x)

    for u in fam.arrows:
        bs, bt = c.src(u), c.tgt(u)
        for a, d in itertools.product(fam.objects, repeat=2):
            lhs = comp(e.M.at((a, bs, d)), tena(e.hom_ar(u, c.id(d)), vid(e.hom_ob(a, bs))))
            rhs = comp(e.M.at((a, bt, d)), tena(vid(e.hom_ob(bt, d)), e.hom_ar(c.id(a), u)))
            rep.require(lhs == rhs, "M-dinatural-middle", (u, a, d), lhs, rhs)
        for b, d in itertools.product(fam.objects, repeat=2):
            lhs = comp(e.hom_ar(u, c.id(d)), e.M.at((bt, b, d)))
            rhs = comp(e.M.at((bs, b, d)), tena(vid(e.hom_ob(b, d)), e.hom_ar(u, c.id(b))))
            rep.require(lhs == rhs, "M-natural-source", (u, b, d), lhs, rhs)
            lhs = comp(e.hom_ar(c.id(d), u), e.M.at((d, b, bs)))
            rhs = comp(e.M.at((d, b, bt)), tena(e.hom_ar(c.id(b), u), vid(e.hom_ob(d, b))))
            rep.require(lhs == rhs, "M-natural-target", (u, b, d), lhs, rhs)
        lhs = comp(e.hom_ar(c.id(bs), u), e.j.at(bs))
        rhs = comp(e.hom_ar(u, c.id(bt)), e.j.at(bt))
        rep.require(lhs == rhs, "j-dinatural", (u,), lhs, rhs)

    for a, b, x, d in itertools.product(fam.objects, repeat=4):
        lhs = comp(e.M.at((a, b, d)), tena(e.M.at((b, x, d)), vid(e.hom_ob(a, b))))
        rhs = comp(e.M.at((a, x, d)),
                   comp(tena(vid(e.hom_ob(x, d)), e.M.at((a, b, x))),
                        v.a.at((e.hom_ob(x, d), e.hom_ob(b, x), e.hom_ob(a, b)))))
        rep.require(lhs == rhs, "composition-assoc", (a, b, x, d), lhs, rhs)
    for a, b in itertools.product(fam.objects, repeat=2):
        hab = e.hom_ob(a, b)
        lhs = comp(e.M.at((a, b, b)), tena(e.j.at(b), vid(hab)))
        rep.require(lhs == v.l.at(hab), "left-unit", (a, b), lhs, v.l.at(hab))
        lhs = comp(e.M.at((a, a, b)), comp(tena(vid(hab), e.j.at(a)), v.r.at(hab)))
        rep.require(lhs == vid(hab), "right-unit", (a, b), lhs, vid(hab))
    return rep.finalize()


def strict_to_weak(e: SkewEnrichment, a, b) -> FinFn:
    """Tabulated comparison carrier(A,B) -> V(I, hom(A,B)), f -> hom(A,f) . j."""
    c, v = e.carrier, e.base
    dom = c.hom(a, b)
    cod = v.carrier.hom(v.unit, e.hom_ob(a, b))
    return FinFn.from_map(dom, cod,
                          lambda f: v.carrier.compose(e.hom_ar(c.id(a), f), e.j.at(a)))


def check_normal(e: SkewEnrichment) -> Report:
    rep = Report(f"normal {e.name}")
    if not e.carrier.is_finite:
        rep.error("normality is decided on tabulated carriers only")
        return rep.finalize()
    for a, b in itertools.product(e.carrier.objects, repeat=2):
        stw = strict_to_weak(e, a, b)
        rep.require(stw.is_bijective(), "strict-to-weak-bijective", (a, b),
                    f"{len(stw.dom)} strict", f"{len(stw.cod)} weak")
    return rep.finalize()


def check_strict_to_weak_injective(e: SkewEnrichment) -> Report:
    """The injectivity predicate carving out F-category-like enrichments."""
    rep = Report(f"strict-to-weak injective {e.name}")
    for a, b in itertools.product(e.carrier.objects, repeat=2):
        stw = strict_to_weak(e, a, b)
        rep.require(len(set(stw.images)) == len(stw.dom), "strict-to-weak-injective",
                    (a, b), "images collide", "injective")
    return rep.finalize()


def check_v_category(vc: VCategory) -> Report:
    """The three object-indexed laws, with no naturality requirements."""
    rep = Report(f"v-category {vc.name}")
    v = vc.base
    comp, ten, tena, vid = v.carrier.compose, v.ten, v.tena, v.carrier.id
    for a, b, x, d in itertools.product(vc.objects, repeat=4):
        lhs = comp(vc.M[(a, b, d)], tena(vc.M[(b, x, d)], vid(vc.hom[(a, b)])))
        rhs = comp(vc.M[(a, x, d)],
                   comp(tena(vid(vc.hom[(x, d)]), vc.M[(a, b, x)]),
                        v.a.at((vc.hom[(x, d)], vc.hom[(b, x)], vc.hom[(a, b)]))))
        rep.require(lhs == rhs, "composition-assoc", (a, b, x, d), lhs, rhs)
    for a, b in itertools.product(vc.objects, repeat=2):
        hab = vc.hom[(a, b)]
        lhs = comp(vc.M[(a, b, b)], tena(vc.j[b], vid(hab)))
        rep.require(lhs == v.l.at(hab), "left-unit", (a, b), lhs, v.l.at(hab))
        lhs = comp(vc.M[(a, a, b)], comp(tena(vid(hab), vc.j[a]), v.r.at(hab)))
        rep.require(lhs == vid(hab), "right-unit", (a, b), lhs, vid(hab))
    return rep.finalize()


def weak_morphism_vcategory(e: SkewEnrichment) -> VCategory:
    """Forget the carrier morphisms and all naturality; keep objects and data."""
    objs = tuple(e.carrier.objects)
    return VCategory(e.base, objs,
                     {(a, b): e.hom_ob(a, b) for a in objs for b in objs},
                     {(a, b, c): e.M.at((a, b, c))
                      for a in objs for b in objs for c in objs},
                     {a: e.j.at(a) for a in objs}, name=f"weak({e.name})")


def check_sv_category(s: SVCategory) -> Report:
    """omega(1) = j and omega(gf) = M . (omega g @ omega f) . r, plus the
    enriched data's own laws."""
    rep = Report(f"sv-category {s.name}")
    rep.merge(check_v_category(s.enriched))
    c, v = s.carrier, s.enriched.base
    comp, tena = v.carrier.compose, v.tena
    for a in c.objects:
        got = s.omega[(a, a)](c.id(a))
        rep.require(got == s.enriched.j[a], "omega-identity", (a,), got, s.enriched.j[a])
    for f in c.arrows():
        for g in c.arrows():
            if c.src(g) != c.tgt(f):
                continue
            a, b, d = c.src(f), c.tgt(f), c.tgt(g)
            lhs = s.omega[(a, d)](c.compose(g, f))
            rhs = comp(s.enriched.M[(a, b, d)],
                       comp(tena(s.omega[(b, d)](g), s.omega[(a, b)](f)),
                            v.r.at(v.unit)))
            rep.require(lhs == rhs, "omega-composite", (g, f), lhs, rhs)
    return rep.finalize()


def to_sv_category(e: SkewEnrichment) -> SVCategory:
    objs = tuple(e.carrier.objects)
    omega = {(a, b): strict_to_weak(e, a, b) for a in objs for b in objs}
    return SVCategory(e.carrier, weak_morphism_vcategory(e), omega, name=f"sv({e.name})")


class NotLeftNormal(Exception):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"left unit constraint not invertible at {render(obj)}")


def _left_unit_inverse(v: SkewMonoidalStructure, x, cache: dict):
    if x in cache:
        return cache[x]
    arr = v.l.at(x)
    c = v.carrier
    if isinstance(arr, FinFn):
        if not arr.is_bijective():
            raise NotLeftNormal(x)
        inv = arr.inverse()
    else:
        inv = None
        for g in c.hom(x, v.ten(v.unit, x)):
            if c.compose(g, arr) == c.id(c.src(arr)) and c.compose(arr, g) == c.id(x):
                inv = g
                break
        if inv is None:
            raise NotLeftNormal(x)
    cache[x] = inv
    return inv


def from_sv_category(s: SVCategory, base: SkewMonoidalStructure) -> SkewEnrichment:
    """Rebuild hom functoriality from omega over a left-normal base.

    Raises NotLeftNormal naming the obstructing object when some needed left
    unit constraint has no inverse.
    """
    c, v = s.carrier, base
    vc = v.carrier
    linv: dict = {}
    en = s.enriched

    def hom_post(a, g):  # hom(A, g) for g: B -> B'
        b, b2 = c.src(g), c.tgt(g)
        hab = en.hom[(a, b)]
        return vc.compose(en.M[(a, b, b2)],
                          vc.compose(v.tena(s.omega[(b, b2)](g), vc.id(hab)),
                                     _left_unit_inverse(v, hab, linv)))

    def hom_pre(f, d):  # hom(f, D) for f: A' -> A
        a2, a = c.src(f), c.tgt(f)
        had = en.hom[(a, d)]
        return vc.compose(en.M[(a2, a, d)],
                          vc.compose(v.tena(vc.id(had), s.omega[(a2, a)](f)),
                                     v.r.at(had)))

    ob = {(a, b): en.hom[(a, b)] for a in c.objects for b in c.objects}
    ar = {}
    for f in c.arrows():
        for g in c.arrows():
            ar[(f, g)] = vc.compose(hom_post(c.src(f), g), hom_pre(f, c.src(g)))
    from .cats import op_cat
    hom = FunctorRep(product_cat(op_cat(c), c), vc, ob, ar, "hom")
    return SkewEnrichment(v, c, hom, dict(en.M), dict(en.j), name=f"env({s.name})")


def normalize_unit_component(s: SVCategory) -> Report:
    """The comparison-to-points unit is invertible iff every omega is a bijection."""
    rep = Report(f"normalization unit {s.name}")
    for (a, b), om in sorted(s.omega.items(), key=lambda kv: render(kv[0])):
        rep.require(om.is_bijective(), "omega-bijective", (a, b),
                    f"{len(om.dom)} strict", f"{len(om.cod)} weak")
    return rep.finalize()


# ---------------------------------------------------------------------------
# V-functors and V-natural transformations


class VFunctorRep:
    def __init__(self, dom_e: SkewEnrichment, cod_e: SkewEnrichment,
                 functor: FunctorRep, fbar, name="F"):
        self.dom_e, self.cod_e = dom_e, cod_e
        self.functor = functor
        self.fbar = fbar if isinstance(fbar, NatTransRep) else nat_family(fbar, "Fbar")
        self.name = name


class VNatRep:
    def __init__(self, dom_f: VFunctorRep, cod_f: VFunctorRep, theta, name="theta"):
        self.dom_f, self.cod_f = dom_f, cod_f
        self.theta = theta if isinstance(theta, NatTransRep) else nat_family(theta, "th")
        self.name = name


def check_v_functor(vf: VFunctorRep, tests: Family | None = None) -> Report:
    rep = Report(f"v-functor {vf.name}")
    ea, eb = vf.dom_e, vf.cod_e
    if ea.base is not eb.base and ea.base != eb.base:
        rep.error("enrichments live over different bases")
        return rep.finalize()
    v = ea.base
    c = ea.carrier
    fam = family_for(c, tests, rep)
    if fam is None:
        return rep.finalize()
    F = vf.functor
    rep.merge(check_functor(F, fam, "underlying functor"))
    comp, tena = v.carrier.compose, v.tena
    for a, b in itertools.product(fam.objects, repeat=2):
        fb = vf.fbar.at((a, b))
        want = (ea.hom_ob(a, b), eb.hom_ob(F.ob(a), F.ob(b)))
        if (v.carrier.src(fb), v.carrier.tgt(fb)) != want:
            rep.error(f"Fbar at {render((a, b))} mismatches the object map")
            return rep.finalize()
    for u in fam.arrows:
        for x in fam.objects:
            for f_pair in (((u, c.id(x))), ((c.id(x), u))):
                f, g = f_pair
                src = (c.tgt(f), c.src(g))
                tgt = (c.src(f), c.tgt(g))
                lhs = comp(vf.fbar.at(tgt), ea.hom_ar(f, g))
                rhs = comp(eb.hom_ar(F.ar(f), F.ar(g)), vf.fbar.at(src))
                rep.require(lhs == rhs, "Fbar-natural", (f, g), lhs, rhs)
    for a, b, d in itertools.product(fam.objects, repeat=3):
        lhs = comp(vf.fbar.at((a, d)), ea.M.at((a, b, d)))
        rhs = comp(eb.M.at((F.ob(a), F.ob(b), F.ob(d))),
                   tena(vf.fbar.at((b, d)), vf.fbar.at((a, b))))
        rep.require(lhs == rhs, "preserves-composition", (a, b, d), lhs, rhs)
    for a in fam.objects:
        lhs = comp(vf.fbar.at((a, a)), ea.j.at(a))
        rhs = eb.j.at(F.ob(a))
        rep.require(lhs == rhs, "preserves-unit", (a,), lhs, rhs)
    return rep.finalize()


def check_v_nat(vn: VNatRep, tests: Family | None = None) -> Report:
    rep = Report(f"v-natural {vn.name}")
    vf, vg = vn.dom_f, vn.cod_f
    ea, eb = vf.dom_e, vf.cod_e
    c = ea.carrier
    fam = family_for(c, tests, rep)
    if fam is None:
        return rep.finalize()
    F, G = vf.functor, vg.functor
    cb = eb.carrier
    for u in fam.arrows:
        lhs = cb.compose(vn.theta.at(c.tgt(u)), F.ar(u))
        rhs = cb.compose(G.ar(u), vn.theta.at(c.src(u)))
        rep.require(lhs == rhs, "underlying-natural", (u,), lhs, rhs)
    comp = ea.base.carrier.compose
    for a, b in itertools.product(fam.objects, repeat=2):
        lhs = comp(eb.hom_ar(cb.id(F.ob(a)), vn.theta.at(b)), vf.fbar.at((a, b)))
        rhs = comp(eb.hom_ar(vn.theta.at(a), cb.id(G.ob(b))), vg.fbar.at((a, b)))
        rep.require(lhs == rhs, "component-square", (a, b), lhs, rhs)
    return rep.finalize()


def identity_v_functor(e: SkewEnrichment) -> VFunctorRep:
    from .functors import identity_functor
    return VFunctorRep(e, e, identity_functor(e.carrier),
                       lambda ab: e.base.carrier.id(e.hom_ob(*ab)), "Id")


# ---------------------------------------------------------------------------
# change of base


def change_of_base(mf: MonoidalFunctorRep, e: SkewEnrichment,
                   name: str | None = None) -> SkewEnrichment:
    """Push an enrichment along a lax monoidal functor; same carrier."""
    if mf.dom_structure is not e.base and mf.dom_structure != e.base:
        raise ValueError("monoidal functor domain does not match the base")
    w = mf.cod_structure
    F = mf.functor
    hom = FunctorRep(e.hom.dom, w.carrier,
                     lambda ab: F.ob(e.hom.ob(ab)),
                     lambda fg: F.ar(e.hom.ar(fg)), f"{mf.name}.hom")
    if e.hom.kind == "tabulated":
        hom = FunctorRep(e.hom.dom, w.carrier,
                         {k: F.ob(x) for k, x in e.hom._ob.items()},
                         {k: F.ar(x) for k, x in e.hom._ar.items()}, f"{mf.name}.hom")

    def m_at(abc):
        a, b, c = abc
        return w.carrier.compose(F.ar(e.M.at(abc)),
                                 mf.phi.at((e.hom_ob(b, c), e.hom_ob(a, b))))

    def j_at(a):
        return w.carrier.compose(F.ar(e.j.at(a)), mf.phi0)

    M = m_at if not e.carrier.is_finite else \
        {t: m_at(t) for t in itertools.product(e.carrier.objects, repeat=3)}
    j = j_at if not e.carrier.is_finite else {a: j_at(a) for a in e.carrier.objects}
    return SkewEnrichment(w, e.carrier, hom, M, j, name or f"{mf.name}*{e.name}")


def change_of_base_vcategory(mf: MonoidalFunctorRep, vc: VCategory) -> VCategory:
    w = mf.cod_structure
    F = mf.functor
    return VCategory(
        w, vc.objects,
        {k: F.ob(x) for k, x in vc.hom.items()},
        {(a, b, c): w.carrier.compose(F.ar(vc.M[(a, b, c)]),
                                      mf.phi.at((vc.hom[(b, c)], vc.hom[(a, b)])))
         for (a, b, c) in vc.M},
        {a: w.carrier.compose(F.ar(vc.j[a]), mf.phi0) for a in vc.j},
        name=f"{mf.name}*{vc.name}")


# ---------------------------------------------------------------------------
# the comma adjunction, component-wise


def p2_monoidal(sv: SVStructure) -> MonoidalFunctorRep:
    """Strict monoidal projection onto the base."""
    v = sv.base
    return MonoidalFunctorRep(sv.structure, v, sv.p2,
                              lambda pair: v.carrier.id(v.ten(pair[0].vobj, pair[1].vobj)),
                              v.carrier.id(v.unit), "P2")


def comma_right_adjoint(sv: SVStructure) -> MonoidalFunctorRep:
    """X -> (V(I,X), identity, X); right adjoint to P2 with identity counit."""
    v = sv.base
    vc = v.carrier
    cat = sv.comma

    def r_ob(x):
        pts = cat.points(x)
        return cat.obj(pts, FinFn.identity(pts), x)

    def r_ar(u):
        x, y = vc.src(u), vc.tgt(u)
        post = FinFn.from_map(cat.points(x), cat.points(y), lambda p: vc.compose(u, p))
        return CommaArrow(cat, r_ob(x), r_ob(y), post, u)

    functor = FunctorRep(vc, cat, r_ob, r_ar, "R")

    def phi(pair):
        x, y = pair
        dom = sv.structure.ten(r_ob(x), r_ob(y))
        cod = r_ob(v.ten(x, y))
        efn = FinFn.from_map(dom.eset, cod.eset,
                             lambda p: vc.compose(v.tena(p[0], p[1]), v.r.at(v.unit)))
        return CommaArrow(cat, dom, cod, efn, vc.id(v.ten(x, y)))

    unit_obj = sv.structure.unit
    phi0 = CommaArrow(cat, unit_obj, r_ob(v.unit),
                      FinFn.from_map(unit_obj.eset, cat.points(v.unit),
                                     lambda _: vc.id(v.unit)), vc.id(v.unit))
    return MonoidalFunctorRep(v, sv.structure, functor, phi, phi0, "R")


# ---------------------------------------------------------------------------
# stock enrichments


def set_self_enrichment(cart: SkewMonoidalStructure) -> SkewEnrichment:
    """Self-enrichment of ambient cartesian finite sets: hom(A,B) = B ** A."""
    from .cats import SET, op_cat

    def hob(ab):
        return power_set(ab[0], ab[1])

    def har(fg):
        f, g = fg              # f: A' -> A, g: B -> B'
        dom, cod = power_set(f.cod, g.dom), power_set(f.dom, g.cod)
        return FinFn.from_map(dom, cod,
                              lambda t: tuple(g(apply_power(f.cod, t, f(p)))
                                              for p in f.dom))

    hom = FunctorRep(product_cat(op_cat(SET), SET), SET, hob, har, "exp")

    def m_at(abc):
        a, b, c = abc
        dom = prod_set(power_set(b, c), power_set(a, b))
        cod = power_set(a, c)
        return FinFn.from_map(dom, cod, lambda p: tuple(
            apply_power(b, p[0], apply_power(a, p[1], x)) for x in a))

    def j_at(a):
        return FinFn(SINGLETON, power_set(a, a), (a.elements,))

    return SkewEnrichment(cart, SET, hom, m_at, j_at, "Set-self")


def closed_self_enrichment(s: SkewMonoidalStructure) -> SkewEnrichment:
    """Self-enrichment of a tabulated closed structure via internal homs."""
    from .cats import op_cat
    from .skewmon import find_internal_hom
    c = s.carrier
    homs = {}
    for x in c.objects:
        ih = find_internal_hom(s, x)
        if ih is None:
            raise ValueError(f"structure is not closed at {render(x)}")
        homs[x] = ih

    def transpose(x, z, y, g):
        """Unique u: z -> [x,y] with ev . (u @ 1) = g, for g: z @ x -> y."""
        return homs[x].transpose(z, y, g)

    ob = {(a, b): homs[a].hom.ob(b) for a in c.objects for b in c.objects}
    ar = {}
    for f in c.arrows():
        for g in c.arrows():
            a2, a = c.src(f), c.tgt(f)
            b, b2 = c.src(g), c.tgt(g)
            ev = homs[a].counit_at(b)
            pre = c.compose(c.compose(g, ev), s.tena(c.id(ob[(a, b)]), f))
            ar[(f, g)] = transpose(a2, ob[(a, b)], b2, pre)
    from .cats import op_cat as _op
    hom = FunctorRep(product_cat(_op(c), c), c, ob, ar, "ihom")
    M, j = {}, {}
    for a, b, d in itertools.product(c.objects, repeat=3):
        dom = s.ten(ob[(b, d)], ob[(a, b)])
        route = c.compose(homs[b].counit_at(d),
                          c.compose(s.tena(c.id(ob[(b, d)]), homs[a].counit_at(b)),
                                    s.a.at((ob[(b, d)], ob[(a, b)], a))))
        M[(a, b, d)] = transpose(a, dom, d, route)
    for a in c.objects:
        j[a] = transpose(a, s.unit, a, s.l.at(a))
    return SkewEnrichment(s, c, hom, M, j, f"{s.name}-self")


def enrichment_from_vcategory(vc: VCategory, carrier) -> SkewEnrichment:
    """Equip a discrete carrier with the plain enriched data."""
    from .cats import op_cat
    v = vc.base
    ob = {(a, b): vc.hom[(a, b)] for a in vc.objects for b in vc.objects}
    ar = {(carrier.id(a), carrier.id(b)): v.carrier.id(vc.hom[(a, b)])
          for a in vc.objects for b in vc.objects}
    hom = FunctorRep(product_cat(op_cat(carrier), carrier), v.carrier, ob, ar, "hom")
    return SkewEnrichment(v, carrier, hom, dict(vc.M), dict(vc.j), vc.name)


def sv_category_to_comma_vcategory(s: SVCategory, sv: SVStructure) -> VCategory:
    """The same data, seen as enriched hom-objects in the comma structure."""
    cat = sv.comma
    c = s.carrier
    en = s.enriched

    def hob(a, b):
        return cat.obj(c.hom(a, b), s.omega[(a, b)], en.hom[(a, b)])

    objs = tuple(c.objects)
    hom = {(a, b): hob(a, b) for a in objs for b in objs}
    M, j = {}, {}
    for a, b, d in itertools.product(objs, repeat=3):
        dom = sv.structure.ten(hom[(b, d)], hom[(a, b)])
        efn = FinFn.from_map(dom.eset, hom[(a, d)].eset, lambda p: c.compose(p[0], p[1]))
        M[(a, b, d)] = CommaArrow(cat, dom, hom[(a, d)], efn, en.M[(a, b, d)])
    for a in objs:
        unit = sv.structure.unit
        efn = FinFn.from_map(unit.eset, hom[(a, a)].eset, lambda _: c.id(a))
        j[a] = CommaArrow(cat, unit, hom[(a, a)], efn, en.j[a])
    return VCategory(sv.structure, objs, hom, M, j, name=f"comma({s.name})")
