"""Representability: turning proactegories back into actegories or
enrichments by brute-force search for representing objects, plus the two
embedding directions and the forced-representation round trip.

All structures here are left-handed; searches scan carrier objects in order
and universal-element candidates in element order, so reconstructions are
deterministic and the recorded isomorphism families are the least ones.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .actegory import SkewActegory
from .cats import FinCat, op_cat, product_cat
from .enrich import SkewEnrichment, strict_to_weak
from .functors import FunctorRep, ProfunctorRep, tabulate_profunctor
from .proact import LEFT, SkewProactegory, SkewPromonoidal
from .report import Report, render
from .sets import FinFn, FinSet
from .skewmon import InternalHom, SkewMonoidalStructure, arrow_invertible, nat_family


@dataclass
class Representation:
    """A representing object with its universal element and bijection family."""

    obj: object
    universal: object
    isos: dict = field(default_factory=dict)   # b -> FinFn hom(obj, b) -> values

    def decode(self, b, value):
        """The arrow classified by a functor value at b."""
        fn = self.isos[b]
        return fn.dom.elements[fn.images.index(value)]


class NotRepresentable(Exception):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"no representation at {render(witness)}")


def _find_representation(objects, hom, act_on, values) -> Representation:
    """First (W, u) in scan order whose induced family hom(W,-) -> values
    is a bijection everywhere."""
    for w in objects:
        for u in values(w):
            isos = {}
            ok = True
            for b in objects:
                fn = FinFn.from_map(hom(w, b), values(b), lambda g: act_on(g, u))
                if not fn.is_bijective():
                    ok = False
                    break
                isos[b] = fn
            if ok:
                return Representation(w, u, isos)
    raise NotRepresentable(None)


# ---------------------------------------------------------------------------
# embeddings


def monoidal_to_promonoidal(v: SkewMonoidalStructure, name=None) -> SkewPromonoidal:
    """P(x,y;z) = V(x@y, z), J = V(I,-), constraints by composition."""
    if v.handedness != LEFT:
        raise ValueError("left structures only")
    vc = v.carrier
    if not vc.is_finite:
        raise ValueError("tabulated carriers only")

    def pvalue(objs):
        x, y, z = objs
        return vc.hom(v.ten(x, y), z)

    def paction(arrows):
        fx, fy, fz = arrows
        dom = pvalue((vc.tgt(fx), vc.tgt(fy), vc.src(fz)))
        cod = pvalue((vc.src(fx), vc.src(fy), vc.tgt(fz)))
        return FinFn.from_map(dom, cod, lambda h: vc.compose(
            fz, vc.compose(h, v.tena(fx, fy))))

    P = tabulate_profunctor(ProfunctorRep(((vc, "-"), (vc, "-"), (vc, "+")),
                                          pvalue, paction, "P"))
    from .cats import SET
    J = FunctorRep(vc, SET, {i: vc.hom(v.unit, i) for i in vc.objects},
                   {u: FinFn.from_map(vc.hom(v.unit, vc.src(u)),
                                      vc.hom(v.unit, vc.tgt(u)),
                                      lambda h, u=u: vc.compose(u, h))
                    for u in vc.arrows()}, "J")
    p = SkewPromonoidal(LEFT, vc, P, J, {}, {}, {}, name or f"P[{v.name}]")
    alpha, lam, rho = {}, {}, {}
    for i, j, k, d in itertools.product(vc.objects, repeat=4):
        dom, cod = p.nest_right(i, j, k, d), p.nest_left(i, j, k, d)
        w0 = v.ten(i, j)

        def gen(vv, elem, i=i, j=j, k=k, d=d, w0=w0):
            g, h = elem
            arr = vc.compose(g, vc.compose(v.tena(vc.id(i), h), v.a.at((i, j, k))))
            return w0, (arr, vc.id(w0))
        alpha[(i, j, k, d)] = FinFn.from_map(dom.carrier, cod.carrier,
                                             lambda r: cod.classify(*gen(r[0], r[1])))
    for x, w in itertools.product(vc.objects, repeat=2):
        cod = p.unit_first(x, w)
        lam[(x, w)] = FinFn.from_map(vc.hom(x, w), cod.carrier, lambda g: cod.classify(
            v.unit, (vc.compose(g, v.l.at(x)), vc.id(v.unit))))
        dom = p.unit_second(x, w)

        def rho_gen(vv, elem, x=x):
            h, u = elem
            return vc.compose(h, vc.compose(v.tena(vc.id(x), u), v.r.at(x)))
        rho[(x, w)] = FinFn.from_map(dom.carrier, vc.hom(x, w),
                                     lambda r: rho_gen(r[0], r[1]))
    p.alpha, p.lam, p.rho = alpha, lam, rho
    return p


def actegory_to_proactegory(s: SkewActegory, name=None) -> SkewProactegory:
    """T(x,a;b) = A(x*a, b) over the hom-set promonoidal base."""
    base = monoidal_to_promonoidal(s.base)
    v, A = s.base, s.carrier
    vc = v.carrier

    def tvalue(objs):
        x, a, b = objs
        return A.hom(s.star(x, a), b)

    def taction(arrows):
        fx, fa, fb = arrows
        dom = tvalue((vc.tgt(fx), A.tgt(fa), A.src(fb)))
        cod = tvalue((vc.src(fx), A.src(fa), A.tgt(fb)))
        return FinFn.from_map(dom, cod, lambda g: A.compose(
            fb, A.compose(g, s.stara(fx, fa))))

    T = tabulate_profunctor(ProfunctorRep(((vc, "-"), (A, "-"), (A, "+")),
                                          tvalue, taction, "T"))
    t = SkewProactegory(base, A, T, {}, {}, name or f"T[{s.name}]")
    alpha, lam = {}, {}
    for x, y in itertools.product(vc.objects, repeat=2):
        for a, c in itertools.product(A.objects, repeat=2):
            dom, cod = t.ceTT(x, y, a, c), t.ceTP(x, y, a, c)
            z0 = v.ten(x, y)

            def gen(b, elem, x=x, y=y, a=a, z0=z0):
                g, h = elem
                arr = A.compose(g, A.compose(s.stara(vc.id(x), h), s.a.at((x, y, a))))
                return z0, (arr, vc.id(z0))
            alpha[(x, y, a, c)] = FinFn.from_map(dom.carrier, cod.carrier,
                                                 lambda r: cod.classify(*gen(r[0], r[1])))
    for a, b in itertools.product(A.objects, repeat=2):
        cod = t.ceTJ(a, b)
        lam[(a, b)] = FinFn.from_map(A.hom(a, b), cod.carrier, lambda g: cod.classify(
            v.unit, (A.compose(g, s.l.at(a)), vc.id(v.unit))))
    t.alpha, t.lam = alpha, lam
    return t


def enrichment_to_proactegory(e: SkewEnrichment, name=None) -> SkewProactegory:
    """T(x,a;b) = V(x, hom(a,b)) over the hom-set promonoidal base."""
    base = monoidal_to_promonoidal(e.base)
    v, A = e.base, e.carrier
    vc = v.carrier
    if not A.is_finite:
        raise ValueError("tabulated carriers only")

    def tvalue(objs):
        x, a, b = objs
        return vc.hom(x, e.hom_ob(a, b))

    def taction(arrows):
        fx, fa, fb = arrows
        dom = tvalue((vc.tgt(fx), A.tgt(fa), A.src(fb)))
        cod = tvalue((vc.src(fx), A.src(fa), A.tgt(fb)))
        return FinFn.from_map(dom, cod, lambda g: vc.compose(
            e.hom_ar(fa, fb), vc.compose(g, fx)))

    T = tabulate_profunctor(ProfunctorRep(((vc, "-"), (A, "-"), (A, "+")),
                                          tvalue, taction, "T"))
    t = SkewProactegory(base, A, T, {}, {}, name or f"T[{e.name}]")
    alpha, lam = {}, {}
    for x, y in itertools.product(vc.objects, repeat=2):
        for a, c in itertools.product(A.objects, repeat=2):
            dom, cod = t.ceTT(x, y, a, c), t.ceTP(x, y, a, c)
            z0 = v.ten(x, y)

            def gen(b, elem, x=x, y=y, a=a, c=c, z0=z0):
                g, h = elem
                arr = vc.compose(e.M.at((a, b, c)), v.tena(g, h))
                return z0, (arr, vc.id(z0))
            alpha[(x, y, a, c)] = FinFn.from_map(dom.carrier, cod.carrier,
                                                 lambda r: cod.classify(*gen(r[0], r[1])))
    for a, b in itertools.product(A.objects, repeat=2):
        cod = t.ceTJ(a, b)
        stw = strict_to_weak(e, a, b)
        lam[(a, b)] = FinFn.from_map(A.hom(a, b), cod.carrier, lambda g: cod.classify(
            v.unit, (stw(g), vc.id(v.unit))))
    t.alpha, t.lam = alpha, lam
    return t


# ---------------------------------------------------------------------------
# reconstructions


def _tensor_representations(t: SkewProactegory, forced=None):
    V = t.base.carrier
    p = t.base
    if forced is not None:
        return forced
    tens, unit = {}, None
    for x, y in itertools.product(V.objects, repeat=2):
        try:
            tens[(x, y)] = _find_representation(
                V.objects, V.hom,
                lambda g, u: p.P.action((V.id(x), V.id(y), g))(u),
                lambda w: p.pvalue(x, y, w))
        except NotRepresentable:
            raise NotRepresentable(("tensor", x, y))
    try:
        unit = _find_representation(V.objects, V.hom,
                                    lambda g, u: p.J.ar(g)(u),
                                    lambda w: p.jvalue(w))
    except NotRepresentable:
        raise NotRepresentable(("unit",))
    return tens, unit


def _reconstruct_monoidal(t: SkewProactegory, forced=None) -> tuple:
    """Rebuild the base skew-monoidal structure from P and J representations."""
    V = t.base.carrier
    p = t.base
    tens, unit = _tensor_representations(t, forced)
    i0 = unit.obj

    def ten_ob(pair):
        return tens[pair].obj

    def ten_ar(pair):
        f, g = pair
        hi = (V.tgt(f), V.tgt(g))
        lo = (V.src(f), V.src(g))
        moved = p.P.action((f, g, V.id(tens[hi].obj)))(tens[hi].universal)
        return tens[lo].decode(tens[hi].obj, moved)

    tensor = FunctorRep(product_cat(V, V), V,
                        {pr: ten_ob(pr) for pr in itertools.product(V.objects, repeat=2)},
                        {pr: ten_ar(pr) for pr in
                         itertools.product(list(V.arrows()), repeat=2)}, "@")

    def a_at(triple):
        x, y, z = triple
        w_yz = tens[(y, z)].obj
        d = tens[(x, w_yz)].obj
        pair = p.nest_right(x, y, z, d).classify(
            w_yz, (tens[(x, w_yz)].universal, tens[(y, z)].universal))
        w0, (pv, qv) = p.alpha_at(x, y, z, d)(pair)
        h = tens[(x, y)].decode(w0, qv)                       # x@y -> w0
        g = tens[(w0, z)].decode(d, pv)                       # w0@z -> d
        return V.compose(g, ten_ar((h, V.id(z))))

    def l_at(x):
        u0, (pv, sv) = p.lam[(x, x)](V.id(x))
        e0 = unit.decode(u0, sv)                              # I -> u0
        g = tens[(u0, x)].decode(x, pv)                       # u0@x -> x
        return V.compose(g, ten_ar((e0, V.id(x))))

    def r_at(x):
        w = tens[(x, i0)].obj
        cls = p.unit_second(x, w).classify(i0, (tens[(x, i0)].universal, unit.universal))
        return p.rho[(x, w)](cls)

    v2 = SkewMonoidalStructure(
        LEFT, V, tensor, i0,
        nat_family({tr: a_at(tr) for tr in itertools.product(V.objects, repeat=3)}, "a"),
        nat_family({x: l_at(x) for x in V.objects}, "l"),
        nat_family({x: r_at(x) for x in V.objects}, "r"), f"V[{t.name}]")
    return v2, tens, unit


def represent_as_actegory(t: SkewProactegory, forced_base=None,
                          forced_act=None) -> SkewActegory:
    """Brute-force representations of every T(x,a;-); raises NotRepresentable
    with the witness (x,a) when some functor has no representing object."""
    if t.handedness != LEFT:
        raise ValueError("left structures only")
    V, A = t.base.carrier, t.carrier
    v2, tens, unit = _reconstruct_monoidal(t, forced_base)
    acts = {}
    if forced_act is not None:
        acts = forced_act
    else:
        for x in V.objects:
            for a in A.objects:
                try:
                    acts[(x, a)] = _find_representation(
                        A.objects, A.hom,
                        lambda g, u: t.T.action((V.id(x), A.id(a), g))(u),
                        lambda w: t.tvalue(x, a, w))
                except NotRepresentable:
                    raise NotRepresentable((x, a))

    def act_ob(pair):
        return acts[pair].obj

    def act_ar(pair):
        f, g = pair
        hi = (V.tgt(f), A.tgt(g))
        lo = (V.src(f), A.src(g))
        moved = t.T.action((f, g, A.id(acts[hi].obj)))(acts[hi].universal)
        return acts[lo].decode(acts[hi].obj, moved)

    act = FunctorRep(product_cat(V, A), A,
                     {pr: act_ob(pr) for pr in itertools.product(V.objects, A.objects)},
                     {pr: act_ar(pr) for pr in
                      itertools.product(list(V.arrows()), list(A.arrows()))}, "*")

    def a_at(triple):
        x, y, a = triple
        w_ya = acts[(y, a)].obj
        c = acts[(x, w_ya)].obj
        cls = t.ceTT(x, y, a, c).classify(
            w_ya, (acts[(x, w_ya)].universal, acts[(y, a)].universal))
        z0, (tv, pv) = t.alpha_at(x, y, a, c)(cls)
        h = tens[(x, y)].decode(z0, pv)                       # x@y -> z0
        g = acts[(z0, a)].decode(c, tv)                       # z0*a -> c
        return A.compose(g, act_ar((h, A.id(a))))

    def l_at(a):
        x0, (tv, sv) = t.lam_at(a, a)(A.id(a))
        e0 = unit.decode(x0, sv)                              # I -> x0
        g = acts[(x0, a)].decode(a, tv)                       # x0*a -> a
        return A.compose(g, act_ar((e0, A.id(a))))

    out = SkewActegory(
        v2, A, act,
        nat_family({tr: a_at(tr) for tr in
                    itertools.product(V.objects, V.objects, A.objects)}, "a"),
        nat_family({a: l_at(a) for a in A.objects}, "l"), f"Act[{t.name}]")
    out.reps = {"act": acts, "tensor": tens, "unit": unit}
    return out


def represent_as_enrichment(t: SkewProactegory, forced_base=None,
                            forced_hom=None) -> SkewEnrichment:
    """Dual reconstruction: representations of every T(-,a;b) in the base."""
    if t.handedness != LEFT:
        raise ValueError("left structures only")
    V, A = t.base.carrier, t.carrier
    v2, tens, unit = _reconstruct_monoidal(t, forced_base)
    homs = {}
    if forced_hom is not None:
        homs = forced_hom
    else:
        vop = op_cat(V)
        for a in A.objects:
            for b in A.objects:
                try:
                    homs[(a, b)] = _find_representation(
                        V.objects, lambda w, x: V.hom(x, w),
                        lambda g, u: t.T.action((g, A.id(a), A.id(b)))(u),
                        lambda w: t.tvalue(w, a, b))
                except NotRepresentable:
                    raise NotRepresentable((a, b))

    def hom_ob(pair):
        return homs[pair].obj

    def hom_ar(pair):
        f, g = pair      # f: a' -> a contravariant, g: b -> b'
        hi = (A.tgt(f), A.src(g))
        lo = (A.src(f), A.tgt(g))
        moved = t.T.action((V.id(homs[hi].obj), f, g))(homs[hi].universal)
        return homs[lo].decode(homs[hi].obj, moved)

    hom = FunctorRep(product_cat(op_cat(A), A), V,
                     {pr: hom_ob(pr) for pr in itertools.product(A.objects, repeat=2)},
                     {pr: hom_ar(pr) for pr in
                      itertools.product(list(A.arrows()), repeat=2)}, "hom")

    def m_at(triple):
        a, b, c = triple
        hbc, hab = homs[(b, c)].obj, homs[(a, b)].obj
        cls = t.ceTT(hbc, hab, a, c).classify(
            b, (homs[(b, c)].universal, homs[(a, b)].universal))
        z0, (tv, pv) = t.alpha_at(hbc, hab, a, c)(cls)
        h = tens[(hbc, hab)].decode(z0, pv)                   # hbc@hab -> z0
        g = homs[(a, c)].decode(z0, tv)                       # z0 -> hom(a,c)
        return V.compose(g, h)

    def j_at(a):
        x0, (tv, sv) = t.lam_at(a, a)(A.id(a))
        e0 = unit.decode(x0, sv)                              # I -> x0
        g = homs[(a, a)].decode(x0, tv)                       # x0 -> hom(a,a)
        return V.compose(g, e0)

    out = SkewEnrichment(
        v2, A, hom,
        {tr: m_at(tr) for tr in itertools.product(A.objects, repeat=3)},
        {a: j_at(a) for a in A.objects}, f"Enr[{t.name}]")
    out.reps = {"hom": homs, "tensor": tens, "unit": unit}
    return out


# ---------------------------------------------------------------------------
# transported comparisons (identity up to the recorded isomorphisms)


def actegory_roundtrip_matches(s: SkewActegory, s2: SkewActegory, rep: Report) -> None:
    """Componentwise equality of s2 against s conjugated by the recorded
    representation isomorphisms (the universal elements, which are isos)."""
    v, A = s.base, s.carrier
    vc = v.carrier
    reps = s2.reps
    tens, unit, acts = reps["tensor"], reps["unit"], reps["act"]

    def sigma(x, y):   # x@y -> ten'(x,y)
        return tens[(x, y)].universal

    def tau(x, a):     # x*a -> act'(x,a)
        return acts[(x, a)].universal

    iota = unit.universal   # I -> I'

    for x, y, z in itertools.product(vc.objects, repeat=3):
        left = vc.compose(s2.base.a.at((x, y, z)),
                          vc.compose(sigma(tens[(x, y)].obj, z),
                                     v.tena(sigma(x, y), vc.id(z))))
        right = vc.compose(sigma(x, tens[(y, z)].obj),
                           vc.compose(v.tena(vc.id(x), sigma(y, z)), v.a.at((x, y, z))))
        rep.require(left == right, "transport:base-a", (x, y, z), left, right)
    for x, y, a in itertools.product(vc.objects, vc.objects, A.objects):
        left = A.compose(s2.a.at((x, y, a)),
                         A.compose(tau(tens[(x, y)].obj, a),
                                   s.stara(sigma(x, y), A.id(a))))
        right = A.compose(tau(x, acts[(y, a)].obj),
                          A.compose(s.stara(vc.id(x), tau(y, a)), s.a.at((x, y, a))))
        rep.require(left == right, "transport:act-a", (x, y, a), left, right)
    for a in A.objects:
        left = A.compose(s2.l.at(a), A.compose(tau(unit.obj, a),
                                               s.stara(iota, A.id(a))))
        rep.require(left == s.l.at(a), "transport:act-l", (a,), left, s.l.at(a))
    for x in vc.objects:
        left = vc.compose(s2.base.l.at(x), vc.compose(sigma(unit.obj, x),
                                                      v.tena(iota, vc.id(x))))
        rep.require(left == v.l.at(x), "transport:base-l", (x,), left, v.l.at(x))
        left = s2.base.r.at(x)
        right = vc.compose(sigma(x, unit.obj),
                           vc.compose(v.tena(vc.id(x), iota), v.r.at(x)))
        rep.require(left == right, "transport:base-r", (x,), left, right)


def enrichment_roundtrip_matches(e: SkewEnrichment, e2: SkewEnrichment,
                                 rep: Report) -> None:
    v, A = e.base, e.carrier
    vc = v.carrier
    reps = e2.reps
    tens, unit, homs = reps["tensor"], reps["unit"], reps["hom"]

    def eta(a, b):
        """hom'(a,b) -> hom(a,b): the universal element as a base arrow."""
        return homs[(a, b)].universal

    def sigma(x, y):
        return tens[(x, y)].universal

    iota = unit.universal
    for a, b, c in itertools.product(A.objects, repeat=3):
        hbc, hab = homs[(b, c)].obj, homs[(a, b)].obj
        left = vc.compose(eta(a, c), e2.M.at((a, b, c)))
        right = vc.compose(e.M.at((a, b, c)),
                           vc.compose(v.tena(eta(b, c), eta(a, b)),
                                      _inv_arrow(vc, sigma(hbc, hab))))
        rep.require(left == right, "transport:M", (a, b, c), left, right)
    for a in A.objects:
        left = vc.compose(eta(a, a), vc.compose(e2.j.at(a), _inv_arrow(vc, iota)))
        rep.require(left == e.j.at(a), "transport:j", (a,), left, e.j.at(a))
    for f in A.arrows():
        for g in A.arrows():
            left = vc.compose(eta(A.src(f), A.tgt(g)), e2.hom.ar((f, g)))
            right = vc.compose(e.hom.ar((f, g)), eta(A.tgt(f), A.src(g)))
            rep.require(left == right, "transport:hom", (f, g), left, right)


def _inv_arrow(cat, f):
    src, tgt = cat.src(f), cat.tgt(f)
    for g in cat.hom(tgt, src):
        if cat.compose(g, f) == cat.id(src) and cat.compose(f, g) == cat.id(tgt):
            return g
    raise ValueError("recorded representation arrow is not invertible")


# ---------------------------------------------------------------------------
# the forced round trip with supplied adjunction tables


def check_adjunction_tables(s: SkewActegory, hom_map: dict, tables: dict) -> Report:
    """tables[(x,a,b)]: A(x*a, b) -> V(x, hom_map[(a,b)]), natural and bijective."""
    rep = Report("adjunction tables")
    v, A = s.base, s.carrier
    vc = v.carrier
    for (x, a, b), fn in sorted(tables.items(), key=lambda kv: render(kv[0])):
        if fn.dom != A.hom(s.star(x, a), b) or fn.cod != vc.hom(x, hom_map[(a, b)]):
            rep.error(f"table at {render((x, a, b))} has the wrong type")
            return rep.finalize()
        if not fn.is_bijective():
            rep.law("table-bijective", (x, a, b), f"{len(set(fn.images))} images",
                    f"{len(fn.dom)} needed")
    # naturality in x: precompose f*1 versus postcompose V(f, 1)
    for f in vc.arrows():
        for a, b in itertools.product(A.objects, repeat=2):
            x1, x2 = vc.src(f), vc.tgt(f)
            for g in A.hom(s.star(x2, a), b):
                lhs = tables[(x1, a, b)](A.compose(g, s.stara(f, A.id(a))))
                rhs = vc.compose(tables[(x2, a, b)](g), f)
                rep.require(lhs == rhs, "table-natural:x", (f, a, b, g), lhs, rhs)
    for u in A.arrows():
        for x in vc.objects:
            a1, a2 = A.src(u), A.tgt(u)
            for b in A.objects:
                for g in A.hom(s.star(x, a2), b):
                    lhs = tables[(x, a1, b)](A.compose(g, s.stara(vc.id(x), u)))
                    rhs = vc.compose(hom_pre(s, hom_map, tables, u, b),
                                     tables[(x, a2, b)](g))
                    rep.require(lhs == rhs, "table-natural:a", (u, b, x, g), lhs, rhs)
    for u in A.arrows():
        for x in vc.objects:
            b1, b2 = A.src(u), A.tgt(u)
            for a in A.objects:
                for g in A.hom(s.star(x, a), b1):
                    lhs = tables[(x, a, b2)](A.compose(u, g))
                    rhs = vc.compose(hom_post(s, hom_map, tables, a, u),
                                     tables[(x, a, b1)](g))
                    rep.require(lhs == rhs, "table-natural:b", (u, a, x, g), lhs, rhs)
    return rep.finalize()


def hom_pre(s, hom_map, tables, u, b):
    """hom(u, b): the table transport of contravariant precomposition."""
    a2 = s.carrier.tgt(u)
    h2 = hom_map[(a2, b)]
    ev = _table_counit(s, hom_map, tables, a2, b)
    moved = s.carrier.compose(ev, s.stara(s.base.carrier.id(h2), u))
    return tables[(h2, s.carrier.src(u), b)](moved)


def hom_post(s, hom_map, tables, a, u):
    """hom(a, u): the table transport of covariant postcomposition."""
    b1 = s.carrier.src(u)
    h1 = hom_map[(a, b1)]
    ev = _table_counit(s, hom_map, tables, a, b1)
    return tables[(h1, a, s.carrier.tgt(u))](s.carrier.compose(u, ev))


def _table_counit(s, hom_map, tables, a, b):
    h = hom_map[(a, b)]
    fn = tables[(h, a, b)]
    target = s.base.carrier.id(h)
    return fn.dom.elements[fn.images.index(target)]


def roundtrip_actegory_enrichment(s: SkewActegory, hom_map: dict, tables: dict):
    """Compose the embedding with the dual reconstruction, forcing the supplied
    representations; returns (enrichment, actegory_back) with exact equality
    expected on representations."""
    rep = check_adjunction_tables(s, hom_map, tables)
    if not rep.ok:
        raise ValueError("adjunction tables rejected:\n" + rep.format_text())
    v, A = s.base, s.carrier
    vc = v.carrier
    t = actegory_to_proactegory(s)

    # forced representations: P(x,y;-) is represented by x@y with identity
    forced_tens = {}
    for x, y in itertools.product(vc.objects, repeat=2):
        w = v.ten(x, y)
        isos = {z: FinFn.identity(vc.hom(w, z)) for z in vc.objects}
        forced_tens[(x, y)] = Representation(w, vc.id(w), isos)
    unit_isos = {z: FinFn.identity(vc.hom(v.unit, z)) for z in vc.objects}
    forced_unit = Representation(v.unit, vc.id(v.unit), unit_isos)

    forced_hom = {}
    for a, b in itertools.product(A.objects, repeat=2):
        h = hom_map[(a, b)]
        u = _table_counit(s, hom_map, tables, a, b)
        isos = {x: FinFn.from_map(vc.hom(x, h), t.tvalue(x, a, b),
                                  lambda g: _untable(tables[(x, a, b)], g))
                for x in vc.objects}
        forced_hom[(a, b)] = Representation(h, u, isos)
    e = represent_as_enrichment(t, forced_base=(forced_tens, forced_unit),
                                forced_hom=forced_hom)

    t2 = enrichment_to_proactegory(e)
    forced_act = {}
    for x in vc.objects:
        for a in A.objects:
            w = s.star(x, a)
            isos = {b: FinFn.from_map(A.hom(w, b), t2.tvalue(x, a, b),
                                      lambda g: tables[(x, a, b)](g))
                    for b in A.objects}
            forced_act[(x, a)] = Representation(w, tables[(x, a, w)](A.id(w)), isos)
    s2 = represent_as_actegory(t2, forced_base=(forced_tens, forced_unit),
                               forced_act=forced_act)
    return e, s2


def _untable(fn: FinFn, g):
    return fn.dom.elements[fn.images.index(g)]


def closed_k_map(s: SkewActegory, hom_map: dict, tables: dict,
                 internal: dict) -> dict:
    """k: hom(y*a, c) -> [y, hom(a,c)] for each (y,a,c), given internal homs
    of the base; its invertibility matches that of the derived alpha."""
    v, A = s.base, s.carrier
    vc = v.carrier
    out = {}
    for y in vc.objects:
        ih: InternalHom = internal[y]
        for a, c in itertools.product(A.objects, repeat=2):
            x0 = hom_map[(s.star(y, a), c)]
            ev = _table_counit(s, hom_map, tables, s.star(y, a), c)
            g = A.compose(ev, s.a.at((x0, y, a)))
            arr = tables[(v.ten(x0, y), a, c)](g)
            out[(y, a, c)] = ih.transpose(x0, hom_map[(a, c)], arr)
    return out
