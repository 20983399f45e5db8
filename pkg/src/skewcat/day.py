"""Day convolution: transporting a right promonoidal base to a left
skew-monoidal structure on its Set-valued functor category, a right
skew-proaction to a left action of that structure, and the pointwise-end
convolution enrichment of a functor category with finite-set values.
"""
from __future__ import annotations

import itertools

from .actegory import SkewActegory
from .cats import SET, FinCat, op_cat, product_cat
from .functors import FunctorCat, functor_category
from .enrich import SkewEnrichment
from .functors import FunctorRep, NatTransRep
from .limits import Coend, End, TwoSided, coend, end
from .proact import RIGHT, SkewPromonoidal, SkewProactegory
from .report import render
from .sets import FinFn, FinSet, apply_power, power_set, prod_set
from .skewmon import LEFT, SkewMonoidalStructure, nat_family


class DayTensor:
    """Pointwise coends for M * F over a right proaction, with caching.

    For the promonoidal self-action this is the Day tensor itself.
    """

    def __init__(self, t: SkewProactegory):
        if t.handedness != RIGHT:
            raise ValueError("Day transport starts from right-handed structures")
        self.t = t
        self.V, self.A = t.base.carrier, t.carrier
        self.VA = product_cat(self.V, self.A)
        self._coends: dict = {}
        self._presheaves: dict = {}

    def coend_at(self, m: FunctorRep, f: FunctorRep, b) -> Coend:
        key = (m, f, b)
        if key not in self._coends:
            t, V, A = self.t, self.V, self.A

            def value(lo, hi):
                return prod_set(t.tvalue(lo[0], lo[1], b), m.ob(hi[0]), f.ob(hi[1]))

            def action(u, w):
                return _prod3(t.T.action((u[0], u[1], A.id(b))), m.ar(w[0]), f.ar(w[1]))
            self._coends[key] = coend(self.VA, TwoSided(value, action),
                                      f"({m.name}*{f.name})@{render(b)}")
        return self._coends[key]

    def star(self, m: FunctorRep, f: FunctorRep) -> FunctorRep:
        key = (m, f)
        if key not in self._presheaves:
            A = self.A
            ob = {b: self.coend_at(m, f, b).carrier for b in A.objects}
            ar = {}
            for u in A.arrows():
                dom = self.coend_at(m, f, A.src(u))
                cod = self.coend_at(m, f, A.tgt(u))

                def gen(obj, elem, u=u):
                    tv = self.t.T.action((self.V.id(obj[0]), A.id(obj[1]), u))(elem[0])
                    return obj, (tv, elem[1], elem[2])
                ar[u] = FinFn.from_map(dom.carrier, cod.carrier,
                                       lambda r: cod.classify(*gen(r[0], r[1])))
            self._presheaves[key] = FunctorRep(A, SET, ob, ar,
                                               f"({m.name}*{f.name})")
        return self._presheaves[key]

    def star_arrows(self, phi: NatTransRep, psi: NatTransRep) -> NatTransRep:
        dom = self.star(phi.dom, psi.dom)
        cod = self.star(phi.cod, psi.cod)
        comps = {}
        for b in self.A.objects:
            dce, cce = self.coend_at(phi.dom, psi.dom, b), self.coend_at(phi.cod, psi.cod, b)

            def gen(obj, elem):
                return obj, (elem[0], phi.at(obj[0])(elem[1]), psi.at(obj[1])(elem[2]))
            comps[b] = FinFn.from_map(dce.carrier, cce.carrier,
                                      lambda r: cce.classify(*gen(r[0], r[1])))
        return NatTransRep(dom, cod, comps, f"{phi.name}*{psi.name}")


def _prod3(f1, f2, f3):
    dom = prod_set(f1.dom, f2.dom, f3.dom)
    cod = prod_set(f1.cod, f2.cod, f3.cod)
    return FinFn.from_map(dom, cod, lambda p: (f1(p[0]), f2(p[1]), f3(p[2])))


def _unit_presheaf(p: SkewPromonoidal) -> FunctorRep:
    V = p.carrier
    return FunctorRep(V, SET, {i: p.jvalue(i) for i in V.objects},
                      {u: p.J.ar(u) for u in V.arrows()}, "J")


def day_convolution_monoidal(p: SkewPromonoidal) -> SkewMonoidalStructure:
    """Left skew-monoidal structure on [V, Set] from a right promonoidal V."""
    from .proact import as_self_proaction
    if p.handedness != RIGHT:
        raise ValueError("Day transport starts from a right promonoidal base")
    self_t = as_self_proaction(p)
    day = DayTensor(self_t)
    V = p.carrier
    carrier = FunctorCat(V)
    unit = _unit_presheaf(p)

    tensor = FunctorRep(product_cat(carrier, carrier), carrier,
                        lambda pair: day.star(pair[0], pair[1]),
                        lambda pair: day.star_arrows(pair[0], pair[1]), "Day@")

    def a_at(triple):
        x, y, z = triple
        xy = day.star(x, y)
        dom, cod = day.star(xy, z), day.star(x, day.star(y, z))
        comps = {}
        for d in V.objects:
            dce = day.coend_at(xy, z, d)
            cce = day.coend_at(x, day.star(y, z), d)

            def gen(obj, elem):
                (u, m), (pv, xyval, zval) = obj, elem
                (i, j), (pij, xval, yval) = xyval
                v, (piv, pjm) = p.alpha_at(i, j, m, d)(
                    p.nest_left(i, j, m, d).classify(u, (pv, pij)))
                inner = day.coend_at(y, z, v).classify((j, m), (pjm, yval, zval))
                return (i, v), (piv, xval, inner)
            comps[d] = FinFn.from_map(dce.carrier, cce.carrier,
                                      lambda r: cce.classify(*gen(r[0], r[1])))
        return NatTransRep(dom, cod, comps, "a")

    def l_at(x):
        dom = day.star(unit, x)
        comps = {}
        for d in V.objects:
            dce = day.coend_at(unit, x, d)

            def gen(obj, elem):
                (i, j), (pij, sval, xval) = obj, elem
                g = p.lam[(j, d)](p.unit_first(j, d).classify(i, (pij, sval)))
                return x.ar(g)(xval)
            comps[d] = FinFn.from_map(dce.carrier, x.ob(d),
                                      lambda r: gen(r[0], r[1]))
        return NatTransRep(dom, x, comps, "l")

    def r_at(x):
        cod = day.star(x, unit)
        comps = {}
        for d in V.objects:
            cce = day.coend_at(x, unit, d)
            w, (p0, s0) = p.rho[(d, d)](V.id(d))
            comps[d] = FinFn.from_map(x.ob(d), cce.carrier,
                                      lambda xv: cce.classify((d, w), (p0, xv, s0)))
        return NatTransRep(x, cod, comps, "r")

    s = SkewMonoidalStructure(LEFT, carrier, tensor, unit, nat_family(a_at, "a"),
                              nat_family(l_at, "l"), nat_family(r_at, "r"),
                              name=f"Day[{p.name}]")
    s.day = day
    return s


def day_convolution_action(t: SkewProactegory) -> SkewActegory:
    """Left skew action of Day([V,Set]) on [A, Set] from a right proaction."""
    base = day_convolution_monoidal(t.base)
    day = DayTensor(t)
    V, A = t.base.carrier, t.carrier
    carrier = FunctorCat(A)
    p = t.base

    act = FunctorRep(product_cat(base.carrier, carrier), carrier,
                     lambda pair: day.star(pair[0], pair[1]),
                     lambda pair: day.star_arrows(pair[0], pair[1]), "Day*")

    def a_at(triple):
        m, n, f = triple
        mn = base.day.star(m, n)
        dom, cod = day.star(mn, f), day.star(m, day.star(n, f))
        comps = {}
        for b in A.objects:
            dce = day.coend_at(mn, f, b)
            cce = day.coend_at(m, day.star(n, f), b)

            def gen(obj, elem):
                (z, a), (tzab, mnval, fval) = obj, elem
                (x, y), (pxyz, mval, nval) = mnval
                c, (txcb, tyac) = t.alpha_at(x, y, a, b)(
                    t.ceTP(x, y, a, b).classify(z, (tzab, pxyz)))
                inner = day.coend_at(n, f, c).classify((y, a), (tyac, nval, fval))
                return (x, c), (txcb, mval, inner)
            comps[b] = FinFn.from_map(dce.carrier, cce.carrier,
                                      lambda r: cce.classify(*gen(r[0], r[1])))
        return NatTransRep(dom, cod, comps, "a")

    def l_at(f):
        dom = day.star(base.unit, f)
        comps = {}
        for b in A.objects:
            dce = day.coend_at(base.unit, f, b)

            def gen(obj, elem):
                (x, a), (txab, sval, fval) = obj, elem
                g = t.lam_at(a, b)(t.ceTJ(a, b).classify(x, (txab, sval)))
                return f.ar(g)(fval)
            comps[b] = FinFn.from_map(dce.carrier, f.ob(b),
                                      lambda r: gen(r[0], r[1]))
        return NatTransRep(dom, f, comps, "l")

    out = SkewActegory(base, carrier, act, nat_family(a_at, "a"),
                       nat_family(l_at, "l"), name=f"Day*[{t.name}]")
    out.day = day
    return out


# ---------------------------------------------------------------------------
# convolution enrichment


def convolution_enrichment(t: SkewProactegory, host: FinCat,
                           name=None) -> SkewEnrichment:
    """Skew enrichment of [A, host] over Day([V,Set]) with hom presheaves
    Hom(F,G)(i) = end over (A,B) of T(i,A;B)-indexed tuples in host(FA,GB)."""
    if t.handedness != RIGHT:
        raise ValueError("the convolution enrichment starts from a right proaction")
    base = day_convolution_monoidal(t.base)
    V, A = t.base.carrier, t.carrier
    carrier, fun_of, nat_of = functor_category(A, host)
    AA = product_cat(A, A)
    pair_order = list(itertools.product(A.objects, repeat=2))
    ends: dict = {}

    def hom_end(fl, gl, i) -> End:
        key = (fl, gl, i)
        if key not in ends:
            F, G = fun_of[fl], fun_of[gl]

            def value(lo, hi):
                ac, bc = lo
                av, bv = hi
                return power_set(t.tvalue(i, av, bc), host.hom(F.ob(ac), G.ob(bv)))

            def action(u, w):
                fa, fb = u
                ga, gb = w
                # reindex along T(1,ga;fb) and postcompose/precompose in host
                def on_family(fam, dom_t, cod_t, hdom, hcod):
                    return tuple(
                        host.compose(G.ar(gb), host.compose(
                            apply_power(dom_t, fam, t.T.action(
                                (V.id(i), ga, fb))(tv)), F.ar(fa)))
                        for tv in cod_t)
                dom_t = t.tvalue(i, A.tgt(ga), A.src(fb))
                cod_t = t.tvalue(i, A.src(ga), A.tgt(fb))
                hdom = host.hom(F.ob(A.tgt(fa)), G.ob(A.src(gb)))
                hcod = host.hom(F.ob(A.src(fa)), G.ob(A.tgt(gb)))
                return FinFn.from_map(power_set(dom_t, hdom), power_set(cod_t, hcod),
                                      lambda fam: on_family(fam, dom_t, cod_t,
                                                            hdom, hcod))
            ends[key] = end(AA, TwoSided(value, action),
                            f"Hom({fl[1]},{gl[1]})@{render(i)}")
        return ends[key]

    presheaves: dict = {}

    def hom_presheaf(fl, gl) -> FunctorRep:
        if (fl, gl) not in presheaves:
            ob = {i: hom_end(fl, gl, i).carrier for i in V.objects}
            ar = {}
            for u in V.arrows():
                i, i2 = V.src(u), V.tgt(u)

                def comp_map(fam, u=u, i=i, i2=i2):
                    out = []
                    for (a, b) in pair_order:
                        dom_t = t.tvalue(i, a, b)
                        cod_t = t.tvalue(i2, a, b)
                        old = fam[pair_order.index((a, b))]
                        out.append(tuple(apply_power(dom_t, old, t.T.action(
                            (u, A.id(a), A.id(b)))(tv)) for tv in cod_t))
                    return tuple(out)
                ar[u] = FinFn.from_map(ob[i], ob[i2], comp_map)
            presheaves[(fl, gl)] = FunctorRep(V, SET, ob, ar, f"Hom({fl[1]},{gl[1]})")
        return presheaves[(fl, gl)]

    hom_ob = {(fl, gl): hom_presheaf(fl, gl)
              for fl in carrier.objects for gl in carrier.objects}

    def hom_arrow(flab, glab) -> NatTransRep:
        # flab: F' -> F contravariant, glab: G -> G' covariant
        f_comps, g_comps = nat_of[flab], nat_of[glab]
        f2l, fl = flab[1], flab[2]
        gl, g2l = glab[1], glab[2]
        dom, cod = hom_ob[(fl, gl)], hom_ob[(f2l, g2l)]
        F2, G2 = fun_of[f2l], fun_of[g2l]
        comps = {}
        for i in V.objects:
            def on_family(fam, i=i):
                out = []
                for (a, b) in pair_order:
                    dom_t = t.tvalue(i, a, b)
                    old = fam[pair_order.index((a, b))]
                    out.append(tuple(host.compose(g_comps[b], host.compose(
                        apply_power(dom_t, old, tv), f_comps[a]))
                        for tv in dom_t))
                return tuple(out)
            comps[i] = FinFn.from_map(dom.ob(i), cod.ob(i), on_family)
        return NatTransRep(dom, cod, comps, "hom(f,g)")

    hom_ar = {(flab, glab): hom_arrow(flab, glab)
              for flab in carrier.arrows() for glab in carrier.arrows()}
    hom = FunctorRep(product_cat(op_cat(carrier), carrier), base.carrier,
                     hom_ob, hom_ar, "Hom")

    day = base.day

    def m_at(abc):
        fl, gl, hl = abc
        hg, gf = hom_ob[(gl, hl)], hom_ob[(fl, gl)]
        dom = day.star(hg, gf)
        cod = hom_ob[(fl, hl)]
        comps = {}
        for k in V.objects:
            dce = day.coend_at(hg, gf, k)

            def gen(obj, elem, k=k):
                (i, j), (pijk, gfam, ffam) = obj, elem
                out = []
                for (a, b) in pair_order:
                    vals = []
                    for tv in t.tvalue(k, a, b):
                        C, (t1, t2) = t.alpha_at(i, j, a, b)(
                            t.ceTP(i, j, a, b).classify(k, (tv, pijk)))
                        gval = apply_power(t.tvalue(i, C, b),
                                           gfam[pair_order.index((C, b))], t1)
                        fval = apply_power(t.tvalue(j, a, C),
                                           ffam[pair_order.index((a, C))], t2)
                        vals.append(host.compose(gval, fval))
                    out.append(tuple(vals))
                return tuple(out)
            comps[k] = FinFn.from_map(dce.carrier, cod.ob(k),
                                      lambda r: gen(r[0], r[1]))
        return NatTransRep(dom, cod, comps, "M")

    def j_at(fl):
        F = fun_of[fl]
        cod = hom_ob[(fl, fl)]
        comps = {}
        for i in V.objects:
            def unit_family(s, i=i):
                out = []
                for (a, b) in pair_order:
                    out.append(tuple(F.ar(t.lam_at(a, b)(
                        t.ceTJ(a, b).classify(i, (tv, s))))
                        for tv in t.tvalue(i, a, b)))
                return tuple(out)
            comps[i] = FinFn.from_map(base.unit.ob(i), cod.ob(i), unit_family)
        return NatTransRep(base.unit, cod, comps, "j")

    M = {(fl, gl, hl): m_at((fl, gl, hl)) for fl in carrier.objects
         for gl in carrier.objects for hl in carrier.objects}
    j = {fl: j_at(fl) for fl in carrier.objects}
    e = SkewEnrichment(base, carrier, hom, M, j, name or f"Conv[{t.name}->{host.label}]")
    e.fun_of, e.nat_of = fun_of, nat_of
    return e
