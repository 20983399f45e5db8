"""Skew promonoidal categories and skew proactegories with coend-level
coherence data, their exhaustive checkers, and the small-category /
presheaf constructions that produce them.

Handedness: a left structure's alpha maps the split composite
int^B T(X,B;C) x T(Y,A;B) to int^Z T(Z,A;C) x P(X,Y;Z) and lambda maps
carrier homs into int^X T(X,A;B) x JX; a right structure reverses alpha,
lambda and rho. Every axiom is evaluated pointwise on coend generators,
classifying through the canonical representatives cached per structure.
"""
from __future__ import annotations

import itertools

from .cats import FinCat, discrete_cat, product_cat, terminal_cat
from .functors import (FunctorRep, ProfunctorRep, check_functor, check_profunctor,
                       tabulate_functor, tabulate_profunctor)
from .limits import Coend, TwoSided, coend
from .report import Report, render
from .sets import SINGLETON, EMPTY, FinFn, FinSet, prod_set

LEFT, RIGHT = "left", "right"


def _prod3(f1: FinFn, f2: FinFn, f3: FinFn) -> FinFn:
    dom = prod_set(f1.dom, f2.dom, f3.dom)
    cod = prod_set(f1.cod, f2.cod, f3.cod)
    return FinFn.from_map(dom, cod, lambda p: (f1(p[0]), f2(p[1]), f3(p[2])))


def _prod2(f1: FinFn, f2: FinFn) -> FinFn:
    dom = prod_set(f1.dom, f2.dom)
    cod = prod_set(f1.cod, f2.cod)
    return FinFn.from_map(dom, cod, lambda p: (f1(p[0]), f2(p[1])))


def refit(fn: FinFn, dom: FinSet, cod: FinSet) -> FinFn:
    """The same table between equal-content carriers built under other labels."""
    if dom.elements != fn.dom.elements or cod.elements != fn.cod.elements:
        raise ValueError("refit between carriers with different elements")
    return FinFn(dom, cod, fn.images)


class SkewPromonoidal:
    """(P, J, alpha, lambda, rho) on a finite carrier."""

    def __init__(self, handedness, carrier: FinCat, P: ProfunctorRep, J: FunctorRep,
                 alpha, lam, rho, name="V"):
        self.handedness = handedness
        self.carrier = carrier
        self.P, self.J = P, J
        self.alpha, self.lam, self.rho = alpha, lam, rho   # dicts of FinFn
        self.name = name
        self._cache: dict = {}

    def _ce(self, key, builder) -> Coend:
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def pvalue(self, i, j, k) -> FinSet:
        return self.P.value((i, j, k))

    def jvalue(self, i) -> FinSet:
        return self.J.ob(i)

    # int^w P(w,k;d) x P(i,j;w)
    def nest_left(self, i, j, k, d) -> Coend:
        c = self.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.pvalue(m, k, d), self.pvalue(i, j, n)),
                lambda f, g: _prod2(self.P.action((f, c.id(k), c.id(d))),
                                    self.P.action((c.id(i), c.id(j), g))))
            return coend(c, h, f"PPl{render((i, j, k, d))}")
        return self._ce(("PPl", i, j, k, d), build)

    # int^v P(i,v;d) x P(j,k;v)
    def nest_right(self, i, j, k, d) -> Coend:
        c = self.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.pvalue(i, m, d), self.pvalue(j, k, n)),
                lambda f, g: _prod2(self.P.action((c.id(i), f, c.id(d))),
                                    self.P.action((c.id(j), c.id(k), g))))
            return coend(c, h, f"PPr{render((i, j, k, d))}")
        return self._ce(("PPr", i, j, k, d), build)

    # int^u P(u,x;w) x J(u)
    def unit_first(self, x, w) -> Coend:
        c = self.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.pvalue(m, x, w), self.jvalue(n)),
                lambda f, g: _prod2(self.P.action((f, c.id(x), c.id(w))), self.J.ar(g)))
            return coend(c, h, f"PJ1{render((x, w))}")
        return self._ce(("PJ1", x, w), build)

    # int^v P(x,v;w) x J(v)
    def unit_second(self, x, w) -> Coend:
        c = self.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.pvalue(x, m, w), self.jvalue(n)),
                lambda f, g: _prod2(self.P.action((c.id(x), f, c.id(w))), self.J.ar(g)))
            return coend(c, h, f"PJ2{render((x, w))}")
        return self._ce(("PJ2", x, w), build)

    def alpha_at(self, i, j, k, d) -> FinFn:
        return self.alpha[(i, j, k, d)]

    def alpha_invertible(self) -> bool:
        return all(fn.is_bijective() for fn in self.alpha.values())

    def __repr__(self):
        return f"SkewPromonoidal({self.name}, {self.handedness})"


class SkewProactegory:
    """(T, alpha, lambda) over a skew-promonoidal base of the same handedness."""

    def __init__(self, base: SkewPromonoidal, carrier: FinCat, T: ProfunctorRep,
                 alpha, lam, name="A"):
        self.base = base
        self.carrier = carrier
        self.T = T
        self.alpha, self.lam = alpha, lam     # dicts of FinFn
        self.handedness = base.handedness
        self.name = name
        self._cache: dict = {}

    def _ce(self, key, builder) -> Coend:
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def tvalue(self, x, a, b) -> FinSet:
        return self.T.value((x, a, b))

    # int^B T(x,B;c) x T(y,a;B)
    def ceTT(self, x, y, a, c) -> Coend:
        A, V = self.carrier, self.base.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.tvalue(x, m, c), self.tvalue(y, a, n)),
                lambda f, g: _prod2(self.T.action((V.id(x), f, A.id(c))),
                                    self.T.action((V.id(y), A.id(a), g))))
            return coend(A, h, f"TT{render((x, y, a, c))}")
        return self._ce(("TT", x, y, a, c), build)

    # int^Z T(Z,a;c) x P(x,y;Z)
    def ceTP(self, x, y, a, c) -> Coend:
        A, V = self.carrier, self.base.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.tvalue(m, a, c), self.base.pvalue(x, y, n)),
                lambda f, g: _prod2(self.T.action((f, A.id(a), A.id(c))),
                                    self.base.P.action((V.id(x), V.id(y), g))))
            return coend(V, h, f"TP{render((x, y, a, c))}")
        return self._ce(("TP", x, y, a, c), build)

    # int^X T(X,a;b) x J(X)
    def ceTJ(self, a, b) -> Coend:
        A, V = self.carrier, self.base.carrier

        def build():
            h = TwoSided(
                lambda m, n: prod_set(self.tvalue(m, a, b), self.base.jvalue(n)),
                lambda f, g: _prod2(self.T.action((f, A.id(a), A.id(b))),
                                    self.base.J.ar(g)))
            return coend(V, h, f"TJ{render((a, b))}")
        return self._ce(("TJ", a, b), build)

    # int^{B,C} T(x,C;d) x T(y,B;C) x T(z,a;B)
    def ceTTT(self, x, y, z, a, d) -> Coend:
        A, V = self.carrier, self.base.carrier
        AA = product_cat(A, A)

        def build():
            def value(m, n):
                return prod_set(self.tvalue(x, m[1], d), self.tvalue(y, m[0], n[1]),
                                self.tvalue(z, a, n[0]))

            def action(f, g):
                return _prod3(self.T.action((V.id(x), f[1], A.id(d))),
                              self.T.action((V.id(y), f[0], g[1])),
                              self.T.action((V.id(z), A.id(a), g[0])))
            return coend(AA, TwoSided(value, action), f"TTT{render((x, y, z, a, d))}")
        return self._ce(("TTT", x, y, z, a, d), build)

    # int^{U,W} T(W,a;d) x P(U,z;W) x P(x,y;U)
    def ceTPP(self, x, y, z, a, d) -> Coend:
        A, V = self.carrier, self.base.carrier
        VV = product_cat(V, V)

        def build():
            def value(m, n):
                return prod_set(self.tvalue(m[1], a, d), self.base.pvalue(m[0], z, n[1]),
                                self.base.pvalue(x, y, n[0]))

            def action(f, g):
                return _prod3(self.T.action((f[1], A.id(a), A.id(d))),
                              self.base.P.action((f[0], V.id(z), g[1])),
                              self.base.P.action((V.id(x), V.id(y), g[0])))
            return coend(VV, TwoSided(value, action), f"TPP{render((x, y, z, a, d))}")
        return self._ce(("TPP", x, y, z, a, d), build)

    # int^C A(C,b) x T(x,a;C)
    def ceAT(self, x, a, b) -> Coend:
        A, V = self.carrier, self.base.carrier

        def build():
            def value(m, n):
                return prod_set(A.hom(m, b), self.tvalue(x, a, n))

            def action(f, g):
                pre = FinFn.from_map(A.hom(A.tgt(f), b), A.hom(A.src(f), b),
                                     lambda h: A.compose(h, f))
                return _prod2(pre, self.T.action((V.id(x), A.id(a), g)))
            return coend(A, TwoSided(value, action), f"AT{render((x, a, b))}")
        return self._ce(("AT", x, a, b), build)

    # int^C T(x,C;b) x A(a,C)
    def ceTA(self, x, a, b) -> Coend:
        A, V = self.carrier, self.base.carrier

        def build():
            def value(m, n):
                return prod_set(self.tvalue(x, m, b), A.hom(a, n))

            def action(f, g):
                post = FinFn.from_map(A.hom(a, A.src(g)), A.hom(a, A.tgt(g)),
                                      lambda h: A.compose(g, h))
                return _prod2(self.T.action((V.id(x), f, A.id(b))), post)
            return coend(A, TwoSided(value, action), f"TA{render((x, a, b))}")
        return self._ce(("TA", x, a, b), build)

    # int^{U,W} T(W,a;b) x P(U,x;W) x J(U)
    def ceTPJ(self, x, a, b) -> Coend:
        A, V = self.carrier, self.base.carrier
        VV = product_cat(V, V)

        def build():
            def value(m, n):
                return prod_set(self.tvalue(m[1], a, b), self.base.pvalue(m[0], x, n[1]),
                                self.base.jvalue(n[0]))

            def action(f, g):
                return _prod3(self.T.action((f[1], A.id(a), A.id(b))),
                              self.base.P.action((f[0], V.id(x), g[1])),
                              self.base.J.ar(g[0]))
            return coend(VV, TwoSided(value, action), f"TPJ{render((x, a, b))}")
        return self._ce(("TPJ", x, a, b), build)

    def alpha_at(self, x, y, a, c) -> FinFn:
        return self.alpha[(x, y, a, c)]

    def lam_at(self, a, b) -> FinFn:
        return self.lam[(a, b)]

    def alpha_invertible(self) -> bool:
        return all(fn.is_bijective() for fn in self.alpha.values())

    def lam_invertible(self) -> bool:
        return all(fn.is_bijective() for fn in self.lam.values())

    def lam_surjective(self) -> bool:
        return all(len(set(fn.images)) == len(fn.cod) for fn in self.lam.values())

    def is_proactegory(self) -> bool:
        return self.alpha_invertible() and self.lam_invertible()

    def __repr__(self):
        return f"SkewProactegory({self.name}, {self.handedness})"


# ---------------------------------------------------------------------------
# induced maps on the cached coends (for naturality squares)


def _tt_induced(t: SkewProactegory, fx, fy, fa, fc) -> FinFn:
    A, V = t.carrier, t.base.carrier
    dom = t.ceTT(V.tgt(fx), V.tgt(fy), A.tgt(fa), A.src(fc))
    cod = t.ceTT(V.src(fx), V.src(fy), A.src(fa), A.tgt(fc))

    def gen(obj, elem):
        t1 = t.T.action((fx, A.id(obj), fc))(elem[0])
        t2 = t.T.action((fy, fa, A.id(obj)))(elem[1])
        return obj, (t1, t2)
    return FinFn.from_map(dom.carrier, cod.carrier,
                          lambda r: cod.classify(*gen(r[0], r[1])))


def _tp_induced(t: SkewProactegory, fx, fy, fa, fc) -> FinFn:
    A, V = t.carrier, t.base.carrier
    dom = t.ceTP(V.tgt(fx), V.tgt(fy), A.tgt(fa), A.src(fc))
    cod = t.ceTP(V.src(fx), V.src(fy), A.src(fa), A.tgt(fc))

    def gen(obj, elem):
        tv = t.T.action((V.id(obj), fa, fc))(elem[0])
        pv = t.base.P.action((fx, fy, V.id(obj)))(elem[1])
        return obj, (tv, pv)
    return FinFn.from_map(dom.carrier, cod.carrier,
                          lambda r: cod.classify(*gen(r[0], r[1])))


def _tj_induced(t: SkewProactegory, fa, fb) -> FinFn:
    A, V = t.carrier, t.base.carrier
    dom = t.ceTJ(A.tgt(fa), A.src(fb))
    cod = t.ceTJ(A.src(fa), A.tgt(fb))

    def gen(obj, elem):
        return obj, (t.T.action((V.id(obj), fa, fb))(elem[0]), elem[1])
    return FinFn.from_map(dom.carrier, cod.carrier,
                          lambda r: cod.classify(*gen(r[0], r[1])))


# ---------------------------------------------------------------------------
# axiom paths


def _axiom_assoc(t: SkewProactegory, rep: Report, x, y, z, a, d) -> None:
    """The three-fold associativity diagram at (x, y, z, a, d)."""
    key = (x, y, z, a, d)
    if t.handedness == LEFT:
        dom, cod = t.ceTTT(*key), t.ceTPP(*key)
        for (b, c), elem in dom.carrier:
            t1, t2, t3 = elem
            u, (tu, pu) = t.alpha_at(x, y, b, d)(t.ceTT(x, y, b, d).classify(c, (t1, t2)))
            w, (tw, pw) = t.alpha_at(u, z, a, d)(t.ceTT(u, z, a, d).classify(b, (tu, t3)))
            lhs = cod.classify((u, w), (tw, pw, pu))
            v, (tv, pv) = t.alpha_at(y, z, a, c)(t.ceTT(y, z, a, c).classify(b, (t2, t3)))
            w2, (tw2, pw2) = t.alpha_at(x, v, a, d)(
                t.ceTT(x, v, a, d).classify(c, (t1, tv)))
            u2, (pa, pb) = t.base.alpha_at(x, y, z, w2)(
                t.base.nest_right(x, y, z, w2).classify(v, (pw2, pv)))
            rhs = cod.classify((u2, w2), (tw2, pa, pb))
            rep.require(lhs == rhs, "proact-assoc", ((b, c), elem) + key, lhs, rhs)
    else:
        dom, cod = t.ceTPP(*key), t.ceTTT(*key)
        for (u, w), elem in dom.carrier:
            tw, puz, pxy = elem
            b, (tu, t3) = t.alpha_at(u, z, a, d)(t.ceTP(u, z, a, d).classify(w, (tw, puz)))
            c, (t1, t2) = t.alpha_at(x, y, b, d)(t.ceTP(x, y, b, d).classify(u, (tu, pxy)))
            lhs = cod.classify((b, c), (t1, t2, t3))
            v, (pxv, pyz) = t.base.alpha_at(x, y, z, w)(
                t.base.nest_left(x, y, z, w).classify(u, (puz, pxy)))
            c2, (t1b, tv) = t.alpha_at(x, v, a, d)(
                t.ceTP(x, v, a, d).classify(w, (tw, pxv)))
            b2, (t2b, t3b) = t.alpha_at(y, z, a, c2)(
                t.ceTP(y, z, a, c2).classify(v, (tv, pyz)))
            rhs = cod.classify((b2, c2), (t1b, t2b, t3b))
            rep.require(lhs == rhs, "proact-assoc", ((u, w), elem) + key, lhs, rhs)


def _axiom_left_unit(t: SkewProactegory, rep: Report, x, a, b) -> None:
    """The lambda/alpha compatibility diagram at (x, a, b)."""
    A, V = t.carrier, t.base.carrier
    if t.handedness == LEFT:
        dom, cod = t.ceAT(x, a, b), t.ceTPJ(x, a, b)
        for c, (g, tv) in dom.carrier:
            u, (tu, su) = t.lam_at(c, b)(g)
            w, (tw, pw) = t.alpha_at(u, x, a, b)(t.ceTT(u, x, a, b).classify(c, (tu, tv)))
            lhs = cod.classify((u, w), (tw, pw, su))
            tval = t.T.action((V.id(x), A.id(a), g))(tv)
            u0, (p0, s0) = t.base.lam[(x, x)](V.id(x))
            rhs = cod.classify((u0, x), (tval, p0, s0))
            rep.require(lhs == rhs, "proact-left-unit", (c, g, tv, x, a, b), lhs, rhs)
    else:
        dom = t.ceTPJ(x, a, b)
        for (u, w), (tw, puxw, su) in dom.carrier:
            c, (tu, tv) = t.alpha_at(u, x, a, b)(t.ceTP(u, x, a, b).classify(w, (tw, puxw)))
            g = t.lam_at(c, b)(t.ceTJ(c, b).classify(u, (tu, su)))
            lhs = t.T.action((V.id(x), A.id(a), g))(tv)
            v = t.base.lam[(x, w)](t.base.unit_first(x, w).classify(u, (puxw, su)))
            rhs = t.T.action((v, A.id(a), A.id(b)))(tw)
            rep.require(lhs == rhs, "proact-left-unit",
                        ((u, w), (tw, puxw, su), x, a, b), lhs, rhs)


def _axiom_right_unit(t: SkewProactegory, rep: Report, x, a, b) -> None:
    """The lambda/rho compatibility diagram at (x, a, b)."""
    A, V = t.carrier, t.base.carrier
    if t.handedness == LEFT:
        dom = t.ceTA(x, a, b)
        for c, (tc, f) in dom.carrier:
            v, (tv, sv) = t.lam_at(a, c)(f)
            w, (tw, pw) = t.alpha_at(x, v, a, b)(t.ceTT(x, v, a, b).classify(c, (tc, tv)))
            g = t.base.rho[(x, w)](t.base.unit_second(x, w).classify(v, (pw, sv)))
            lhs = t.T.action((g, A.id(a), A.id(b)))(tw)
            rhs = t.T.action((V.id(x), f, A.id(b)))(tc)
            rep.require(lhs == rhs, "proact-right-unit", (c, tc, f, x, a, b), lhs, rhs)
    else:
        for tval in t.tvalue(x, a, b):
            v, (pxv, sv) = t.base.rho[(x, x)](V.id(x))
            c, (tc, tv) = t.alpha_at(x, v, a, b)(t.ceTP(x, v, a, b).classify(x, (tval, pxv)))
            f = t.lam_at(a, c)(t.ceTJ(a, c).classify(v, (tv, sv)))
            lhs = t.T.action((V.id(x), f, A.id(b)))(tc)
            rep.require(lhs == tval, "proact-right-unit", (tval, x, a, b), lhs, tval)


def check_skew_proactegory(t: SkewProactegory, tests=None) -> Report:
    """Functoriality of T, naturality of alpha and lambda, three coend axioms."""
    rep = Report(f"proactegory {t.name}")
    A, V = t.carrier, t.base.carrier
    if not A.is_finite or not V.is_finite:
        rep.error("proactegory checks need tabulated carriers")
        return rep.finalize()
    if t.T.variances != ("-", "-", "+"):
        rep.error(f"T declares variances {t.T.variances}, expected (-,-,+)")
        return rep.finalize()
    rep.merge(check_profunctor(t.T, f"T of {t.name}"))
    if rep.structural:
        return rep.finalize()

    v_arrows, a_arrows = list(V.arrows()), list(A.arrows())
    for fx in v_arrows:
        for y, a, c in itertools.product(V.objects, A.objects, A.objects):
            _alpha_nat_square(t, rep, fx, V.id(y), A.id(a), A.id(c), "naturality:alpha:x")
    for fy in v_arrows:
        for x, a, c in itertools.product(V.objects, A.objects, A.objects):
            _alpha_nat_square(t, rep, V.id(x), fy, A.id(a), A.id(c), "naturality:alpha:y")
    for fa in a_arrows:
        for x, y, c in itertools.product(V.objects, V.objects, A.objects):
            _alpha_nat_square(t, rep, V.id(x), V.id(y), fa, A.id(c), "naturality:alpha:a")
    for fc in a_arrows:
        for x, y, a in itertools.product(V.objects, V.objects, A.objects):
            _alpha_nat_square(t, rep, V.id(x), V.id(y), A.id(a), fc, "naturality:alpha:c")
    for fa in a_arrows:
        for b in A.objects:
            _lam_nat_square(t, rep, fa, A.id(b), "naturality:lambda:a")
    for fb in a_arrows:
        for a in A.objects:
            _lam_nat_square(t, rep, A.id(a), fb, "naturality:lambda:b")

    for x, y, z in itertools.product(V.objects, repeat=3):
        for a, d in itertools.product(A.objects, repeat=2):
            _axiom_assoc(t, rep, x, y, z, a, d)
    for x in V.objects:
        for a, b in itertools.product(A.objects, repeat=2):
            _axiom_left_unit(t, rep, x, a, b)
            _axiom_right_unit(t, rep, x, a, b)
    return rep.finalize()


def _alpha_nat_square(t, rep, fx, fy, fa, fc, axiom):
    A, V = t.carrier, t.base.carrier
    tt, tp = _tt_induced(t, fx, fy, fa, fc), _tp_induced(t, fx, fy, fa, fc)
    hi = (V.tgt(fx), V.tgt(fy), A.tgt(fa), A.src(fc))
    lo = (V.src(fx), V.src(fy), A.src(fa), A.tgt(fc))
    if t.handedness == LEFT:
        lhs = tt.then(t.alpha[lo])
        rhs = t.alpha[hi].then(tp)
    else:
        lhs = tp.then(t.alpha[lo])
        rhs = t.alpha[hi].then(tt)
    rep.require(lhs == rhs, axiom, (fx, fy, fa, fc), lhs, rhs)


def _lam_nat_square(t, rep, fa, fb, axiom):
    A = t.carrier
    tj = _tj_induced(t, fa, fb)
    hi = (A.tgt(fa), A.src(fb))
    lo = (A.src(fa), A.tgt(fb))
    hom_map = FinFn.from_map(A.hom(*hi), A.hom(*lo),
                             lambda h: A.compose(fb, A.compose(h, fa)))
    if t.handedness == LEFT:
        lhs = hom_map.then(t.lam[lo])
        rhs = t.lam[hi].then(tj)
    else:
        lhs = tj.then(t.lam[lo])
        rhs = t.lam[hi].then(hom_map)
    rep.require(lhs == rhs, axiom, (fa, fb), lhs, rhs)


# ---------------------------------------------------------------------------
# promonoidal checks (axioms 1-3 through the canonical self-proaction)


def as_self_proaction(p: SkewPromonoidal) -> SkewProactegory:
    """Every promonoidal base acts on itself with T = P."""
    t = SkewProactegory(p, p.carrier, p.P, {}, {}, name=f"{p.name}-self")
    alpha, lam = {}, {}
    for i, j, k, d in itertools.product(p.carrier.objects, repeat=4):
        src = p.alpha[(i, j, k, d)]
        if p.handedness == LEFT:
            alpha[(i, j, k, d)] = refit(src, t.ceTT(i, j, k, d).carrier,
                                        t.ceTP(i, j, k, d).carrier)
        else:
            alpha[(i, j, k, d)] = refit(src, t.ceTP(i, j, k, d).carrier,
                                        t.ceTT(i, j, k, d).carrier)
    for a, b in itertools.product(p.carrier.objects, repeat=2):
        src = p.lam[(a, b)]
        if p.handedness == LEFT:
            lam[(a, b)] = refit(src, src.dom, t.ceTJ(a, b).carrier)
        else:
            lam[(a, b)] = refit(src, t.ceTJ(a, b).carrier, src.cod)
    t.alpha, t.lam = alpha, lam
    return t


def _promonoidal_rho_axioms(p: SkewPromonoidal, rep: Report) -> None:
    V = p.carrier
    if p.handedness == RIGHT:
        for i, j, e in itertools.product(V.objects, repeat=3):
            for pval in p.pvalue(i, j, e):
                w, (p0, s0) = p.rho[(i, i)](V.id(i))
                v, (p1, q1) = p.alpha_at(i, w, j, e)(
                    p.nest_left(i, w, j, e).classify(i, (pval, p0)))
                g = p.lam[(j, v)](p.unit_first(j, v).classify(w, (q1, s0)))
                lhs = p.P.action((V.id(i), g, V.id(e)))(p1)
                rep.require(lhs == pval, "promonoidal-rho-triangle", (pval, i, j, e),
                            lhs, pval)
        for e in V.objects:
            for s in p.jvalue(e):
                w0, (p0, s0) = p.rho[(e, e)](V.id(e))
                g = p.lam[(w0, e)](p.unit_first(w0, e).classify(e, (p0, s)))
                lhs = p.J.ar(g)(s0)
                rep.require(lhs == s, "promonoidal-unit-square", (s, e), lhs, s)
    else:
        for i, j, e in itertools.product(V.objects, repeat=3):
            for pval in p.pvalue(i, j, e):
                w, (p0, s0) = p.lam[(j, j)](V.id(j))
                u0, (p1, q1) = p.alpha_at(i, w, j, e)(
                    p.nest_right(i, w, j, e).classify(j, (pval, p0)))
                g = p.rho[(i, u0)](p.unit_second(i, u0).classify(w, (q1, s0)))
                lhs = p.P.action((g, V.id(j), V.id(e)))(p1)
                rep.require(lhs == pval, "promonoidal-rho-triangle", (pval, i, j, e),
                            lhs, pval)
        for e in V.objects:
            for s in p.jvalue(e):
                i0, (p0, s0) = p.lam[(e, e)](V.id(e))
                g = p.rho[(i0, e)](p.unit_second(i0, e).classify(e, (p0, s)))
                lhs = p.J.ar(g)(s0)
                rep.require(lhs == s, "promonoidal-unit-square", (s, e), lhs, s)


def _rho_nat_square(p: SkewPromonoidal, rep, fi, fd, axiom):
    V = p.carrier
    hi = (V.tgt(fi), V.src(fd))
    lo = (V.src(fi), V.tgt(fd))
    hom_map = FinFn.from_map(V.hom(*hi), V.hom(*lo),
                             lambda h: V.compose(fd, V.compose(h, fi)))
    dom_hi, dom_lo = p.unit_second(*hi), p.unit_second(*lo)

    def gen(obj, elem):
        return obj, (p.P.action((fi, V.id(obj), fd))(elem[0]), elem[1])
    induced = FinFn.from_map(dom_hi.carrier, dom_lo.carrier,
                             lambda r: dom_lo.classify(*gen(r[0], r[1])))
    if p.handedness == LEFT:
        lhs = induced.then(p.rho[lo])
        rhs = p.rho[hi].then(hom_map)
    else:
        lhs = hom_map.then(p.rho[lo])
        rhs = p.rho[hi].then(induced)
    rep.require(lhs == rhs, axiom, (fi, fd), lhs, rhs)


def check_skew_promonoidal(p: SkewPromonoidal, tests=None) -> Report:
    """Functoriality of P and J, naturality of the constraints, five axioms."""
    rep = Report(f"promonoidal {p.name}")
    V = p.carrier
    if not V.is_finite:
        rep.error("promonoidal checks need a tabulated carrier")
        return rep.finalize()
    if p.P.variances != ("-", "-", "+"):
        rep.error(f"P declares variances {p.P.variances}, expected (-,-,+)")
        return rep.finalize()
    rep.merge(check_profunctor(p.P, f"P of {p.name}"))
    rep.merge(check_functor(p.J, title=f"J of {p.name}"))
    if rep.structural:
        return rep.finalize()
    self_t = as_self_proaction(p)
    inner = check_skew_proactegory(self_t)
    for v in inner.violations:
        rep.violations.append(v)
    rep.structural.extend(inner.structural)
    for fi in V.arrows():
        for d in V.objects:
            _rho_nat_square(p, rep, fi, V.id(d), "naturality:rho:x")
    for fd in V.arrows():
        for i in V.objects:
            _rho_nat_square(p, rep, V.id(i), fd, "naturality:rho:w")
    _promonoidal_rho_axioms(p, rep)
    return rep.finalize()


# ---------------------------------------------------------------------------
# the small-category and presheaf constructions


def category_to_promonoidal(c: FinCat) -> SkewPromonoidal:
    """Right promonoidal structure on the discrete carrier of c's objects:
    P(i,j;k) = c(i,j) when j = k, alpha (v,u) -> (vu, v), rho picks 1_i."""
    if not c.is_finite:
        raise ValueError("the construction needs a tabulated category")
    V = discrete_cat(c.objects, f"|{c.label}|")

    def pvalue(objs):
        i, j, k = objs
        return c.hom(i, j) if j == k else EMPTY

    def paction(arrows):
        objs = tuple(V.src(f) for f in arrows)
        return FinFn.identity(pvalue(objs))

    from .cats import SET
    P = ProfunctorRep(((V, "-"), (V, "-"), (V, "+")), pvalue, paction, "P")
    J = FunctorRep(V, SET, lambda i: SINGLETON,
                   lambda f: FinFn.identity(SINGLETON), "J")
    p = SkewPromonoidal(RIGHT, V, tabulate_profunctor(P), _tabulate_j(J, V), {}, {}, {},
                        name=f"P[{c.label}]")
    alpha, lam, rho = {}, {}, {}
    for i, j, k, d in itertools.product(V.objects, repeat=4):
        dom, cod = p.nest_left(i, j, k, d), p.nest_right(i, j, k, d)

        def gen(robj, elem):
            v, u = elem
            return d, (c.compose(v, u), v)
        alpha[(i, j, k, d)] = FinFn.from_map(dom.carrier, cod.carrier,
                                             lambda r: cod.classify(*gen(r[0], r[1])))
    for j, d in itertools.product(V.objects, repeat=2):
        dom = p.unit_first(j, d)
        lam[(j, d)] = FinFn.from_map(dom.carrier, V.hom(j, d), lambda r: V.id(j))
    for i, d in itertools.product(V.objects, repeat=2):
        cod = p.unit_second(i, d)
        if i == d:
            rho[(i, d)] = FinFn.from_map(V.hom(i, d), cod.carrier,
                                         lambda _: cod.classify(i, (c.id(i), "*")))
        else:
            rho[(i, d)] = FinFn(V.hom(i, d), cod.carrier, ())
    p.alpha, p.lam, p.rho = alpha, lam, rho
    return p


def _tabulate_j(j: FunctorRep, V: FinCat) -> FunctorRep:
    from .cats import SET
    return FunctorRep(V, SET, {i: j.ob(i) for i in V.objects},
                      {f: j.ar(f) for f in V.arrows()}, j.name)


def presheaf_to_proaction(c: FinCat, f: FunctorRep) -> SkewProactegory:
    """Right proaction of c's promonoidal base on the point: T(i) = F(i),
    alpha (x,u) -> (F(u)(x), x)."""
    base = category_to_promonoidal(c)
    A = terminal_cat()
    V = base.carrier

    def tvalue(objs):
        return f.ob(objs[0])

    def taction(arrows):
        return FinFn.identity(tvalue((V.src(arrows[0]), None, None)))

    T = ProfunctorRep(((V, "-"), (A, "-"), (A, "+")), tvalue, taction, "T")
    t = SkewProactegory(base, A, tabulate_profunctor(T), {}, {}, name=f"T[{f.name}]")
    alpha, lam = {}, {}
    for x, y in itertools.product(V.objects, repeat=2):
        dom, cod = t.ceTP(x, y, "*", "*"), t.ceTT(x, y, "*", "*")

        def gen(robj, elem):
            tv, u = elem
            return "*", (f.ar(u)(tv), tv)
        alpha[(x, y, "*", "*")] = FinFn.from_map(dom.carrier, cod.carrier,
                                                 lambda r: cod.classify(*gen(r[0], r[1])))
    dom = t.ceTJ("*", "*")
    lam[("*", "*")] = FinFn.from_map(dom.carrier, A.hom("*", "*"), lambda r: A.id("*"))
    t.alpha, t.lam = alpha, lam
    return t


def is_torsor(t: SkewProactegory) -> bool:
    """alpha invertible and lambda surjective, for presheaf proactions."""
    return t.alpha_invertible() and t.lam_surjective()


# ---------------------------------------------------------------------------
# proactive functors and naturals


class ProactiveFunctorRep:
    def __init__(self, dom_t: SkewProactegory, cod_t: SkewProactegory,
                 functor: FunctorRep, phi: dict, name="F"):
        self.dom_t, self.cod_t = dom_t, cod_t
        self.functor = functor
        self.phi = phi               # (x, a, b) -> FinFn T(x,a;b) -> S(x,Fa;Fb)
        self.name = name


def check_proactive_functor(pf: ProactiveFunctorRep) -> Report:
    rep = Report(f"proactive-functor {pf.name}")
    t, s = pf.dom_t, pf.cod_t
    if t.base is not s.base and t.base != s.base:
        rep.error("proactegories live over different promonoidal bases")
        return rep.finalize()
    if t.handedness != s.handedness:
        rep.error("handedness mismatch")
        return rep.finalize()
    A, B, V = t.carrier, s.carrier, t.base.carrier
    F = pf.functor
    rep.merge(check_functor(F, title=f"underlying {pf.name}"))

    def phi(x, a, b):
        return pf.phi[(x, a, b)]

    # naturality of phi in all three variables
    for (fx, fa, fb) in _axis_triples(V, A):
        x_hi, x_lo = V.tgt(fx), V.src(fx)
        a_hi, a_lo = A.tgt(fa), A.src(fa)
        b_lo, b_hi = A.src(fb), A.tgt(fb)
        lhs = t.T.action((fx, fa, fb)).then(phi(x_lo, a_lo, b_hi))
        rhs = phi(x_hi, a_hi, b_lo).then(s.T.action((fx, F.ar(fa), F.ar(fb))))
        rep.require(lhs == rhs, "naturality:phi", (fx, fa, fb), lhs, rhs)

    for x, y in itertools.product(V.objects, repeat=2):
        for a, c in itertools.product(A.objects, repeat=2):
            if t.handedness == LEFT:
                dom = t.ceTT(x, y, a, c)
                cod = s.ceTP(x, y, F.ob(a), F.ob(c))
                for b, (t1, t2) in dom.carrier:
                    z, (tv, pv) = t.alpha_at(x, y, a, c)(dom.classify(b, (t1, t2)))
                    lhs = cod.classify(z, (phi(z, a, c)(tv), pv))
                    stt = s.ceTT(x, y, F.ob(a), F.ob(c))
                    z2, (tv2, pv2) = s.alpha_at(x, y, F.ob(a), F.ob(c))(
                        stt.classify(F.ob(b), (phi(x, b, c)(t1), phi(y, a, b)(t2))))
                    rhs = cod.classify(z2, (tv2, pv2))
                    rep.require(lhs == rhs, "proactive-assoc", (x, y, a, c, b, (t1, t2)),
                                lhs, rhs)
            else:
                dom = t.ceTP(x, y, a, c)
                cod = s.ceTT(x, y, F.ob(a), F.ob(c))
                for z, (tv, pv) in dom.carrier:
                    b, (t1, t2) = t.alpha_at(x, y, a, c)(dom.classify(z, (tv, pv)))
                    lhs = cod.classify(F.ob(b), (phi(x, b, c)(t1), phi(y, a, b)(t2)))
                    stp = s.ceTP(x, y, F.ob(a), F.ob(c))
                    b2, (t1b, t2b) = s.alpha_at(x, y, F.ob(a), F.ob(c))(
                        stp.classify(z, (phi(z, a, c)(tv), pv)))
                    rhs = cod.classify(b2, (t1b, t2b))
                    rep.require(lhs == rhs, "proactive-assoc", (x, y, a, c, z, (tv, pv)),
                                lhs, rhs)
    for a, b in itertools.product(A.objects, repeat=2):
        if t.handedness == LEFT:
            cod = s.ceTJ(F.ob(a), F.ob(b))
            for g in A.hom(a, b):
                x, (tv, sv) = t.lam_at(a, b)(g)
                lhs = cod.classify(x, (phi(x, a, b)(tv), sv))
                rhs = s.lam_at(F.ob(a), F.ob(b))(F.ar(g))
                rep.require(lhs == rhs, "proactive-unit", (g,), lhs, rhs)
        else:
            dom = t.ceTJ(a, b)
            cod = s.ceTJ(F.ob(a), F.ob(b))
            for x, (tv, sv) in dom.carrier:
                lhs = F.ar(t.lam_at(a, b)(dom.classify(x, (tv, sv))))
                rhs = s.lam_at(F.ob(a), F.ob(b))(cod.classify(x, (phi(x, a, b)(tv), sv)))
                rep.require(lhs == rhs, "proactive-unit", (x, tv, sv), lhs, rhs)
    return rep.finalize()


def _axis_triples(V: FinCat, A: FinCat):
    for fx in V.arrows():
        for a, b in itertools.product(A.objects, repeat=2):
            yield fx, A.id(a), A.id(b)
    for fa in A.arrows():
        for x, b in itertools.product(V.objects, A.objects):
            yield V.id(x), fa, A.id(b)
    for fb in A.arrows():
        for x, a in itertools.product(V.objects, A.objects):
            yield V.id(x), A.id(a), fb


class ProactiveNatRep:
    def __init__(self, dom_f: ProactiveFunctorRep, cod_f: ProactiveFunctorRep,
                 theta: dict, name="theta"):
        self.dom_f, self.cod_f = dom_f, cod_f
        self.theta = theta           # a -> carrier arrow Fa -> Ga
        self.name = name


def check_proactive_nat(pn: ProactiveNatRep) -> Report:
    rep = Report(f"proactive-natural {pn.name}")
    pf, pg = pn.dom_f, pn.cod_f
    t, s = pf.dom_t, pf.cod_t
    A, B, V = t.carrier, s.carrier, t.base.carrier
    F, G = pf.functor, pg.functor
    for u in A.arrows():
        lhs = B.compose(pn.theta[A.tgt(u)], F.ar(u))
        rhs = B.compose(G.ar(u), pn.theta[A.src(u)])
        rep.require(lhs == rhs, "underlying-natural", (u,), lhs, rhs)
    for x in V.objects:
        for a, b in itertools.product(A.objects, repeat=2):
            lhs = pf.phi[(x, a, b)].then(
                s.T.action((V.id(x), B.id(F.ob(a)), pn.theta[b])))
            rhs = pg.phi[(x, a, b)].then(
                s.T.action((V.id(x), pn.theta[a], B.id(G.ob(b)))))
            rep.require(lhs == rhs, "proactive-square", (x, a, b), lhs, rhs)
    return rep.finalize()


def identity_proactive_functor(t: SkewProactegory) -> ProactiveFunctorRep:
    from .functors import identity_functor, tabulate_functor as _tab
    F = _tab(identity_functor(t.carrier))
    phi = {(x, a, b): FinFn.identity(t.tvalue(x, a, b))
           for x in t.base.carrier.objects
           for a in t.carrier.objects for b in t.carrier.objects}
    return ProactiveFunctorRep(t, t, F, phi, "Id")
