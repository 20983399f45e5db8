"""Monoidal comonads, the skew-monoidal structure they induce (tensor
X @ QY), locally weak comonads, and the skew enrichment they induce
(hom(SA, B) with co-Kleisli-shaped composition).
"""
from __future__ import annotations

import itertools

from .enrich import SkewEnrichment
from .functors import Family, FunctorRep, NatTransRep, check_functor, family_for
from .report import Report, render
from .sets import FinFn, FinSet, apply_power, power_set, prod_set, SINGLETON
from .skewmon import (LEFT, InternalHom, MonoidalFunctorRep, SkewMonoidalStructure,
                      check_monoidal_functor, nat_family, set_cartesian_structure)


class MonoidalComonad:
    def __init__(self, base: SkewMonoidalStructure, Q: FunctorRep, phi, phi0,
                 delta, eps, name="Q"):
        self.base = base
        self.Q = Q
        self.phi = phi if isinstance(phi, NatTransRep) else nat_family(phi, "phi")
        self.phi0 = phi0
        self.delta = delta if isinstance(delta, NatTransRep) else nat_family(delta, "delta")
        self.eps = eps if isinstance(eps, NatTransRep) else nat_family(eps, "eps")
        self.name = name

    def as_monoidal_functor(self) -> MonoidalFunctorRep:
        return MonoidalFunctorRep(self.base, self.base, self.Q, self.phi, self.phi0,
                                  self.name)

    def __repr__(self):
        return f"MonoidalComonad({self.name} on {self.base.name})"


def check_monoidal_comonad(q: MonoidalComonad, tests: Family | None = None) -> Report:
    """Comonad laws plus lax monoidality of Q and monoidality of delta, eps."""
    rep = Report(f"monoidal-comonad {q.name}")
    v = q.base
    c = v.carrier
    fam = family_for(c, tests, rep)
    if fam is None:
        return rep.finalize()
    for x in fam.objects:
        ph = q.phi.at((x, x))
        want = (v.ten(q.Q.ob(x), q.Q.ob(x)), q.Q.ob(v.ten(x, x)))
        if (c.src(ph), c.tgt(ph)) != want:
            rep.error(f"phi at {render((x, x))} is not typed QX@QY -> Q(X@Y)")
            return rep.finalize()
    rep.merge(check_monoidal_functor(q.as_monoidal_functor(), tests))
    comp = c.compose
    for u in fam.arrows:
        x, y = c.src(u), c.tgt(u)
        lhs = comp(q.delta.at(y), q.Q.ar(u))
        rhs = comp(q.Q.ar(q.Q.ar(u)), q.delta.at(x))
        rep.require(lhs == rhs, "delta-natural", (u,), lhs, rhs)
        lhs = comp(q.eps.at(y), q.Q.ar(u))
        rhs = comp(u, q.eps.at(x))
        rep.require(lhs == rhs, "eps-natural", (u,), lhs, rhs)
    for x in fam.objects:
        qx = q.Q.ob(x)
        lhs = comp(q.Q.ar(q.delta.at(x)), q.delta.at(x))
        rhs = comp(q.delta.at(qx), q.delta.at(x))
        rep.require(lhs == rhs, "delta-coassoc", (x,), lhs, rhs)
        lhs = comp(q.eps.at(qx), q.delta.at(x))
        rep.require(lhs == c.id(qx), "counit-left", (x,), lhs, c.id(qx))
        lhs = comp(q.Q.ar(q.eps.at(x)), q.delta.at(x))
        rep.require(lhs == c.id(qx), "counit-right", (x,), lhs, c.id(qx))
    for x, y in itertools.product(fam.objects, repeat=2):
        txy = v.ten(x, y)
        lhs = comp(q.delta.at(txy), q.phi.at((x, y)))
        rhs = comp(q.Q.ar(q.phi.at((x, y))),
                   comp(q.phi.at((q.Q.ob(x), q.Q.ob(y))),
                        v.tena(q.delta.at(x), q.delta.at(y))))
        rep.require(lhs == rhs, "delta-monoidal", (x, y), lhs, rhs)
        lhs = comp(q.eps.at(txy), q.phi.at((x, y)))
        rhs = v.tena(q.eps.at(x), q.eps.at(y))
        rep.require(lhs == rhs, "eps-monoidal", (x, y), lhs, rhs)
    lhs = comp(q.delta.at(v.unit), q.phi0)
    rhs = comp(q.Q.ar(q.phi0), q.phi0)
    rep.require(lhs == rhs, "delta-monoidal-unit", (v.unit,), lhs, rhs)
    lhs = comp(q.eps.at(v.unit), q.phi0)
    rep.require(lhs == c.id(v.unit), "eps-monoidal-unit", (v.unit,), lhs, c.id(v.unit))
    return rep.finalize()


def induced_skew_monoidal(q: MonoidalComonad, name=None) -> SkewMonoidalStructure:
    """Tensor X @ QY with a = (1@phi).(1@(1@delta)).a, l = eps.l, r = (1@phi0).r."""
    v = q.base
    c = v.carrier

    def ten_ob(p):
        return v.ten(p[0], q.Q.ob(p[1]))

    def ten_ar(p):
        return v.tena(p[0], q.Q.ar(p[1]))

    tensor = FunctorRep(v.tensor.dom, c, ten_ob, ten_ar, f"@{q.name}")
    comp = c.compose

    def a_at(t):
        x, y, z = t
        qy, qz = q.Q.ob(y), q.Q.ob(z)
        return comp(v.tena(c.id(x), q.phi.at((y, qz))),
                    comp(v.tena(c.id(x), v.tena(c.id(qy), q.delta.at(z))),
                         v.a.at((x, qy, qz))))

    def l_at(x):
        return comp(q.eps.at(x), v.l.at(q.Q.ob(x)))

    def r_at(x):
        return comp(v.tena(c.id(x), q.phi0), v.r.at(x))

    if c.is_finite and v.tensor.kind == "tabulated":
        pairs = list(itertools.product(c.objects, repeat=2))
        tensor = FunctorRep(v.tensor.dom, c, {p: ten_ob(p) for p in pairs},
                            {p: ten_ar(p) for p in itertools.product(c.arrows(), repeat=2)},
                            f"@{q.name}")
        a = nat_family({t: a_at(t) for t in itertools.product(c.objects, repeat=3)}, "a")
        l = nat_family({x: l_at(x) for x in c.objects}, "l")
        r = nat_family({x: r_at(x) for x in c.objects}, "r")
    else:
        a, l, r = nat_family(a_at, "a"), nat_family(l_at, "l"), nat_family(r_at, "r")
    return SkewMonoidalStructure(v.handedness, c, tensor, v.unit, a, l, r,
                                 name or f"{v.name}[{q.name}]")


class NotClosed(Exception):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"base is not closed at {render(obj)}")


def induced_internal_hom(q: MonoidalComonad, closed_witness, tests: Family) -> tuple:
    """Internal homs [QX, Y] for the induced tensor, with the adjunction
    verified on the test family: triangle identities plus an exact
    hom-set-cardinality match either way around.

    closed_witness maps an object x to an InternalHom for the base tensor,
    or None; None raises NotClosed with the witness object.
    """
    v = q.base
    c = v.carrier
    induced = induced_skew_monoidal(q)
    rep = Report(f"induced-internal-hom {q.name}")
    homs = {}
    for x in tests.objects:
        qx = q.Q.ob(x)
        ih = closed_witness(qx)
        if ih is None:
            raise NotClosed(qx)
        homs[x] = ih
    for x in tests.objects:
        ih = homs[x]
        qx = q.Q.ob(x)
        for z in tests.objects:
            zqx = induced.ten(z, x)
            # triangle at z: ev . (eta' @ Q1) = id on z @ Qx
            eta = ih.transpose(z, zqx, c.id(zqx))
            lhs = c.compose(ih.counit_at(zqx), induced.tena(eta, c.id(x)))
            rep.require(lhs == c.id(zqx), "triangle-counit", (x, z), lhs, c.id(zqx))
            for y in tests.objects:
                left = len(c.hom(induced.ten(z, x), y))
                right = len(c.hom(z, ih.hom.ob(y)))
                rep.require(left == right, "adjunction-cardinality", (z, x, y),
                            left, right)
        for y in tests.objects:
            h = ih.hom.ob(y)
            hqx = induced.ten(h, x)
            eta_h = ih.transpose(h, hqx, c.id(hqx))
            lhs = c.compose(ih.hom.ar(ih.counit_at(y)), eta_h)
            rep.require(lhs == c.id(h), "triangle-unit", (x, y), lhs, c.id(h))
    return homs, rep.finalize()


class LocallyWeakComonad:
    def __init__(self, q: MonoidalComonad, host: SkewEnrichment, S: FunctorRep,
                 delta_s, eps_s, psi, name="S"):
        self.q = q
        self.host = host
        self.S = S
        self.delta_s = delta_s if isinstance(delta_s, NatTransRep) else \
            nat_family(delta_s, "deltaS")
        self.eps_s = eps_s if isinstance(eps_s, NatTransRep) else nat_family(eps_s, "epsS")
        self.psi = psi if isinstance(psi, NatTransRep) else nat_family(psi, "psi")
        self.name = name

    def __repr__(self):
        return f"LocallyWeakComonad({self.name} over {self.q.name})"


def check_locally_weak_comonad(w: LocallyWeakComonad,
                               tests: Family | None = None) -> Report:
    """The four compatibility axioms between psi, the monoidal comonad, and
    the carrier comonad, plus naturality and carrier-comonad laws."""
    rep = Report(f"locally-weak-comonad {w.name}")
    e = w.host
    v, q = e.base, w.q
    c = e.carrier
    vc = v.carrier
    fam = family_for(c, tests, rep)
    if fam is None:
        return rep.finalize()
    for a, b in itertools.islice(itertools.product(fam.objects, repeat=2), 1):
        ps = w.psi.at((a, b))
        want = (q.Q.ob(e.hom_ob(a, b)), e.hom_ob(w.S.ob(a), w.S.ob(b)))
        if (vc.src(ps), vc.tgt(ps)) != want:
            rep.error(f"psi at {render((a, b))} is not typed Q hom(A,B) -> hom(SA,SB)")
            return rep.finalize()
    rep.merge(check_functor(w.S, fam, "carrier comonad functor"))
    comp, ccomp = vc.compose, c.compose
    S = w.S.ob
    for u in fam.arrows:
        x, y = c.src(u), c.tgt(u)
        lhs = ccomp(w.delta_s.at(y), w.S.ar(u))
        rhs = ccomp(w.S.ar(w.S.ar(u)), w.delta_s.at(x))
        rep.require(lhs == rhs, "deltaS-natural", (u,), lhs, rhs)
        lhs = ccomp(w.eps_s.at(y), w.S.ar(u))
        rep.require(lhs == ccomp(u, w.eps_s.at(x)), "epsS-natural", (u,), lhs,
                    ccomp(u, w.eps_s.at(x)))
    for x in fam.objects:
        sx = S(x)
        lhs = ccomp(w.S.ar(w.delta_s.at(x)), w.delta_s.at(x))
        rhs = ccomp(w.delta_s.at(sx), w.delta_s.at(x))
        rep.require(lhs == rhs, "deltaS-coassoc", (x,), lhs, rhs)
        lhs = ccomp(w.eps_s.at(sx), w.delta_s.at(x))
        rep.require(lhs == c.id(sx), "counitS-left", (x,), lhs, c.id(sx))
        lhs = ccomp(w.S.ar(w.eps_s.at(x)), w.delta_s.at(x))
        rep.require(lhs == c.id(sx), "counitS-right", (x,), lhs, c.id(sx))
    for u in fam.arrows:
        for x in fam.objects:
            for f, g in ((u, c.id(x)), (c.id(x), u)):
                src = (c.tgt(f), c.src(g))
                tgt = (c.src(f), c.tgt(g))
                lhs = comp(w.psi.at(tgt), q.Q.ar(e.hom_ar(f, g)))
                rhs = comp(e.hom_ar(w.S.ar(f), w.S.ar(g)), w.psi.at(src))
                rep.require(lhs == rhs, "psi-natural", (f, g), lhs, rhs)
    for a, b, d in itertools.product(fam.objects, repeat=3):
        hb, ha = e.hom_ob(b, d), e.hom_ob(a, b)
        lhs = comp(w.psi.at((a, d)), comp(q.Q.ar(e.M.at((a, b, d))), q.phi.at((hb, ha))))
        rhs = comp(e.M.at((S(a), S(b), S(d))), v.tena(w.psi.at((b, d)), w.psi.at((a, b))))
        rep.require(lhs == rhs, "psi-multiplicative", (a, b, d), lhs, rhs)
    for a, b in itertools.product(fam.objects, repeat=2):
        hab = e.hom_ob(a, b)
        lhs = comp(e.hom_ar(w.delta_s.at(a), c.id(S(S(b)))),
                   comp(w.psi.at((S(a), S(b))),
                        comp(q.Q.ar(w.psi.at((a, b))), q.delta.at(hab))))
        rhs = comp(e.hom_ar(c.id(S(a)), w.delta_s.at(b)), w.psi.at((a, b)))
        rep.require(lhs == rhs, "psi-delta-compatible", (a, b), lhs, rhs)
        lhs = comp(e.hom_ar(c.id(S(a)), w.eps_s.at(b)), w.psi.at((a, b)))
        rhs = comp(e.hom_ar(w.eps_s.at(a), c.id(b)), q.eps.at(hab))
        rep.require(lhs == rhs, "psi-eps-compatible", (a, b), lhs, rhs)
    for a in fam.objects:
        lhs = comp(w.psi.at((a, a)), comp(q.Q.ar(e.j.at(a)), q.phi0))
        rhs = e.j.at(S(a))
        rep.require(lhs == rhs, "psi-unit-compatible", (a,), lhs, rhs)
    return rep.finalize()


def induced_skew_enrichment(w: LocallyWeakComonad, name=None) -> SkewEnrichment:
    """hom'(A,B) = hom(SA,B) over the comonad-induced base; composition
    hom(delta,1) . M . (1 @ psi), unit hom(eps,1) . j."""
    e = w.host
    v, q = e.base, w.q
    c = e.carrier
    vc = v.carrier
    base2 = induced_skew_monoidal(q)
    S = w.S.ob

    def hob(ab):
        return e.hom_ob(S(ab[0]), ab[1])

    def har(fg):
        return e.hom_ar(w.S.ar(fg[0]), fg[1])

    hom = FunctorRep(e.hom.dom, vc, hob, har, "hom.S")
    if c.is_finite and e.hom.kind == "tabulated":
        hom = FunctorRep(e.hom.dom, vc,
                         {(a, b): hob((a, b)) for a in c.objects for b in c.objects},
                         {(f, g): har((f, g)) for f in c.arrows() for g in c.arrows()},
                         "hom.S")

    def m_at(abc):
        a, b, d = abc
        return vc.compose(
            e.hom_ar(w.delta_s.at(a), c.id(d)),
            vc.compose(e.M.at((S(S(a)), S(b), d)),
                       v.tena(vc.id(e.hom_ob(S(b), d)), w.psi.at((S(a), b)))))

    def j_at(a):
        return vc.compose(e.hom_ar(w.eps_s.at(a), c.id(a)), e.j.at(a))

    if c.is_finite:
        M = {t: m_at(t) for t in itertools.product(c.objects, repeat=3)}
        j = {a: j_at(a) for a in c.objects}
    else:
        M, j = m_at, j_at
    return SkewEnrichment(base2, c, hom, M, j, name or f"{e.name}[{w.name}]")


# ---------------------------------------------------------------------------
# stock comonads


def identity_comonad(base: SkewMonoidalStructure) -> MonoidalComonad:
    c = base.carrier
    if c.is_finite:
        Q = FunctorRep(c, c, {x: x for x in c.objects}, {f: f for f in c.arrows()}, "Id")
        phi = nat_family({p: c.id(base.ten(*p)) for p in
                          itertools.product(c.objects, repeat=2)}, "phi")
        delta = nat_family({x: c.id(x) for x in c.objects}, "delta")
        eps = nat_family({x: c.id(x) for x in c.objects}, "eps")
    else:
        Q = FunctorRep(c, c, lambda x: x, lambda f: f, "Id")
        phi = nat_family(lambda p: c.id(base.ten(*p)), "phi")
        delta = nat_family(lambda x: c.id(x), "delta")
        eps = nat_family(lambda x: c.id(x), "eps")
    return MonoidalComonad(base, Q, phi, c.id(base.unit), delta, eps, "Id")


def environment_comonad(elements, unit_el, mult: dict,
                        base: SkewMonoidalStructure | None = None) -> MonoidalComonad:
    """QX = E x X on cartesian finite sets, for a finite monoid E."""
    base = base or set_cartesian_structure()
    eset = FinSet("E", tuple(elements))

    def q_ob(x):
        return prod_set(eset, x)

    def q_ar(f):
        return FinFn.from_map(q_ob(f.dom), q_ob(f.cod), lambda p: (p[0], f(p[1])))

    Q = FunctorRep(base.carrier, base.carrier, q_ob, q_ar, "Env")

    def phi(pair):
        x, y = pair
        dom = prod_set(q_ob(x), q_ob(y))
        cod = q_ob(prod_set(x, y))
        return FinFn.from_map(dom, cod,
                              lambda p: (mult[(p[0][0], p[1][0])], (p[0][1], p[1][1])))

    phi0 = FinFn.from_map(SINGLETON, q_ob(SINGLETON), lambda _: (unit_el, "*"))

    def delta(x):
        return FinFn.from_map(q_ob(x), q_ob(q_ob(x)), lambda p: (p[0], p))

    def eps(x):
        return FinFn.from_map(q_ob(x), x, lambda p: p[1])

    q = MonoidalComonad(base, Q, phi, phi0, delta, eps, f"Env({','.join(elements)})")
    q.monoid = (tuple(elements), unit_el, dict(mult))
    q.eset = eset
    return q


def environment_lwc(elements, unit_el, mult: dict, host: SkewEnrichment | None = None,
                    psi_formula=None) -> LocallyWeakComonad:
    """The environment comonad acting on the cartesian self-enrichment with the
    multiplication-twisted strength psi(e, f)(d, x) = (e.d, f(x))."""
    from .enrich import set_self_enrichment
    q = environment_comonad(elements, unit_el, mult)
    host = host or set_self_enrichment(q.base)
    eset = q.eset

    def psi(ab):
        a, b = ab
        dom = prod_set(eset, power_set(a, b))
        ea, eb = prod_set(eset, a), prod_set(eset, b)
        cod = power_set(ea, eb)
        formula = psi_formula or (lambda a_, e, t, d, x: (mult[(e, d)],
                                                          apply_power(a_, t, x)))
        return FinFn.from_map(dom, cod, lambda p: tuple(
            formula(a, p[0], p[1], d, x) for (d, x) in ea))

    return LocallyWeakComonad(q, host, q.Q, lambda x: q.delta.at(x),
                              lambda x: q.eps.at(x), psi, f"EnvS({','.join(elements)})")


def z2_tabulated_comonad() -> MonoidalComonad:
    """Q = identity functor on the one-object Z/2 strict base, with
    delta = eps = phi = phi0 = the involution."""
    from .skewmon import z2_strict_structure
    base = z2_strict_structure()
    c = base.carrier
    Q = FunctorRep(c, c, {"*": "*"}, {"e": "e", "s": "s"}, "Qz2")
    return MonoidalComonad(base, Q, nat_family({("*", "*"): "s"}, "phi"), "s",
                           nat_family({"*": "s"}, "delta"),
                           nat_family({"*": "s"}, "eps"), "Qz2")


def z2_tabulated_lwc() -> LocallyWeakComonad:
    from .cats import discrete_cat
    from .enrich import VCategory, enrichment_from_vcategory
    q = z2_tabulated_comonad()
    carrier = discrete_cat(("P",), "pt")
    vc = VCategory(q.base, ("P",), {("P", "P"): "*"}, {("P", "P", "P"): "s"},
                   {"P": "s"}, "Z2pt")
    host = enrichment_from_vcategory(vc, carrier)
    S = FunctorRep(carrier, carrier, {"P": "P"}, {carrier.id("P"): carrier.id("P")}, "S")
    return LocallyWeakComonad(q, host, S,
                              nat_family({"P": carrier.id("P")}, "deltaS"),
                              nat_family({"P": carrier.id("P")}, "epsS"),
                              nat_family({("P", "P"): "s"}, "psi"), "Sz2")


def identity_lwc(e: SkewEnrichment) -> LocallyWeakComonad:
    from .functors import identity_functor, tabulate_functor
    c = e.carrier
    q = identity_comonad(e.base)
    S = identity_functor(c)
    if c.is_finite:
        S = tabulate_functor(S)
        delta_s = nat_family({x: c.id(x) for x in c.objects}, "deltaS")
        eps_s = nat_family({x: c.id(x) for x in c.objects}, "epsS")
        psi = nat_family({(a, b): e.base.carrier.id(e.hom_ob(a, b))
                          for a in c.objects for b in c.objects}, "psi")
    else:
        delta_s = nat_family(lambda x: c.id(x), "deltaS")
        eps_s = nat_family(lambda x: c.id(x), "epsS")
        psi = nat_family(lambda ab: e.base.carrier.id(e.hom_ob(*ab)), "psi")
    return LocallyWeakComonad(q, e, S, delta_s, eps_s, psi, "Id")
