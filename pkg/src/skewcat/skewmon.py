"""Skew-monoidal structures: coherence checkers, left-normality, handedness
reversal, monoidal functors, the comma structure on Set over the points
functor, and brute-force internal-hom search.

A left structure carries a: (X@Y)@Z -> X@(Y@Z), l: I@X -> X, r: X -> X@I.
A right structure is stored with the mirrored directions and is checked by
reversing it onto the left checker.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cats import SET, FinCat, ProductView, product_cat
from .functors import (Family, FunctorRep, NatTransRep, axis_arrows, check_functor,
                       check_naturality, compose_functors, const_functor, family_for,
                       identity_functor, proj_functor, tuple_functor)
from .report import Report, render
from .sets import SINGLETON, FinFn, FinSet, apply_power, power_set, prod_set

LEFT, RIGHT = "left", "right"


class SkewMonoidalStructure:
    def __init__(self, handedness, carrier, tensor: FunctorRep, unit,
                 a: NatTransRep, l: NatTransRep, r: NatTransRep, name="V"):
        self.handedness = handedness
        self.carrier = carrier
        self.tensor = tensor
        self.unit = unit
        self.a, self.l, self.r = a, l, r
        self.name = name

    def ten(self, x, y):
        return self.tensor.ob((x, y))

    def tena(self, f, g):
        return self.tensor.ar((f, g))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SkewMonoidalStructure):
            return NotImplemented
        return (self.handedness == other.handedness and self.unit == other.unit
                and self.tensor == other.tensor and self.a == other.a
                and self.l == other.l and self.r == other.r)

    def __repr__(self):
        return f"SkewMonoidalStructure({self.name}, {self.handedness})"


def nat_family(components, name="t") -> NatTransRep:
    return NatTransRep(None, None, components, name)


def reverse_handedness(s: SkewMonoidalStructure) -> SkewMonoidalStructure:
    """Swap the tensor's arguments and flip handedness; an involution."""
    prior = getattr(s, "_reverse_of", None)
    if prior is not None:
        return prior
    c = s.carrier
    if s.tensor.kind == "tabulated":
        ob = {(y, x): s.ten(x, y) for (x, y) in s.tensor._ob}
        ar = {(g, f): s.tena(f, g) for (f, g) in s.tensor._ar}
        tensor = FunctorRep(s.tensor.dom, c, ob, ar, f"rev({s.tensor.name})")
    else:
        tensor = FunctorRep(s.tensor.dom, c,
                            lambda p: s.ten(p[1], p[0]),
                            lambda p: s.tena(p[1], p[0]), f"rev({s.tensor.name})")
    a = nat_family(lambda t: s.a.at((t[2], t[1], t[0])), "a~")
    out = SkewMonoidalStructure(RIGHT if s.handedness == LEFT else LEFT, c, tensor,
                                s.unit, a, nat_family(lambda x: s.r.at(x), "l~"),
                                nat_family(lambda x: s.l.at(x), "r~"),
                                name=f"rev({s.name})")
    out._reverse_of = s
    return out


def _constraint_functors(s: SkewMonoidalStructure):
    c = s.carrier
    c3 = product_cat(c, c, c)
    p0, p1, p2 = (proj_functor(c3, i) for i in range(3))
    # (X@Y)@Z and X@(Y@Z) as composite functors on c^3
    left_pair = tuple_functor((compose_functors(s.tensor, tuple_functor((p0, p1),
                               product_cat(c, c))), p2), product_cat(c, c))
    right_pair = tuple_functor((p0, compose_functors(s.tensor, tuple_functor((p1, p2),
                                product_cat(c, c)))), product_cat(c, c))
    dom_a = compose_functors(s.tensor, left_pair, "((-@-)@-)")
    cod_a = compose_functors(s.tensor, right_pair, "(-@(-@-))")
    ident = identity_functor(c)
    dom_l = compose_functors(s.tensor, tuple_functor((const_functor(c, c, s.unit), ident),
                                                     product_cat(c, c)), "(I@-)")
    cod_r = compose_functors(s.tensor, tuple_functor((ident, const_functor(c, c, s.unit)),
                                                     product_cat(c, c)), "(-@I)")
    return dom_a, cod_a, dom_l, ident, cod_r


def product_family(fam: Family, arity: int, cats) -> Family:
    objects = tuple(itertools.product(fam.objects, repeat=arity))
    arrows = tuple(axis_arrows(cats, [fam.objects] * arity, [fam.arrows] * arity))
    return Family(objects, arrows)


def check_skew_monoidal(s: SkewMonoidalStructure, tests: Family | None = None) -> Report:
    """Naturality of a, l, r plus the five coherence equations."""
    rep = Report(f"skew-monoidal {s.name}")
    if s.handedness == RIGHT:
        inner = check_skew_monoidal(reverse_handedness(s), tests)
        inner.title = rep.title
        return inner
    if s.handedness != LEFT:
        rep.error(f"unknown handedness {s.handedness!r}")
        return rep.finalize()
    c = s.carrier
    fam = family_for(c, tests, rep)
    if fam is None:
        return rep.finalize()

    rep.merge(check_functor(s.tensor, product_family(fam, 2, (c, c)), "tensor"))
    if rep.structural:
        return rep.finalize()

    dom_a, cod_a, dom_l, ident, cod_r = _constraint_functors(s)
    a_nt = NatTransRep(dom_a, cod_a, lambda t: s.a.at(t), "a")
    l_nt = NatTransRep(dom_l, ident, lambda x: s.l.at(x), "l")
    r_nt = NatTransRep(ident, cod_r, lambda x: s.r.at(x), "r")
    for x in fam.objects:
        for nt, data in ((l_nt, s.l), (r_nt, s.r)):
            arr = data.at(x)
            want = (nt.dom.ob(x), nt.cod.ob(x))
            got = (c.src(arr), c.tgt(arr))
            if got != want:
                rep.error(f"handedness mismatch: {nt.name} at {render(x)} has type "
                          f"{render(got)}, expected {render(want)}")
    if rep.structural:
        return rep.finalize()
    check_naturality(a_nt, axis_arrows((c, c, c), [fam.objects] * 3, [fam.arrows] * 3),
                     rep, "naturality:a")
    check_naturality(l_nt, fam.arrows, rep, "naturality:l")
    check_naturality(r_nt, fam.arrows, rep, "naturality:r")

    cc, t, ta, i = c.compose, s.ten, s.tena, s.unit
    for x, y, z, w in itertools.product(fam.objects, repeat=4):
        lhs = cc(s.tena(c.id(x), s.a.at((y, z, w))),
                 cc(s.a.at((x, t(y, z), w)), ta(s.a.at((x, y, z)), c.id(w))))
        rhs = cc(s.a.at((x, y, t(z, w))), s.a.at((t(x, y), z, w)))
        rep.require(lhs == rhs, "pentagon", (x, y, z, w), lhs, rhs)
    for x, y in itertools.product(fam.objects, repeat=2):
        lhs = cc(s.l.at(t(x, y)), s.a.at((i, x, y)))
        rhs = ta(s.l.at(x), c.id(y))
        rep.require(lhs == rhs, "left-unit-assoc", (x, y), lhs, rhs)
        lhs = cc(s.a.at((x, y, i)), s.r.at(t(x, y)))
        rhs = ta(c.id(x), s.r.at(y))
        rep.require(lhs == rhs, "right-unit-assoc", (x, y), lhs, rhs)
        lhs = cc(ta(c.id(x), s.l.at(y)), cc(s.a.at((x, i, y)), ta(s.r.at(x), c.id(y))))
        rep.require(lhs == c.id(t(x, y)), "unit-triangle", (x, y), lhs, c.id(t(x, y)))
    lhs = cc(s.l.at(i), s.r.at(i))
    rep.require(lhs == c.id(i), "unit-square", (i,), lhs, c.id(i))
    return rep.finalize()


def arrow_invertible(carrier, arr) -> bool:
    if isinstance(arr, FinFn):
        return arr.is_bijective()
    if isinstance(arr, NatTransRep):
        return all(arr.at(o).is_bijective() for o in arr.dom.dom.objects)
    if isinstance(arr, CommaArrow):
        return arr.efn.is_bijective() and arrow_invertible(arr.parent.base.carrier, arr.varr)
    src, tgt = carrier.src(arr), carrier.tgt(arr)
    for g in carrier.hom(tgt, src):
        if carrier.compose(g, arr) == carrier.id(src) and \
           carrier.compose(arr, g) == carrier.id(tgt):
            return True
    return False


def check_left_normal(s: SkewMonoidalStructure, tests: Family | None = None) -> Report:
    """Invertibility of every (sampled) left unit constraint."""
    rep = Report(f"left-normal {s.name}")
    fam = family_for(s.carrier, tests, rep)
    if fam is None:
        return rep.finalize()
    # the stored l field is the left unit constraint in either handedness
    for x in fam.objects:
        arr = s.l.at(x)
        rep.require(arrow_invertible(s.carrier, arr), "left-unit-invertible",
                    (x,), arr, "invertible")
    return rep.finalize()


# ---------------------------------------------------------------------------
# monoidal functors


class MonoidalFunctorRep:
    """Lax monoidal functor between skew-monoidal structures (same handedness)."""

    def __init__(self, dom_structure, cod_structure, functor: FunctorRep,
                 phi, phi0, name="F"):
        self.dom_structure, self.cod_structure = dom_structure, cod_structure
        self.functor = functor
        self.phi = phi if isinstance(phi, NatTransRep) else nat_family(phi, "phi")
        self.phi0 = phi0
        self.name = name

    def __repr__(self):
        return f"MonoidalFunctorRep({self.name})"


def check_monoidal_functor(mf: MonoidalFunctorRep, tests: Family | None = None) -> Report:
    rep = Report(f"monoidal-functor {mf.name}")
    v, w = mf.dom_structure, mf.cod_structure
    if v.handedness != w.handedness:
        rep.error("handedness mismatch between domain and codomain structures")
        return rep.finalize()
    if v.handedness == RIGHT:
        rev = MonoidalFunctorRep(reverse_handedness(v), reverse_handedness(w), mf.functor,
                                 lambda p: mf.phi.at((p[1], p[0])), mf.phi0, mf.name)
        inner = check_monoidal_functor(rev, tests)
        inner.title = rep.title
        return inner
    fam = family_for(v.carrier, tests, rep)
    if fam is None:
        return rep.finalize()
    rep.merge(check_functor(mf.functor, fam, f"functor {mf.name}"))
    F, cw = mf.functor, w.carrier
    cc = cw.compose
    for x, y in itertools.product(fam.objects, repeat=2):
        ph = mf.phi.at((x, y))
        want = (w.ten(F.ob(x), F.ob(y)), F.ob(v.ten(x, y)))
        if (cw.src(ph), cw.tgt(ph)) != want:
            rep.error(f"phi at {render((x, y))} has wrong type")
            return rep.finalize()
    # naturality of phi in both arguments
    for u in fam.arrows:
        for pad in fam.objects:
            for (f, g) in ((u, v.carrier.id(pad)), (v.carrier.id(pad), u)):
                xs, ys = v.carrier.src(f), v.carrier.src(g)
                xt, yt = v.carrier.tgt(f), v.carrier.tgt(g)
                lhs = cc(F.ar(v.tena(f, g)), mf.phi.at((xs, ys)))
                rhs = cc(mf.phi.at((xt, yt)), w.tena(F.ar(f), F.ar(g)))
                rep.require(lhs == rhs, "mf-naturality", (f, g), lhs, rhs)
    for x, y, z in itertools.product(fam.objects, repeat=3):
        fx, fy, fz = F.ob(x), F.ob(y), F.ob(z)
        lhs = cc(F.ar(v.a.at((x, y, z))),
                 cc(mf.phi.at((v.ten(x, y), z)), w.tena(mf.phi.at((x, y)), cw.id(fz))))
        rhs = cc(mf.phi.at((x, v.ten(y, z))),
                 cc(w.tena(cw.id(fx), mf.phi.at((y, z))), w.a.at((fx, fy, fz))))
        rep.require(lhs == rhs, "mf-assoc", (x, y, z), lhs, rhs)
    for x in fam.objects:
        fx = F.ob(x)
        lhs = cc(F.ar(v.l.at(x)), cc(mf.phi.at((v.unit, x)),
                                     w.tena(mf.phi0, cw.id(fx))))
        rep.require(lhs == w.l.at(fx), "mf-left", (x,), lhs, w.l.at(fx))
        lhs = cc(mf.phi.at((x, v.unit)), cc(w.tena(cw.id(fx), mf.phi0), w.r.at(fx)))
        rep.require(lhs == F.ar(v.r.at(x)), "mf-right", (x,), lhs, F.ar(v.r.at(x)))
    return rep.finalize()


def compose_monoidal(g: MonoidalFunctorRep, f: MonoidalFunctorRep) -> MonoidalFunctorRep:
    cw = g.cod_structure.carrier
    G, F = g.functor, f.functor

    def phi(pair):
        return cw.compose(G.ar(f.phi.at(pair)),
                          g.phi.at((F.ob(pair[0]), F.ob(pair[1]))))

    phi0 = cw.compose(G.ar(f.phi0), g.phi0)
    return MonoidalFunctorRep(f.dom_structure, g.cod_structure,
                              compose_functors(G, F), phi, phi0, f"{g.name}.{f.name}")


def identity_monoidal(s: SkewMonoidalStructure) -> MonoidalFunctorRep:
    c = s.carrier
    return MonoidalFunctorRep(s, s, identity_functor(c),
                              lambda p: c.id(s.ten(*p)), c.id(s.unit), "Id")


# ---------------------------------------------------------------------------
# internal homs


class InternalHom:
    """A right adjoint [x, -] to - @ x with evaluation and transposition."""

    def __init__(self, x, hom: FunctorRep, counit, transpose):
        self.x = x
        self.hom = hom              # [x, -]
        self._counit = counit       # y -> ev_y: [x,y] @ x -> y
        self._transpose = transpose  # (z, y, g: z @ x -> y) -> z -> [x,y]

    def counit_at(self, y):
        return self._counit[y] if isinstance(self._counit, dict) else self._counit(y)

    def transpose(self, z, y, g):
        return self._transpose(z, y, g)

    def unit_at(self, s: "SkewMonoidalStructure", z):
        y = s.ten(z, self.x)
        return self.transpose(z, y, s.carrier.id(y))


def find_internal_hom(s: SkewMonoidalStructure, x, tests: Family | None = None,
                      candidate=None):
    """Brute-force right adjoint to - @ x; None when no representation exists.

    For ambient carriers a formulaic candidate (hom_ob, hom_ar, ev, transpose)
    must be supplied and is verified on the test family.
    """
    c = s.carrier
    if candidate is not None:
        rep = Report("internal-hom")
        fam = family_for(c, tests, rep)
        if fam is None:
            return None
        hom_ob, hom_ar, ev, transpose = candidate
        for z in fam.objects:
            for y in fam.objects:
                # transpose must invert ev-composition on the whole hom-set
                seen = set()
                for u in c.hom(z, hom_ob(y)):
                    g = c.compose(ev(y), s.tena(u, c.id(x)))
                    if transpose(z, y, g) != u:
                        return None
                    seen.add(g)
                if len(seen) != len(c.hom(s.ten(z, x), y)):
                    return None
        fr = FunctorRep(c, c, hom_ob, hom_ar, f"[{render(x)},-]")
        return InternalHom(x, fr, ev, transpose)

    if not c.is_finite:
        return None
    found_h, found_ev = {}, {}
    for y in c.objects:
        hit = None
        for h in c.objects:
            for ev in c.hom(s.ten(h, x), y):
                if all(_universal(s, x, h, ev, z, y) for z in c.objects):
                    hit = (h, ev)
                    break
            if hit:
                break
        if hit is None:
            return None
        found_h[y], found_ev[y] = hit[0], hit[1]

    def transpose(z, y, g):
        for u in c.hom(z, found_h[y]):
            if c.compose(found_ev[y], s.tena(u, c.id(x))) == g:
                return u
        raise ValueError("no transpose; universality should have excluded this")

    def hom_ar(g):
        y, y2 = c.src(g), c.tgt(g)
        return transpose(found_h[y], y2, c.compose(g, found_ev[y]))

    fr = FunctorRep(c, c, dict(found_h), {g: hom_ar(g) for g in c.arrows()},
                    f"[{render(x)},-]")
    ih = InternalHom(x, fr, dict(found_ev), transpose)
    if not _triangles_ok(s, ih):
        return None
    return ih


def _universal(s, x, h, ev, z, y) -> bool:
    c = s.carrier
    images = [c.compose(ev, s.tena(u, c.id(x))) for u in c.hom(z, h)]
    return len(set(images)) == len(images) == len(c.hom(s.ten(z, x), y))


def _triangles_ok(s, ih: InternalHom) -> bool:
    c = s.carrier
    for z in c.objects:
        y = s.ten(z, ih.x)
        left = c.compose(ih.counit_at(y), s.tena(ih.unit_at(s, z), c.id(ih.x)))
        if left != c.id(y):
            return False
    for y in c.objects:
        h = ih.hom.ob(y)
        if c.compose(ih.hom.ar(ih.counit_at(y)), ih.unit_at(s, h)) != c.id(h):
            return False
    return True


# ---------------------------------------------------------------------------
# the comma structure Set over points


@dataclass(frozen=True)
class CommaObj:
    eset: FinSet
    fmap: FinFn                # eset -> V(I, vobj)
    vobj: object


@dataclass(frozen=True)
class CommaArrow:
    parent: object
    dom: CommaObj
    cod: CommaObj
    efn: FinFn
    varr: object

    def __repr__(self):
        return f"CommaArrow({self.efn!r},{self.varr!r})"


class CommaBoundExceeded(Exception):
    pass


class CommaCat:
    """Comma category of finite sets over points of a tabulated base."""

    is_finite = False

    def __init__(self, base: SkewMonoidalStructure, bound: int = 8):
        if not base.carrier.is_finite:
            raise ValueError("comma construction requires a tabulated base")
        self.base = base
        self.bound = bound
        self.label = f"S({base.name})"

    def points(self, vobj) -> FinSet:
        return self.base.carrier.hom(self.base.unit, vobj)

    def obj(self, eset: FinSet, fmap: FinFn, vobj) -> CommaObj:
        if len(eset) > self.bound:
            raise CommaBoundExceeded(f"|E| = {len(eset)} exceeds bound {self.bound}")
        if fmap.dom != eset or fmap.cod != self.points(vobj):
            raise ValueError("comma object legs do not match")
        return CommaObj(eset, fmap, vobj)

    def id(self, o: CommaObj) -> CommaArrow:
        return CommaArrow(self, o, o, FinFn.identity(o.eset), self.base.carrier.id(o.vobj))

    def src(self, f: CommaArrow) -> CommaObj:
        return f.dom

    def tgt(self, f: CommaArrow) -> CommaObj:
        return f.cod

    def compose(self, g: CommaArrow, f: CommaArrow) -> CommaArrow:
        if f.cod != g.dom:
            raise ValueError("non-composable comma arrows")
        return CommaArrow(self, f.dom, g.cod, f.efn.then(g.efn),
                          self.base.carrier.compose(g.varr, f.varr))

    def hom(self, o1: CommaObj, o2: CommaObj) -> FinSet:
        v = self.base.carrier
        out = []
        for varr in v.hom(o1.vobj, o2.vobj):
            post = FinFn.from_map(self.points(o1.vobj), self.points(o2.vobj),
                                  lambda p: v.compose(varr, p))
            for images in itertools.product(o2.eset.elements, repeat=len(o1.eset)):
                efn = FinFn(o1.eset, o2.eset, images)
                if efn.then(o2.fmap) == o1.fmap.then(post):
                    out.append(CommaArrow(self, o1, o2, efn, varr))
        return FinSet(f"S({o1.vobj},{o2.vobj})", tuple(out))


@dataclass
class SVStructure:
    base: SkewMonoidalStructure
    structure: SkewMonoidalStructure
    comma: CommaCat
    p1: FunctorRep
    p2: FunctorRep
    samples: Family


def comma_sV(v: SkewMonoidalStructure, bound: int = 8,
             sample_sizes=(0, 1)) -> SVStructure:
    """The unique structure making both projections strict monoidal."""
    if v.handedness != LEFT:
        raise ValueError("comma construction is stated for left structures")
    cat = CommaCat(v, bound)
    vc = v.carrier

    def mu(o1: CommaObj, o2: CommaObj) -> FinFn:
        # pointwise tensor of points, corrected by r at the unit
        dom = prod_set(o1.eset, o2.eset)
        cod = cat.points(v.ten(o1.vobj, o2.vobj))
        return FinFn.from_map(dom, cod, lambda p: vc.compose(
            v.tena(o1.fmap(p[0]), o2.fmap(p[1])), v.r.at(v.unit)))

    def ten_ob(pair):
        o1, o2 = pair
        return cat.obj(prod_set(o1.eset, o2.eset), mu(o1, o2), v.ten(o1.vobj, o2.vobj))

    def ten_ar(pair):
        f, g = pair
        dom, cod = ten_ob((f.dom, g.dom)), ten_ob((f.cod, g.cod))
        efn = FinFn.from_map(dom.eset, cod.eset, lambda p: (f.efn(p[0]), g.efn(p[1])))
        return CommaArrow(cat, dom, cod, efn, v.tena(f.varr, g.varr))

    tensor = FunctorRep(product_cat(cat, cat), cat, ten_ob, ten_ar, "@S")
    unit_fmap = FinFn(SINGLETON, cat.points(v.unit), (vc.id(v.unit),))
    unit = cat.obj(SINGLETON, unit_fmap, v.unit)

    def a_at(t):
        o1, o2, o3 = t
        dom = ten_ob((ten_ob((o1, o2)), o3))
        cod = ten_ob((o1, ten_ob((o2, o3))))
        efn = FinFn.from_map(dom.eset, cod.eset, lambda p: (p[0][0], (p[0][1], p[1])))
        return CommaArrow(cat, dom, cod, efn, v.a.at((o1.vobj, o2.vobj, o3.vobj)))

    def l_at(o):
        dom = ten_ob((unit, o))
        efn = FinFn.from_map(dom.eset, o.eset, lambda p: p[1])
        return CommaArrow(cat, dom, o, efn, v.l.at(o.vobj))

    def r_at(o):
        cod = ten_ob((o, unit))
        efn = FinFn.from_map(o.eset, cod.eset, lambda e: (e, "*"))
        return CommaArrow(cat, o, cod, efn, v.r.at(o.vobj))

    structure = SkewMonoidalStructure(LEFT, cat, tensor, unit, nat_family(a_at, "a"),
                                      nat_family(l_at, "l"), nat_family(r_at, "r"),
                                      name=f"S({v.name})")
    p1 = FunctorRep(cat, SET, lambda o: o.eset, lambda f: f.efn, "P1")
    p2 = FunctorRep(cat, vc, lambda o: o.vobj, lambda f: f.varr, "P2")
    samples = _comma_samples(cat, sample_sizes)
    return SVStructure(v, structure, cat, p1, p2, samples)


def _comma_samples(cat: CommaCat, sizes) -> Family:
    objs = []
    alphabet = "pq"
    for vobj in cat.base.carrier.objects:
        pts = cat.points(vobj)
        for n in sizes:
            e = FinSet("{" + alphabet[:n] + f"}}@{vobj}", tuple(alphabet[:n]))
            for images in itertools.product(pts.elements, repeat=n):
                objs.append(cat.obj(e, FinFn(e, pts, images), vobj))
    arrows = []
    for o1 in objs:
        for o2 in objs:
            arrows.extend(cat.hom(o1, o2))
    return Family(tuple(objs), tuple(arrows))


def check_comma_projections(sv: SVStructure) -> Report:
    """Strict monoidality of P1 and P2 on the sampled objects, plus the
    structure's own coherence on the same family."""
    rep = Report(f"comma projections {sv.structure.name}")
    v, s = sv.base, sv.structure
    for o1 in sv.samples.objects:
        for o2 in sv.samples.objects:
            t = s.ten(o1, o2)
            rep.require(sv.p1.ob(t) == prod_set(o1.eset, o2.eset), "P1-strict",
                        (o1.vobj, o2.vobj), sv.p1.ob(t), "product")
            rep.require(sv.p2.ob(t) == v.ten(o1.vobj, o2.vobj), "P2-strict",
                        (o1.vobj, o2.vobj), sv.p2.ob(t), v.ten(o1.vobj, o2.vobj))
    rep.require(sv.p2.ob(s.unit) == v.unit, "P2-strict-unit", (), sv.p2.ob(s.unit), v.unit)
    rep.merge(check_skew_monoidal(s, sv.samples))
    return rep.finalize()


# ---------------------------------------------------------------------------
# stock structures


def cartesian_fragment_structure(sizes=(0, 1), name="cart"):
    """Tabulated cartesian structure on a full subcategory of finite sets
    closed under products. Returns (structure, obj_of, arrow_of)."""
    from .cats import SIZE_SETS, fn_label, sets_fragment
    sets = [SIZE_SETS[n] for n in sizes]
    for a in sets:
        for b in sets:
            if len(a) * len(b) not in sizes:
                raise ValueError("fragment is not closed under products")
    cat, obj_of, arrow_of = sets_fragment(sets, name)

    def pair_label(al, bl):
        return str(len(obj_of[al]) * len(obj_of[bl]))

    def pair_iso(al, bl):
        a, b = obj_of[al], obj_of[bl]
        target = obj_of[pair_label(al, bl)]
        return FinFn.from_map(prod_set(a, b), target,
                              lambda p: target.elements[prod_set(a, b).index(p)])

    ob = {}
    ar = {}
    for al in cat.objects:
        for bl in cat.objects:
            ob[(al, bl)] = pair_label(al, bl)
    for f in cat.arrows():
        for g in cat.arrows():
            ff, gf = arrow_of[f], arrow_of[g]
            iso_d = pair_iso(cat.src(f), cat.src(g))
            iso_c = pair_iso(cat.tgt(f), cat.tgt(g))
            fn = iso_d.inverse().then(prod_fn_pair(ff, gf)).then(iso_c)
            ar[(f, g)] = fn_label(fn.dom, fn.cod, fn.images)
    tensor = FunctorRep(product_cat(cat, cat), cat, ob, ar, "x")

    unit = "1"

    def decode(lbl):
        return obj_of[lbl]

    def a_at(t):
        x, y, z = t
        dom = ob[(ob[(x, y)], z)]
        cod = ob[(x, ob[(y, z)])]
        dset, cset = decode(dom), decode(cod)
        dx, dy, dz = decode(x), decode(y), decode(z)
        iso_left = pair_iso(ob[(x, y)], z)
        iso_xy = pair_iso(x, y)
        iso_right = pair_iso(x, ob[(y, z)])
        iso_yz = pair_iso(y, z)

        def fn(e):
            p, zv = iso_left.inverse()(e)
            xv, yv = iso_xy.inverse()(p)
            return iso_right((xv, iso_yz((yv, zv))))
        return fn_label(dset, cset, FinFn.from_map(dset, cset, fn).images)

    def l_at(x):
        dom = decode(ob[(unit, x)])
        iso = pair_iso(unit, x)
        return fn_label(dom, decode(x), FinFn.from_map(dom, decode(x),
                                                       lambda e: iso.inverse()(e)[1]).images)

    def r_at(x):
        cod = decode(ob[(x, unit)])
        iso = pair_iso(x, unit)
        return fn_label(decode(x), cod, FinFn.from_map(decode(x), cod,
                                                       lambda e: iso((e, "*"))).images)

    s = SkewMonoidalStructure(LEFT, cat, tensor, unit,
                              nat_family({(x, y, z): a_at((x, y, z))
                                          for x in cat.objects for y in cat.objects
                                          for z in cat.objects}, "a"),
                              nat_family({x: l_at(x) for x in cat.objects}, "l"),
                              nat_family({x: r_at(x) for x in cat.objects}, "r"),
                              name=name)
    return s, obj_of, arrow_of


def prod_fn_pair(f: FinFn, g: FinFn) -> FinFn:
    return FinFn.from_map(prod_set(f.dom, g.dom), prod_set(f.cod, g.cod),
                          lambda p: (f(p[0]), g(p[1])))


def set_cartesian_structure() -> SkewMonoidalStructure:
    """Cartesian structure on the ambient category of finite sets."""
    tensor = FunctorRep(product_cat(SET, SET), SET,
                        lambda p: prod_set(*p), lambda p: prod_fn_pair(*p), "x")

    def a_at(t):
        x, y, z = t
        return FinFn.from_map(prod_set(prod_set(x, y), z), prod_set(x, prod_set(y, z)),
                              lambda e: (e[0][0], (e[0][1], e[1])))

    def l_at(x):
        return FinFn.from_map(prod_set(SINGLETON, x), x, lambda e: e[1])

    def r_at(x):
        return FinFn.from_map(x, prod_set(x, SINGLETON), lambda e: (e, "*"))

    return SkewMonoidalStructure(LEFT, SET, tensor, SINGLETON, nat_family(a_at, "a"),
                                 nat_family(l_at, "l"), nat_family(r_at, "r"), "Set(x)")


def monoid_set_structure(elements, unit_el, mult: dict, name="M") -> SkewMonoidalStructure:
    """X @ Y = M x X x Y on finite sets, for a finite monoid M."""
    m = FinSet(name, tuple(elements))

    def ten_ob(p):
        return prod_set(m, p[0], p[1])

    def ten_ar(p):
        f, g = p
        return FinFn.from_map(ten_ob((f.dom, g.dom)), ten_ob((f.cod, g.cod)),
                              lambda e: (e[0], f(e[1]), g(e[2])))

    tensor = FunctorRep(product_cat(SET, SET), SET, ten_ob, ten_ar, f"{name}xXxY")

    def a_at(t):
        x, y, z = t
        dom = prod_set(m, prod_set(m, x, y), z)
        cod = prod_set(m, x, prod_set(m, y, z))
        return FinFn.from_map(dom, cod, lambda e: (
            mult[(e[0], e[1][0])], e[1][1], (e[0], e[1][2], e[2])))

    def l_at(x):
        return FinFn.from_map(prod_set(m, SINGLETON, x), x, lambda e: e[2])

    def r_at(x):
        return FinFn.from_map(x, prod_set(m, x, SINGLETON), lambda e: (unit_el, e, "*"))

    return SkewMonoidalStructure(LEFT, SET, tensor, SINGLETON, nat_family(a_at, "a"),
                                 nat_family(l_at, "l"), nat_family(r_at, "r"), name)


def object_k_structure(k: FinSet, name=None) -> SkewMonoidalStructure:
    """A @ B = Set(K, B) x A on finite sets, with unit K."""
    def homk(b):
        return power_set(k, b)

    def ten_ob(p):
        return prod_set(homk(p[1]), p[0])

    def ten_ar(p):
        f, g = p
        return FinFn.from_map(ten_ob((f.dom, g.dom)), ten_ob((f.cod, g.cod)),
                              lambda e: (tuple(g(y) for y in e[0]), f(e[1])))

    tensor = FunctorRep(product_cat(SET, SET), SET, ten_ob, ten_ar, "K-tensor")

    def a_at(t):
        x, y, z = t
        dom = prod_set(homk(z), prod_set(homk(y), x))
        cod = prod_set(homk(prod_set(homk(z), y)), x)
        return FinFn.from_map(dom, cod, lambda e: (
            tuple((e[0], apply_power(k, e[1][0], p)) for p in k), e[1][1]))

    def l_at(x):
        return FinFn.from_map(prod_set(homk(x), k), x,
                              lambda e: apply_power(k, e[0], e[1]))

    def r_at(x):
        ident = tuple(k.elements)
        return FinFn.from_map(x, prod_set(homk(k), x), lambda e: (ident, e))

    return SkewMonoidalStructure(LEFT, SET, tensor, k, nat_family(a_at, "a"),
                                 nat_family(l_at, "l"), nat_family(r_at, "r"),
                                 name or f"K={k.label}")


def commutative_monoid_strict_structure(name, elements, unit_el,
                                        mult: dict) -> SkewMonoidalStructure:
    """A commutative monoid as a one-object strict monoidal category.

    Commutativity is required for the tensor-on-arrows to be a functor.
    """
    from .cats import monoid_cat
    elements = tuple(elements)
    for m in elements:
        for n in elements:
            if mult[(m, n)] != mult[(n, m)]:
                raise ValueError("one-object strict structures need commutativity")
    c = monoid_cat(name, elements, unit_el, mult)
    ob = {("*", "*"): "*"}
    ar = {(f, g): mult[(f, g)] for f in elements for g in elements}
    tensor = FunctorRep(product_cat(c, c), c, ob, ar, "mult")
    return SkewMonoidalStructure(LEFT, c, tensor, "*",
                                 nat_family({("*", "*", "*"): unit_el}, "a"),
                                 nat_family({"*": unit_el}, "l"),
                                 nat_family({"*": unit_el}, "r"), name)


def z2_strict_structure() -> SkewMonoidalStructure:
    mult = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}
    return commutative_monoid_strict_structure("Z2-strict", ("e", "s"), "e", mult)


def discrete_monoid_structure(elements, unit_el, mult: dict, name="disc-mon"):
    from .cats import discrete_cat
    c = discrete_cat(tuple(elements), name)
    ob = {(x, y): mult[(x, y)] for x in c.objects for y in c.objects}
    ar = {(c.id(x), c.id(y)): c.id(mult[(x, y)]) for x in c.objects for y in c.objects}
    tensor = FunctorRep(product_cat(c, c), c, ob, ar, "mult")
    return SkewMonoidalStructure(
        LEFT, c, tensor, unit_el,
        nat_family(lambda t: c.id(ob[(ob[(t[0], t[1])], t[2])]), "a"),
        nat_family(lambda x: c.id(x), "l"), nat_family(lambda x: c.id(x), "r"), name)
