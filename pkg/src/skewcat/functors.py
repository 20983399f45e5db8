"""Functors, natural transformations, profunctors, and their checkers.

A FunctorRep is tabulated (dict tables over a finite domain, checked
exhaustively) or rule-based (callables, checked on a caller-supplied test
family). Multi-argument functors take a ProductView domain and tuples as
arguments; contravariance is expressed with an OpView domain.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cats import SET, FinCat, OpView, ProductView, product_cat
from .report import Report
from .sets import FinFn, FinSet


class FunctorRep:
    def __init__(self, dom, cod, ob, ar, name: str = "F"):
        self.dom, self.cod, self.name = dom, cod, name
        self._ob, self._ar = ob, ar

    @property
    def kind(self) -> str:
        return "tabulated" if isinstance(self._ob, dict) else "rule"

    def ob(self, a):
        return self._ob[a] if isinstance(self._ob, dict) else self._ob(a)

    def ar(self, f):
        return self._ar[f] if isinstance(self._ar, dict) else self._ar(f)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FunctorRep):
            return NotImplemented
        if self.kind != "tabulated" or other.kind != "tabulated":
            return False
        return self._ob == other._ob and self._ar == other._ar

    def __hash__(self):
        if self.kind == "tabulated":
            return hash((frozenset(self._ob.items()), frozenset(self._ar.items())))
        return id(self)

    def __repr__(self):
        return f"FunctorRep({self.name}, {self.kind})"


def tabulate_functor(f: FunctorRep, name: str | None = None) -> FunctorRep:
    """Materialize a functor on a finite domain into tables."""
    dom = f.dom
    ob = {a: f.ob(a) for a in dom.objects}
    ar = {u: f.ar(u) for u in dom.arrows()}
    return FunctorRep(dom, f.cod, ob, ar, name or f.name)


def identity_functor(c) -> FunctorRep:
    return FunctorRep(c, c, lambda a: a, lambda f: f, name=f"Id({c.label})")


def compose_functors(outer: FunctorRep, inner: FunctorRep, name=None) -> FunctorRep:
    return FunctorRep(inner.dom, outer.cod,
                      lambda a: outer.ob(inner.ob(a)),
                      lambda f: outer.ar(inner.ar(f)),
                      name or f"{outer.name}.{inner.name}")


def tuple_functor(stems, cod: ProductView, name="tuple") -> FunctorRep:
    dom = stems[0].dom
    return FunctorRep(dom, cod,
                      lambda a: tuple(s.ob(a) for s in stems),
                      lambda f: tuple(s.ar(f) for s in stems), name)


def proj_functor(dom: ProductView, i: int) -> FunctorRep:
    return FunctorRep(dom, dom.factors[i], lambda a: a[i], lambda f: f[i], f"pi{i}")


def const_functor(dom, cod, obj, name="const") -> FunctorRep:
    return FunctorRep(dom, cod, lambda a: obj, lambda f: cod.id(obj), name)


def hom_functor(c: FinCat, a) -> FunctorRep:
    """The Set-valued functor c(a, -) with postcomposition action."""
    def ar(g):
        dom, cod = c.hom(a, c.src(g)), c.hom(a, c.tgt(g))
        return FinFn.from_map(dom, cod, lambda f: c.compose(g, f))
    return FunctorRep(c, SET, lambda b: c.hom(a, b), ar, name=f"{c.label}({a},-)")


def hom_profunctor(c: FinCat) -> ProfunctorRep:
    """c(-, -) as a profunctor over (c^op, c)."""
    def value(objs):
        return c.hom(objs[0], objs[1])

    def action(arrows):
        f, g = arrows
        dom, cod = c.hom(c.tgt(f), c.src(g)), c.hom(c.src(f), c.tgt(g))
        return FinFn.from_map(dom, cod, lambda h: c.compose(g, c.compose(h, f)))

    return ProfunctorRep(((c, "-"), (c, "+")), value, action, f"{c.label}(-,-)")


class NatTransRep:
    """Family of cod-category arrows indexed by the objects of dom.dom."""

    def __init__(self, dom: FunctorRep | None, cod: FunctorRep | None, components,
                 name: str = "t"):
        self.dom, self.cod, self.name = dom, cod, name
        self._components = components

    @property
    def kind(self) -> str:
        return "tabulated" if isinstance(self._components, dict) else "rule"

    def at(self, a):
        return self._components[a] if isinstance(self._components, dict) else self._components(a)

    def components_table(self) -> dict:
        if self.kind != "tabulated":
            raise ValueError("rule-based components are not enumerable")
        return self._components

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NatTransRep):
            return NotImplemented
        if self.kind != "tabulated" or other.kind != "tabulated":
            return False
        return self._components == other._components

    def __hash__(self):
        if self.kind == "tabulated":
            return hash(frozenset(self._components.items()))
        return id(self)

    def __repr__(self):
        return f"NatTransRep({self.name}, {self.kind})"


def tabulate_nat(nt: NatTransRep, objects, name=None) -> NatTransRep:
    return NatTransRep(nt.dom, nt.cod, {a: nt.at(a) for a in objects}, name or nt.name)


@dataclass(frozen=True)
class Family:
    """Objects and arrows used to sample checks on non-finite carriers."""

    objects: tuple
    arrows: tuple

    @staticmethod
    def exhaustive(c) -> "Family":
        return Family(tuple(c.objects), tuple(c.arrows()))


def family_for(carrier, tests: Family | None, rep: Report) -> Family | None:
    """Resolve the test family: exhaustive for finite carriers, else required."""
    if carrier.is_finite:
        return Family.exhaustive(carrier)
    if tests is None:
        rep.error(f"carrier {carrier.label} is not finite and no test family was given")
        return None
    rep.sampled = True
    return tests


def check_functor(f: FunctorRep, tests: Family | None = None,
                  title: str | None = None) -> Report:
    """Identity and composition preservation over the (test) arrow set."""
    rep = Report(title or f"functor {f.name}")
    fam = family_for(f.dom, tests, rep)
    if fam is None:
        return rep.finalize()
    dom, cod = f.dom, f.cod
    for a in fam.objects:
        try:
            fa = f.ob(a)
        except Exception as exc:  # dangling table entry
            rep.error(f"object map undefined at {a!r}: {exc}")
            continue
        rep.require(f.ar(dom.id(a)) == cod.id(fa), "preserves-identity", a,
                    f.ar(dom.id(a)), cod.id(fa))
    for u in fam.arrows:
        fu = f.ar(u)
        if cod.src(fu) != f.ob(dom.src(u)) or cod.tgt(fu) != f.ob(dom.tgt(u)):
            rep.law("arrow-typing", u, (cod.src(fu), cod.tgt(fu)),
                    (f.ob(dom.src(u)), f.ob(dom.tgt(u))))
    for u in fam.arrows:
        for v in fam.arrows:
            if dom.src(v) != dom.tgt(u):
                continue
            lhs = f.ar(dom.compose(v, u))
            try:
                rhs = cod.compose(f.ar(v), f.ar(u))
            except (ValueError, KeyError):
                rep.law("preserves-composition", (v, u), lhs, "non-composable images")
                continue
            rep.require(lhs == rhs, "preserves-composition", (v, u), lhs, rhs)
    return rep.finalize()


def axis_arrows(cats, objects_per_axis, arrows_per_axis):
    """Arrow tuples varying one axis at a time, identities elsewhere.

    Naturality over a product index holds iff it holds axis-by-axis, and this
    family is exponentially smaller than the full arrow-tuple cube.
    """
    n = len(cats)
    for axis in range(n):
        other = [objects_per_axis[i] for i in range(n) if i != axis]
        for u in arrows_per_axis[axis]:
            for pad in itertools.product(*other):
                tup = []
                k = 0
                for i in range(n):
                    if i == axis:
                        tup.append(u)
                    else:
                        tup.append(cats[i].id(pad[k]))
                        k += 1
                yield tuple(tup)


def check_naturality(nt: NatTransRep, arrows, rep: Report, axiom: str) -> None:
    """Square check over the given index-category arrows."""
    dom, cod = nt.dom, nt.cod
    idx, target = dom.dom, dom.cod
    for u in arrows:
        a, b = idx.src(u), idx.tgt(u)
        lhs = target.compose(nt.at(b), dom.ar(u))
        rhs = target.compose(cod.ar(u), nt.at(a))
        rep.require(lhs == rhs, axiom, u, lhs, rhs)


class ProfunctorRep:
    """Set-valued functor in several variables with declared variances.

    arity is a tuple of (category, variance) with variance '+' or '-'; value
    takes an object tuple to a FinSet, action an arrow tuple to a FinFn. For a
    '-' slot the action arrow f: a -> b induces value(..b..) -> value(..a..).
    """

    def __init__(self, arity, value, action, name: str = "P"):
        self.arity = tuple(arity)
        self.cats = tuple(c for c, _ in self.arity)
        self.variances = tuple(v for _, v in self.arity)
        self.name = name
        self._value, self._action = value, action

    @property
    def kind(self) -> str:
        return "tabulated" if isinstance(self._value, dict) else "rule"

    def value(self, objs) -> FinSet:
        objs = tuple(objs)
        return self._value[objs] if isinstance(self._value, dict) else self._value(objs)

    def action(self, arrows) -> FinFn:
        arrows = tuple(arrows)
        return self._action[arrows] if isinstance(self._action, dict) else self._action(arrows)

    def dom_objs(self, arrows):
        """Object tuple at which the action's domain value sits."""
        return tuple(c.tgt(f) if v == "-" else c.src(f)
                     for (c, v), f in zip(self.arity, arrows))

    def cod_objs(self, arrows):
        return tuple(c.src(f) if v == "-" else c.tgt(f)
                     for (c, v), f in zip(self.arity, arrows))

    def ids_at(self, objs):
        return tuple(c.id(a) for c, a in zip(self.cats, objs))

    def __repr__(self):
        return f"ProfunctorRep({self.name}, arity {len(self.arity)})"


def tabulate_profunctor(p: ProfunctorRep, name=None) -> ProfunctorRep:
    objs = {t: p.value(t) for t in itertools.product(*(c.objects for c in p.cats))}
    ars = {t: p.action(t) for t in itertools.product(*(tuple(c.arrows()) for c in p.cats))}
    return ProfunctorRep(p.arity, objs, ars, name or p.name)


def check_profunctor(p: ProfunctorRep, title: str | None = None) -> Report:
    """Functoriality in each variable, identities elsewhere (finite cats only)."""
    rep = Report(title or f"profunctor {p.name}")
    for c in p.cats:
        if not c.is_finite:
            rep.error(f"profunctor over non-finite category {c.label}")
            return rep.finalize()
    object_tuples = list(itertools.product(*(c.objects for c in p.cats)))
    for objs in object_tuples:
        ids = p.ids_at(objs)
        act = p.action(ids)
        rep.require(act == FinFn.identity(p.value(objs)), "preserves-identity", objs,
                    act, "identity")
    axes = [tuple(c.arrows()) for c in p.cats]
    for axis in range(len(p.cats)):
        c = p.cats[axis]
        for u in axes[axis]:
            for v in axes[axis]:
                if c.src(v) != c.tgt(u):
                    continue
                w = c.compose(v, u)
                pads = [p.cats[i].objects for i in range(len(p.cats)) if i != axis]
                for pad in itertools.product(*pads):
                    def tup(f):
                        out, k = [], 0
                        for i in range(len(p.cats)):
                            if i == axis:
                                out.append(f)
                            else:
                                out.append(p.cats[i].id(pad[k]))
                                k += 1
                        return tuple(out)
                    whole = p.action(tup(w))
                    first, second = p.action(tup(u)), p.action(tup(v))
                    parts = second.then(first) if p.variances[axis] == "-" else first.then(second)
                    rep.require(whole == parts, "preserves-composition",
                                (axis, v, u, pad), whole, parts)
    return rep.finalize()


# ---------------------------------------------------------------------------
# presheaf categories


def presheaf(c: FinCat, ob: dict, ar: dict, name="X") -> FunctorRep:
    return FunctorRep(c, SET, dict(ob), dict(ar), name)


def presheaf_from_sets(c: FinCat, values: dict, name="X") -> FunctorRep:
    """Presheaf on a discrete category: only identity actions exist."""
    ar = {c.id(a): FinFn.identity(values[a]) for a in c.objects}
    return presheaf(c, values, ar, name)


def presheaf_map(dom: FunctorRep, cod: FunctorRep, comps: dict, name="h") -> NatTransRep:
    return NatTransRep(dom, cod, dict(comps), name)


class FunctorCat:
    """Category of tabulated Set-valued functors on a finite category.

    Objects are tabulated FunctorReps into SET, arrows are tabulated
    NatTransReps; the category is not object-finite but hom-sets are
    enumerable.
    """

    is_finite = False

    def __init__(self, base: FinCat):
        self.base = base
        self.label = f"[{base.label},Set]"

    def id(self, F: FunctorRep) -> NatTransRep:
        comps = {a: FinFn.identity(F.ob(a)) for a in self.base.objects}
        return NatTransRep(F, F, comps, "id")

    def src(self, t: NatTransRep) -> FunctorRep:
        return t.dom

    def tgt(self, t: NatTransRep) -> FunctorRep:
        return t.cod

    def compose(self, g: NatTransRep, f: NatTransRep) -> NatTransRep:
        comps = {a: f.at(a).then(g.at(a)) for a in self.base.objects}
        return NatTransRep(f.dom, g.cod, comps, f"{g.name}.{f.name}")

    def hom(self, F: FunctorRep, G: FunctorRep) -> FinSet:
        objs = self.base.objects
        choices = [tuple(FinFn(F.ob(a), G.ob(a), im) for im in
                         itertools.product(G.ob(a).elements, repeat=len(F.ob(a))))
                   for a in objs]
        out = []
        for comps in itertools.product(*choices):
            t = NatTransRep(F, G, dict(zip(objs, comps)), "t")
            if all(F.ar(u).then(t.at(self.base.tgt(u))) == t.at(self.base.src(u)).then(G.ar(u))
                   for u in self.base.arrows()):
                out.append(t)
        return FinSet(f"[{self.base.label},Set]({F.name},{G.name})", tuple(out))

    def __repr__(self):
        return f"FunctorCat({self.base.label})"


def functor_category(a: FinCat, c: FinCat, name=None) -> tuple[FinCat, dict, dict]:
    """Materialized functor category [a, c]: objects are functors, arrows
    natural families. Returns (category, label -> FunctorRep, label -> dict)."""
    objs = list(a.objects)
    arrow_list = list(a.arrows())
    functors = []
    for ob_choice in itertools.product(c.objects, repeat=len(objs)):
        ob = dict(zip(objs, ob_choice))
        axes = [tuple(c.hom(ob[a.src(u)], ob[a.tgt(u)])) for u in arrow_list]
        if any(len(ax) == 0 for ax in axes):
            continue
        for ar_choice in itertools.product(*axes):
            ar = dict(zip(arrow_list, ar_choice))
            ok = all(ar[a.id(o)] == c.id(ob[o]) for o in objs)
            if ok:
                for u in arrow_list:
                    for v in arrow_list:
                        if a.src(v) != a.tgt(u):
                            continue
                        if ar[a.compose(v, u)] != c.compose(ar[v], ar[u]):
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                functors.append(FunctorRep(a, c, ob, ar, name="F"))
    fun_of, label_of = {}, {}
    for i, F in enumerate(functors):
        lab = ("fun", i, tuple(sorted((o, F.ob(o)) for o in objs)))
        fun_of[lab] = F
        label_of[id(F)] = lab
    hom, nat_of = {}, {}
    labs = list(fun_of)
    for fl in labs:
        for gl in labs:
            F, G = fun_of[fl], fun_of[gl]
            nats = []
            for comps in itertools.product(*(tuple(c.hom(F.ob(o), G.ob(o))) for o in objs)):
                t = dict(zip(objs, comps))
                if all(c.compose(t[a.tgt(u)], F.ar(u)) == c.compose(G.ar(u), t[a.src(u)])
                       for u in arrow_list):
                    lab = ("nat", fl, gl, comps)
                    nat_of[lab] = t
                    nats.append(lab)
            hom[(fl, gl)] = FinSet(f"[{a.label},{c.label}]({fl[1]},{gl[1]})", tuple(nats))
    id_map = {fl: ("nat", fl, fl, tuple(c.id(fun_of[fl].ob(o)) for o in objs)) for fl in labs}
    comp = {}
    for (fl, gl), hs in hom.items():
        for t in hs:
            for (gl2, hl), hs2 in hom.items():
                if gl2 != gl:
                    continue
                for u in hs2:
                    comps = tuple(c.compose(nat_of[u][o], nat_of[t][o]) for o in objs)
                    comp[(u, t)] = ("nat", fl, hl, comps)
    cat = FinCat(name or f"[{a.label},{c.label}]", tuple(labs), hom, id_map, comp)
    return cat, fun_of, nat_of


def product_profunctor(cats_with_variance, factors, name="H") -> ProfunctorRep:
    """Pointwise product of set-valued factors sharing the same arity."""
    def value(objs):
        from .sets import prod_set
        return prod_set(*(f.value(objs) for f in factors))

    def action(arrows):
        from .sets import prod_fn
        return prod_fn(*(f.action(arrows) for f in factors))

    return ProfunctorRep(cats_with_variance, value, action, name)

