"""Ends and coends of two-sided functors over a tabulated category.

A two-sided functor H over b is given by value(m, n) -> FinSet (m the
contravariant slot, n the covariant one) and action(f, g) -> FinFn sending
H(m', n) to H(m, n') for f: m -> m', g: n -> n'. Coends are coequalizers of
the left/right actions on the diagonal disjoint union, computed by
union-find; ends enumerate compatible families by backtracking.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cats import FinCat
from .report import Report
from .sets import FinFn, FinSet, UnionFind, _check_cap


class TwoSided:
    def __init__(self, value, action, name="H"):
        self.name = name
        self._value, self._action = value, action

    def value(self, m, n) -> FinSet:
        return self._value(m, n)

    def action(self, f, g) -> FinFn:
        return self._action(f, g)


def profunctor_two_sided(p) -> TwoSided:
    """View an arity-(-,+) ProfunctorRep over (b, b) as a two-sided functor."""
    (c1, v1), (c2, v2) = p.arity
    if (v1, v2) != ("-", "+"):
        raise ValueError("expected variance (-, +)")
    return TwoSided(lambda m, n: p.value((m, n)),
                    lambda f, g: p.action((f, g)), p.name)


@dataclass
class Coend:
    base: FinCat
    carrier: FinSet            # elements are (object, element) class representatives
    _class_of: dict            # (object, element) -> representative

    def classify(self, obj, elem):
        return self._class_of[(obj, elem)]

    def inject(self, obj, h_diag: FinSet) -> FinFn:
        return FinFn.from_map(h_diag, self.carrier, lambda x: self._class_of[(obj, x)])

    def classes(self):
        return self.carrier.elements


def coend(b: FinCat, h: TwoSided, label: str | None = None) -> Coend:
    """The coequalizer of the two canonical actions on ⨿_B H(B, B).

    Class representatives are order-least in (object order, element order);
    they are stable under recomputation, so classes can be compared across
    separately evaluated composites.
    """
    if not b.is_finite:
        raise ValueError("coend over a non-tabulated category")
    tagged = []
    index = {}
    for obj in b.objects:
        for x in h.value(obj, obj):
            index[(obj, x)] = len(tagged)
            tagged.append((obj, x))
    uf = UnionFind(len(tagged))
    for f in b.arrows():
        m, n = b.src(f), b.tgt(f)
        if f == b.id(m):
            continue
        left = h.action(f, b.id(m))    # H(n, m) -> H(m, m)
        right = h.action(b.id(n), f)   # H(n, m) -> H(n, n)
        for w in h.value(n, m):
            uf.union(index[(m, left(w))], index[(n, right(w))])
    reps = sorted({uf.find(i) for i in range(len(tagged))})
    _check_cap(len(reps), "coend")
    carrier = FinSet(label or f"coend({h.name})", tuple(tagged[r] for r in reps))
    class_of = {tagged[i]: tagged[uf.find(i)] for i in range(len(tagged))}
    return Coend(b, carrier, class_of)


@dataclass
class End:
    base: FinCat
    carrier: FinSet            # elements are tuples of components in object order

    def project(self, obj, h_diag: FinSet) -> FinFn:
        i = self.base.objects.index(obj)
        return FinFn.from_map(self.carrier, h_diag, lambda fam: fam[i])

    def component(self, fam, obj):
        return fam[self.base.objects.index(obj)]


def end(b: FinCat, h: TwoSided, label: str | None = None) -> End:
    """All families (x_B in H(B,B)) with H(1,f)(x_B) = H(f,1)(x_B') for f: B -> B'."""
    if not b.is_finite:
        raise ValueError("end over a non-tabulated category")
    objs = list(b.objects)
    pos = {o: i for i, o in enumerate(objs)}
    arrows = [f for f in b.arrows() if f != b.id(b.src(f))]
    diag = {o: h.value(o, o) for o in objs}
    push = {f: h.action(b.id(b.src(f)), f) for f in arrows}   # H(src,src) -> H(src,tgt)
    pull = {f: h.action(f, b.id(b.tgt(f))) for f in arrows}   # H(tgt,tgt) -> H(src,tgt)

    def compatible(k, partial, x):
        for f in arrows:
            si, ti = pos[b.src(f)], pos[b.tgt(f)]
            if si == k:
                left = push[f](x)
            elif si < k:
                left = push[f](partial[si])
            else:
                continue
            if ti == k:
                right = pull[f](x)
            elif ti < k:
                right = pull[f](partial[ti])
            else:
                continue
            if left != right:
                return False
        return True

    families = []

    def extend(k, partial):
        if k == len(objs):
            families.append(tuple(partial))
            return
        for x in diag[objs[k]]:
            if compatible(k, partial, x):
                partial.append(x)
                extend(k + 1, partial)
                partial.pop()

    extend(0, [])
    _check_cap(len(families), "end")
    carrier = FinSet(label or f"end({h.name})", tuple(families))
    return End(b, carrier)


def coend_induced(src: Coend, dst: Coend, gen_map) -> FinFn:
    """Map between coends from a generator-level assignment.

    gen_map takes (object, element) to (object, element) in dst's diagonal;
    the result is well defined whenever gen_map descends to classes, which the
    calling checkers verify by comparing all generators.
    """
    def f(rep):
        obj, elem = gen_map(rep[0], rep[1])
        return dst.classify(obj, elem)
    return FinFn.from_map(src.carrier, dst.carrier, f)


def check_coend_bounds(b: FinCat, h: TwoSided) -> Report:
    rep = Report("coend/end bounds")
    ce, en = coend(b, h), end(b, h)
    total = sum(len(h.value(o, o)) for o in b.objects)
    prod = 1
    for o in b.objects:
        prod *= len(h.value(o, o))
    rep.require(len(ce.carrier) <= total, "coend-size", h.name, len(ce.carrier), total)
    rep.require(len(en.carrier) <= prod, "end-size", h.name, len(en.carrier), prod)
    return rep.finalize()
