"""Finite categories (tabulated) and the ambient category of finite sets.

A category value exposes: id(A), src(f), tgt(f), compose(g, f), and when
finite also objects / hom(A, B) / arrows(). Tabulated categories (FinCat)
support exhaustive checks; the ambient SetCat has unboundedly many objects but
enumerable hom-sets, so it is checked on caller-supplied test families.
Arrow labels of a FinCat are globally distinct so src/tgt are recoverable.
"""
from __future__ import annotations

import itertools

from .report import Report
from .sets import EMPTY, SINGLETON, FinFn, FinSet, finset, power_set, prod_set


class FinCat:
    is_finite = True

    def __init__(self, label: str, objects, hom: dict, id_map: dict, comp: dict):
        self.label = label
        self.objects = tuple(objects)
        self.hom_table = dict(hom)
        self.id_map = dict(id_map)
        self.comp_table = dict(comp)
        self._src, self._tgt = {}, {}
        for (a, b), hs in self.hom_table.items():
            for f in hs:
                if f in self._src:
                    raise ValueError(f"arrow label {f!r} appears in two hom-sets")
                self._src[f], self._tgt[f] = a, b

    def hom(self, a, b) -> FinSet:
        return self.hom_table.get((a, b), EMPTY)

    def id(self, a):
        return self.id_map[a]

    def src(self, f):
        return self._src[f]

    def tgt(self, f):
        return self._tgt[f]

    def compose(self, g, f):
        """g after f. The table wins; identity pairs may be left implicit."""
        if self._tgt[f] != self._src[g]:
            raise ValueError(f"non-composable pair ({g!r}, {f!r})")
        h = self.comp_table.get((g, f))
        if h is not None:
            return h
        if g == self.id_map.get(self._tgt[f]):
            return f
        if f == self.id_map.get(self._src[f]):
            return g
        raise KeyError(f"composition table missing ({g!r}, {f!r})")

    def arrows(self):
        for a in self.objects:
            for b in self.objects:
                yield from self.hom(a, b)

    def arrow_count(self) -> int:
        return sum(1 for _ in self.arrows())

    def __repr__(self) -> str:
        return f"FinCat({self.label!r}, {len(self.objects)} objects)"


class SetCat:
    """Finite sets and total functions; objects are FinSet, arrows FinFn."""

    is_finite = False
    label = "Set"

    def id(self, a: FinSet) -> FinFn:
        return FinFn.identity(a)

    def src(self, f: FinFn) -> FinSet:
        return f.dom

    def tgt(self, f: FinFn) -> FinSet:
        return f.cod

    def compose(self, g: FinFn, f: FinFn) -> FinFn:
        return f.then(g)

    def hom(self, a: FinSet, b: FinSet) -> FinSet:
        elems = tuple(FinFn(a, b, images) for images in power_set(a, b))
        return FinSet(f"Set({a.label},{b.label})", elems)

    def __repr__(self) -> str:
        return "SetCat"


SET = SetCat()


class OpView:
    """Opposite of any category value, sharing labels."""

    def __init__(self, base):
        self.base = base
        self.is_finite = base.is_finite
        self.label = f"{base.label}^op"
        if base.is_finite:
            self.objects = base.objects

    def hom(self, a, b):
        return self.base.hom(b, a)

    def id(self, a):
        return self.base.id(a)

    def src(self, f):
        return self.base.tgt(f)

    def tgt(self, f):
        return self.base.src(f)

    def compose(self, g, f):
        return self.base.compose(f, g)

    def arrows(self):
        return self.base.arrows()


class ProductView:
    """Product of category values; objects and arrows are tuples."""

    def __init__(self, *factors):
        self.factors = factors
        self.is_finite = all(c.is_finite for c in factors)
        self.label = "x".join(c.label for c in factors)
        if self.is_finite:
            self.objects = tuple(itertools.product(*(c.objects for c in factors)))

    def hom(self, a, b) -> FinSet:
        return prod_set(*(c.hom(x, y) for c, x, y in zip(self.factors, a, b)))

    def id(self, a):
        return tuple(c.id(x) for c, x in zip(self.factors, a))

    def src(self, f):
        return tuple(c.src(x) for c, x in zip(self.factors, f))

    def tgt(self, f):
        return tuple(c.tgt(x) for c, x in zip(self.factors, f))

    def compose(self, g, f):
        return tuple(c.compose(x, y) for c, x, y in zip(self.factors, g, f))

    def arrows(self):
        return itertools.product(*(tuple(c.arrows()) for c in self.factors))


def op_cat(c):
    return OpView(c)


def product_cat(*cs):
    return ProductView(*cs)


# ---------------------------------------------------------------------------
# category validation


def check_category(c: FinCat) -> Report:
    """Structural validation plus exhaustive identity/associativity scan."""
    rep = Report(f"category {c.label}")
    known = set(c._src)
    for a in c.objects:
        i = c.id_map.get(a)
        if i is None or i not in known:
            rep.error(f"missing or dangling identity for object {a!r}")
        elif c._src[i] != a or c._tgt[i] != a:
            rep.error(f"identity of {a!r} is not an endo-arrow")
    for (g, f), h in c.comp_table.items():
        if g not in known or f not in known or h not in known:
            rep.error(f"dangling label in composition entry ({g!r},{f!r})->{h!r}")
    if rep.structural:
        return rep.finalize()

    def comp(g, f):
        key = (g, f)
        if key not in c.comp_table:
            if c._src[g] == c._tgt[g] and g == c.id_map[c._src[g]]:
                return f
            if c._src[f] == c._tgt[f] and f == c.id_map[c._src[f]]:
                return g
            rep.error(f"composition table missing composable pair ({g!r},{f!r})")
            return None
        h = c.comp_table[key]
        if c._src[h] != c._src[f] or c._tgt[h] != c._tgt[g]:
            rep.law("composition-typing", (g, f), (c._src[h], c._tgt[h]), (c._src[f], c._tgt[g]))
            return None
        return h

    arrows = list(c.arrows())
    for f in arrows:
        left = comp(c.id_map[c._tgt[f]], f)
        if left is not None:
            rep.require(left == f, "left-identity", f, left, f)
        right = comp(f, c.id_map[c._src[f]])
        if right is not None:
            rep.require(right == f, "right-identity", f, right, f)
    for f in arrows:
        for g in arrows:
            if c._src[g] != c._tgt[f]:
                continue
            gf = comp(g, f)
            for h in arrows:
                if c._src[h] != c._tgt[g]:
                    continue
                hg = comp(h, g)
                if gf is None or hg is None:
                    continue
                lhs, rhs = comp(h, gf), comp(hg, f)
                if lhs is not None and rhs is not None:
                    rep.require(lhs == rhs, "associativity", (h, g, f), lhs, rhs)
    return rep.finalize()


# ---------------------------------------------------------------------------
# standard small categories


def terminal_cat() -> FinCat:
    return FinCat("1", ("*",), {("*", "*"): finset("1(*,*)", ("id*",))}, {"*": "id*"},
                  {("id*", "id*"): "id*"})


def discrete_cat(labels, name: str = "disc") -> FinCat:
    labels = tuple(labels)
    hom = {(a, a): finset(f"{name}({a})", (f"id:{a}",)) for a in labels}
    id_map = {a: f"id:{a}" for a in labels}
    comp = {(f"id:{a}", f"id:{a}"): f"id:{a}" for a in labels}
    return FinCat(name, labels, hom, id_map, comp)


def walking_arrow() -> FinCat:
    hom = {
        ("0", "0"): finset("2(0,0)", ("id0",)),
        ("1", "1"): finset("2(1,1)", ("id1",)),
        ("0", "1"): finset("2(0,1)", ("u",)),
    }
    comp = {("id0", "id0"): "id0", ("id1", "id1"): "id1",
            ("u", "id0"): "u", ("id1", "u"): "u"}
    return FinCat("2", ("0", "1"), hom, {"0": "id0", "1": "id1"}, comp)


def parallel_pair() -> FinCat:
    hom = {
        ("A", "A"): finset("pp(A,A)", ("idA",)),
        ("B", "B"): finset("pp(B,B)", ("idB",)),
        ("A", "B"): finset("pp(A,B)", ("f", "g")),
    }
    comp = {("idA", "idA"): "idA", ("idB", "idB"): "idB",
            ("f", "idA"): "f", ("g", "idA"): "g",
            ("idB", "f"): "f", ("idB", "g"): "g"}
    return FinCat("pp", ("A", "B"), hom, {"A": "idA", "B": "idB"}, comp)


def monoid_cat(name: str, elements, unit, mult: dict) -> FinCat:
    """A monoid as a one-object category; mult maps (m, n) -> m*n."""
    elements = tuple(elements)
    hom = {("*", "*"): finset(f"{name}(*)", elements)}
    comp = {(m, n): mult[(m, n)] for m in elements for n in elements}
    return FinCat(name, ("*",), hom, {"*": unit}, comp)


def z2_cat() -> FinCat:
    mult = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}
    return FinCat("Z2", ("*",), {("*", "*"): finset("Z2(*)", ("e", "s"))}, {"*": "e"}, mult)


def z3_cat() -> FinCat:
    els = ("e", "a", "b")
    add = {("e", x): x for x in els} | {(x, "e"): x for x in els}
    add |= {("a", "a"): "b", ("a", "b"): "e", ("b", "a"): "e", ("b", "b"): "a"}
    return monoid_cat("Z3", els, "e", add)


def idem2_cat() -> FinCat:
    """One-object idempotent 2-element monoid {e, a} with a*a = a."""
    mult = {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a", ("a", "a"): "a"}
    return monoid_cat("Idem2", ("e", "a"), "e", mult)


def chain_cat(n: int) -> FinCat:
    """The poset 0 < 1 < ... < n-1 as a thin category."""
    objs = tuple(str(i) for i in range(n))
    hom, id_map, comp = {}, {}, {}
    arrow = {}
    for i in range(n):
        for j in range(i, n):
            arrow[(i, j)] = f"le{i}{j}"
            hom[(str(i), str(j))] = finset(f"chain({i},{j})", (arrow[(i, j)],))
        id_map[str(i)] = arrow[(i, i)]
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                comp[(arrow[(j, k)], arrow[(i, j)])] = arrow[(i, k)]
    return FinCat(f"chain{n}", objs, hom, id_map, comp)


def fn_label(a: FinSet, b: FinSet, images: tuple):
    return ("fn", a.label, b.label, images)


def sets_fragment(sets, name: str = "setfrag") -> tuple[FinCat, dict, dict]:
    """Tabulated full subcategory of finite sets on the given FinSets.

    Returns (category, object label -> FinSet, arrow label -> FinFn).
    """
    sets = tuple(sets)
    obj_of = {s.label: s for s in sets}
    if len(obj_of) != len(sets):
        raise ValueError("object labels must be distinct")
    hom, arrow_of = {}, {}
    for a in sets:
        for b in sets:
            labels = []
            for images in power_set(a, b):
                lab = fn_label(a, b, images)
                arrow_of[lab] = FinFn(a, b, images)
                labels.append(lab)
            hom[(a.label, b.label)] = finset(f"{name}({a.label},{b.label})", labels)
    id_map = {a.label: fn_label(a, a, a.elements) for a in sets}
    comp = {}
    for (al, bl), hs in hom.items():
        for f in hs:
            for (bl2, cl), hs2 in hom.items():
                if bl2 != bl:
                    continue
                for g in hs2:
                    gf = arrow_of[f].then(arrow_of[g])
                    comp[(g, f)] = fn_label(obj_of[al], obj_of[cl], gf.images)
    cat = FinCat(name, tuple(s.label for s in sets), hom, id_map, comp)
    return cat, obj_of, arrow_of


def alphabet_sets(max_size: int = 2, alphabet: str = "ab") -> tuple[FinSet, ...]:
    """All subsets of the alphabet's first letters up to max_size, in order."""
    letters = tuple(alphabet)
    out = []
    for n in range(max_size + 1):
        for combo in itertools.combinations(letters, n):
            out.append(FinSet("{" + "".join(combo) + "}", combo))
    return tuple(out)


def default_set_objects() -> tuple[FinSet, ...]:
    return alphabet_sets(2, "ab")


def all_fns(a: FinSet, b: FinSet):
    return [FinFn(a, b, images) for images in power_set(a, b)]


def default_set_arrows(objects=None) -> tuple[FinFn, ...]:
    objs = objects or default_set_objects()
    return tuple(f for a in objs for b in objs for f in all_fns(a, b))


SIZE_SETS = {0: EMPTY, 1: SINGLETON, 2: FinSet("2", ("x", "y")), 3: FinSet("3", ("x", "y", "z"))}
