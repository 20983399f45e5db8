"""Labeled finite sets, total function tables, and set-level (co)limits.

Elements are hashable values: plain strings in hand-written fixtures, nested
tuples in constructed sets (products, powers, quotients, coend classes).
Element order is fixed at construction and drives every canonical choice made
downstream, so all factories here enumerate deterministically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class SizeCapExceeded(Exception):
    """A constructed set went over the configured enumeration cap."""


_size_cap: int | None = None


def set_size_cap(cap: int | None) -> int | None:
    """Set the global cap on constructed-set sizes; returns the old cap."""
    global _size_cap
    old, _size_cap = _size_cap, cap
    return old


def _check_cap(n: int, context: str) -> None:
    if _size_cap is not None and n > _size_cap:
        raise SizeCapExceeded(f"{context}: {n} elements exceeds cap {_size_cap}")


@dataclass(frozen=True)
class FinSet:
    label: str
    elements: tuple

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"duplicate elements in FinSet {self.label!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    @property
    def _index(self) -> dict:
        idx = object.__getattribute__(self, "__dict__").get("_idx")
        if idx is None:
            idx = {x: i for i, x in enumerate(self.elements)}
            object.__getattribute__(self, "__dict__")["_idx"] = idx
        return idx

    def __repr__(self) -> str:
        return f"FinSet({self.label!r}, {len(self.elements)} elems)"


def finset(label: str, elements) -> FinSet:
    elements = tuple(elements)
    _check_cap(len(elements), f"FinSet {label!r}")
    return FinSet(label, elements)


EMPTY = FinSet("0", ())
SINGLETON = FinSet("1", ("*",))


@dataclass(frozen=True)
class FinFn:
    """Total function between finite sets, stored as images in dom order."""

    dom: FinSet
    cod: FinSet
    images: tuple

    def __post_init__(self):
        if len(self.images) != len(self.dom):
            raise ValueError("image table length does not match domain")
        for y in self.images:
            if y not in self.cod:
                raise ValueError(f"image {y!r} not in codomain {self.cod.label!r}")

    def __call__(self, x):
        return self.images[self.dom.index(x)]

    @staticmethod
    def from_map(dom: FinSet, cod: FinSet, fn) -> "FinFn":
        return FinFn(dom, cod, tuple(fn(x) for x in dom))

    @staticmethod
    def from_dict(dom: FinSet, cod: FinSet, table: dict) -> "FinFn":
        return FinFn(dom, cod, tuple(table[x] for x in dom))

    @staticmethod
    def identity(s: FinSet) -> "FinFn":
        return FinFn(s, s, s.elements)

    def then(self, g: "FinFn") -> "FinFn":
        if g.dom != self.cod:
            raise ValueError("composition mismatch")
        return FinFn(self.dom, g.cod, tuple(g(y) for y in self.images))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.dom) == len(self.cod)

    def inverse(self) -> "FinFn":
        if not self.is_bijective():
            raise ValueError("not a bijection")
        table = {y: x for x, y in zip(self.dom, self.images)}
        return FinFn(self.cod, self.dom, tuple(table[y] for y in self.cod))

    def __repr__(self) -> str:
        return f"FinFn({self.dom.label}->{self.cod.label})"


def compose(g: FinFn, f: FinFn) -> FinFn:
    return f.then(g)


@lru_cache(maxsize=None)
def prod_set(*factors: FinSet) -> FinSet:
    """Cartesian product; elements are tuples enumerated in lexicographic order."""
    n = 1
    for s in factors:
        n *= len(s)
    _check_cap(n, "product")
    label = "(" + "x".join(s.label for s in factors) + ")"
    return FinSet(label, tuple(itertools.product(*factors)))


def prod_fn(*fns: FinFn) -> FinFn:
    dom = prod_set(*(f.dom for f in fns))
    cod = prod_set(*(f.cod for f in fns))
    return FinFn.from_map(dom, cod, lambda xs: tuple(f(x) for f, x in zip(fns, xs)))


def proj_fn(p: FinSet, factors: tuple, i: int) -> FinFn:
    return FinFn.from_map(p, factors[i], lambda xs: xs[i])


@lru_cache(maxsize=None)
def coprod_set(*summands: FinSet) -> FinSet:
    """Disjoint union; elements are (index, element) tags in summand order."""
    n = sum(len(s) for s in summands)
    _check_cap(n, "coproduct")
    label = "(" + "+".join(s.label for s in summands) + ")"
    elems = tuple((i, x) for i, s in enumerate(summands) for x in s)
    return FinSet(label, elems)


@lru_cache(maxsize=None)
def power_set(s: FinSet, x: FinSet) -> FinSet:
    """All total functions s -> x as image tuples in dom order.

    Enumeration is lexicographic in x's element order, so the result is
    canonical; elements are applied with apply_power.
    """
    n = len(x) ** len(s) if len(s) else 1
    _check_cap(n, "power")
    label = f"[{s.label}->{x.label}]"
    return FinSet(label, tuple(itertools.product(x.elements, repeat=len(s))))


def apply_power(s: FinSet, elem: tuple, point):
    """Evaluate a power_set(s, x) element at a point of s."""
    return elem[s.index(point)]


def power_fn_post(s: FinSet, g: FinFn) -> FinFn:
    """Covariant action of power in its target: [s -> g]."""
    return FinFn.from_map(
        power_set(s, g.dom), power_set(s, g.cod), lambda e: tuple(g(y) for y in e)
    )


def power_fn_pre(f: FinFn, x: FinSet) -> FinFn:
    """Contravariant action of power in its exponent: [f -> x]."""
    return FinFn.from_map(
        power_set(f.cod, x),
        power_set(f.dom, x),
        lambda e: tuple(apply_power(f.cod, e, f(p)) for p in f.dom),
    )


def equalizer(f: FinFn, g: FinFn) -> tuple[FinSet, FinFn]:
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equalizer of non-parallel functions")
    elems = tuple(x for x in f.dom if f(x) == g(x))
    s = FinSet(f"eq({f.dom.label})", elems)
    return s, FinFn.from_map(s, f.dom, lambda x: x)


class UnionFind:
    """Union-find over integers 0..n-1 with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # keep the smaller index as root so class representatives are
            # order-least without a second scan
            if ri < rj:
                self.parent[rj] = ri
            else:
                self.parent[ri] = rj


def quotient(s: FinSet, pairs, label: str | None = None) -> tuple[FinSet, FinFn]:
    """Quotient of s by the equivalence generated by pairs.

    Class representatives are the order-least members; the returned FinFn is
    the projection.
    """
    uf = UnionFind(len(s))
    for x, y in pairs:
        uf.union(s.index(x), s.index(y))
    reps = sorted({uf.find(i) for i in range(len(s))})
    q = FinSet(label or f"{s.label}/~", tuple(s.elements[r] for r in reps))
    proj = FinFn.from_map(s, q, lambda x: s.elements[uf.find(s.index(x))])
    return q, proj
