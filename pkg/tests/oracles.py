"""Independent brute-force oracles and random profunctor generators.

The oracles deliberately avoid the library's union-find / backtracking code
paths: coend classes come from BFS over an explicit relation graph, end
families from a full product filter.
"""
from __future__ import annotations

import itertools
from collections import defaultdict

from skewcat.cats import (FinCat, chain_cat, discrete_cat, idem2_cat, parallel_pair,
                          terminal_cat, walking_arrow, z2_cat, z3_cat)
from skewcat.functors import ProfunctorRep, hom_profunctor
from skewcat.limits import TwoSided
from skewcat.sets import FinFn, FinSet, coprod_set, prod_set


def coend_oracle(b: FinCat, h: TwoSided):
    """Connected components of the relation graph on the diagonal union."""
    nodes = [(o, x) for o in b.objects for x in h.value(o, o)]
    adj = defaultdict(set)
    for f in b.arrows():
        m, n = b.src(f), b.tgt(f)
        left = h.action(f, b.id(m))
        right = h.action(b.id(n), f)
        for w in h.value(n, m):
            u, v = (m, left(w)), (n, right(w))
            adj[u].add(v)
            adj[v].add(u)
    seen, classes = set(), []
    for node in nodes:
        if node in seen:
            continue
        comp, stack = set(), [node]
        while stack:
            cur = stack.pop()
            if cur in comp:
                continue
            comp.add(cur)
            stack.extend(adj[cur] - comp)
        seen |= comp
        classes.append(frozenset(comp))
    return classes


def end_oracle(b: FinCat, h: TwoSided):
    """Full product of the diagonal values, filtered by every arrow condition."""
    objs = list(b.objects)
    arrows = list(b.arrows())
    out = []
    for fam in itertools.product(*(h.value(o, o) for o in objs)):
        comp = dict(zip(objs, fam))
        ok = True
        for f in arrows:
            m, n = b.src(f), b.tgt(f)
            if h.action(b.id(m), f)(comp[m]) != h.action(f, b.id(n))(comp[n]):
                ok = False
                break
        if ok:
            out.append(fam)
    return out


# ---------------------------------------------------------------------------
# random two-sided functors, functorial by construction


def _rep(c, a):
    """c(-, a): contravariant block."""
    def value(m, n):
        return c.hom(m, a)

    def action(f, g):
        dom, cod = c.hom(c.tgt(f), a), c.hom(c.src(f), a)
        return FinFn.from_map(dom, cod, lambda h: c.compose(h, f))
    return TwoSided(value, action, f"rep{a}")


def _corep(c, a):
    """c(a, -): covariant block."""
    def value(m, n):
        return c.hom(a, n)

    def action(f, g):
        dom, cod = c.hom(a, c.src(g)), c.hom(a, c.tgt(g))
        return FinFn.from_map(dom, cod, lambda h: c.compose(g, h))
    return TwoSided(value, action, f"corep{a}")


def _hom(c):
    p = hom_profunctor(c)
    return TwoSided(lambda m, n: p.value((m, n)), lambda f, g: p.action((f, g)), "hom")


def _const(c, s: FinSet):
    return TwoSided(lambda m, n: s, lambda f, g: FinFn.identity(s), f"const{s.label}")


def _prod(h1, h2):
    def value(m, n):
        return prod_set(h1.value(m, n), h2.value(m, n))

    def action(f, g):
        a1, a2 = h1.action(f, g), h2.action(f, g)
        return FinFn.from_map(prod_set(a1.dom, a2.dom), prod_set(a1.cod, a2.cod),
                              lambda p: (a1(p[0]), a2(p[1])))
    return TwoSided(value, action, f"{h1.name}*{h2.name}")


def _coprod(h1, h2):
    def value(m, n):
        return coprod_set(h1.value(m, n), h2.value(m, n))

    def action(f, g):
        a1, a2 = h1.action(f, g), h2.action(f, g)
        dom = coprod_set(a1.dom, a2.dom)
        cod = coprod_set(a1.cod, a2.cod)
        return FinFn.from_map(dom, cod,
                              lambda t: (t[0], (a1 if t[0] == 0 else a2)(t[1])))
    return TwoSided(value, action, f"{h1.name}+{h2.name}")


CATEGORY_POOL = [terminal_cat, walking_arrow, parallel_pair, z2_cat, z3_cat,
                 idem2_cat, lambda: discrete_cat(("p", "q"), "disc2"),
                 lambda: discrete_cat(("p", "q", "r"), "disc3"), lambda: chain_cat(3)]


def random_two_sided(rng, c: FinCat, max_value=3):
    """Random two-sided functor over c with value sets of size <= max_value."""
    def block():
        kind = rng.randrange(4)
        if kind == 0:
            return _rep(c, rng.choice(c.objects))
        if kind == 1:
            return _corep(c, rng.choice(c.objects))
        if kind == 2:
            return _hom(c)
        size = rng.randrange(max_value + 1)
        s = FinSet(f"K{size}", tuple(f"k{i}" for i in range(size)))
        return _const(c, s)

    for _ in range(60):
        h = block()
        if rng.random() < 0.5:
            h = (_prod if rng.random() < 0.5 else _coprod)(h, block())
        if all(len(h.value(m, n)) <= max_value for m in c.objects for n in c.objects):
            return h
    return _hom(c)


def sample_profunctors(rng, count):
    out = []
    while len(out) < count:
        c = rng.choice(CATEGORY_POOL)()
        out.append((c, random_two_sided(rng, c)))
    return out
