#!/usr/bin/env python3
"""Rebuild data/j2.gens from first principles.

U3(3) is realized on the 28 isotropic points of the hermitian plane over
GF(9).  Its 36 subgroups L2(7) and 63 involutions, together with one extra
vertex, carry the Hall-Janko graph srg(100,36,14,12):

  * ~ every L2(7);  H ~ K iff |H n K| = 24;  H ~ t iff t in H;
  t ~ u iff tu has order 4.

The full automorphism group J2:2 is generated by U3(3) and any automorphism
moving *.  Its derived subgroup is J2, from which two generators a, b with
o(a)=2, o(b)=3, o(ab)=7, o(abab^2)=12 are drawn.

Needs sympy and networkx; runs in a few minutes.
"""
import itertools
import random
import sys

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from sympy.combinatorics import Permutation, PermutationGroup

F = [(a, b) for a in range(3) for b in range(3)]  # a + b*i, i^2 = -1
ZERO, ONE = (0, 0), (1, 0)


def add(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def mul(x, y):
    return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)


def frob(x):
    return mul(mul(x, x), x)


def herm(x, y):
    s = ZERO
    for a, b in zip(x, y):
        s = add(s, mul(a, frob(b)))
    return s


def normalize(v):
    for c in v:
        if c != ZERO:
            inv = next(u for u in F if mul(u, c) == ONE)
            return tuple(mul(inv, x) for x in v)
    raise ValueError("zero vector")


def unitary_group():
    vecs = [v for v in itertools.product(F, repeat=3) if v != (ZERO,) * 3]
    iso = sorted({normalize(v) for v in vecs if herm(v, v) == ZERO})
    idx = {p: i for i, p in enumerate(iso)}
    trace_zero = [a for a in F if add(a, frob(a)) == ZERO and a != ZERO]
    gens = []
    for v in iso:
        for a in trace_zero:
            def t(x, v=v, a=a):
                c = mul(a, herm(x, v))
                return tuple(add(xi, mul(c, vi)) for xi, vi in zip(x, v))
            gens.append(Permutation([idx[normalize(t(p))] for p in iso]))
    group = PermutationGroup(gens)
    assert group.order() == 6048
    return group


def closure(gens, identity, limit):
    seen = {tuple(identity.array_form)}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                k = tuple(y.array_form)
                if k not in seen:
                    seen.add(k)
                    nxt.append(y)
        frontier = nxt
        if len(seen) > limit:
            return None
    return frozenset(seen)


def main(out_path):
    rng = random.Random(1)
    u33 = unitary_group()
    elements = list(u33.generate())
    identity = Permutation(u33.degree - 1)
    invs = sorted(tuple(p.array_form) for p in elements if p.order() == 2)
    threes = [p for p in elements if p.order() == 3]
    inv_perm = [Permutation(list(t)) for t in invs]
    subs = set()
    while len(subs) < 36:
        x = Permutation(list(rng.choice(invs)))
        y = rng.choice(threes)
        if (x * y).order() != 7:
            continue
        s = closure([x, y], identity, 200)
        if s is not None and len(s) == 168:
            subs.add(s)
    subs = sorted(subs, key=sorted)

    graph = nx.Graph()
    graph.add_nodes_from(range(100))
    for i in range(36):
        graph.add_edge(0, 1 + i)
        for j in range(i + 1, 36):
            if len(subs[i] & subs[j]) == 24:
                graph.add_edge(1 + i, 1 + j)
        for j, t in enumerate(invs):
            if t in subs[i]:
                graph.add_edge(1 + i, 37 + j)
    for i in range(63):
        for j in range(i + 1, 63):
            if (inv_perm[i] * inv_perm[j]).order() == 4:
                graph.add_edge(37 + i, 37 + j)
    assert {d for _, d in graph.degree()} == {36}

    sub_index = {s: i for i, s in enumerate(subs)}
    inv_index = {t: i for i, t in enumerate(invs)}

    def conj(t, g):
        return tuple((~g * Permutation(list(t)) * g).array_form)

    def on_vertices(g):
        img = list(range(100))
        for i, s in enumerate(subs):
            img[1 + i] = 1 + sub_index[frozenset(conj(x, g) for x in s)]
        for i, t in enumerate(invs):
            img[37 + i] = 37 + inv_index[conj(t, g)]
        return Permutation(img)

    local = [on_vertices(g) for g in u33.generators]
    g1, g2 = graph.copy(), graph.copy()
    for v in range(100):
        g1.nodes[v]["c"] = {0: "a", 1: "b"}.get(v, "z")
        g2.nodes[v]["c"] = {1: "a", 0: "b"}.get(v, "z")
    matcher = GraphMatcher(g1, g2, node_match=lambda x, y: x["c"] == y["c"])
    iso = next(matcher.isomorphisms_iter())
    sigma = Permutation([iso[v] for v in range(100)])

    full = PermutationGroup(local + [sigma])
    assert full.order() == 1209600
    j2 = full.derived_subgroup()
    assert j2.order() == 604800

    rng = random.Random(7)
    while True:
        a, b = j2.random(), j2.random()
        if a.order() != 2 or b.order() != 3:
            continue
        if (a * b).order() != 7 or (a * b * a * b * b).order() != 12:
            continue
        if PermutationGroup([a, b]).order() == 604800:
            break
    with open(out_path, "w") as f:
        f.write("degree 100\n")
        for g in (a, b):
            f.write(" ".join(str(x + 1) for x in g.array_form) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "j2.gens")
