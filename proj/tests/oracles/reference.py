#!/usr/bin/env python3
"""Independent brute-force reference values frozen into the C++ tests.

Uses networkx for graph construction and graph6 encoding and plain
Python set arithmetic for everything else. Run: python3 reference.py
"""
import itertools
import networkx as nx


def traces(g, x, y):
    return [frozenset(g[v]) & x for v in y]


def s(g, a):
    rest = set(g) - a
    return len(set(traces(g, a, rest)))


def locating(g, x):
    rest = set(g) - x
    tr = traces(g, x, rest)
    return len(set(tr)) == len(tr)


def dominating(g, x):
    return all(frozenset(g[v]) & x for v in set(g) - x)


def subsets(g):
    vs = list(g)
    for r in range(len(vs) + 1):
        for c in itertools.combinations(vs, r):
            yield frozenset(c)


def best_sum(g):
    return max(s(g, a) + s(g, frozenset(g) - a) for a in subsets(g))


def min_size(g, pred):
    for a in subsets(g):
        if pred(g, a):
            return len(a), sorted(a)


def twin_free(g):
    for u, v in itertools.combinations(g, 2):
        if set(g[u]) - {v} == set(g[v]) - {u}:
            return False
    return True


def s_n(g):
    return sum(s(g, frozenset([v])) for v in g)


if __name__ == "__main__":
    named = {
        "P4": nx.path_graph(4),
        "K1": nx.empty_graph(1),
        "K3": nx.complete_graph(3),
        "C4": nx.cycle_graph(4),
        "C5": nx.cycle_graph(5),
        "Petersen": nx.petersen_graph(),
    }
    for name, g in named.items():
        g6 = nx.to_graph6_bytes(g, header=False).strip().decode()
        print(name, g6, "S", best_sum(g),
              "L", min_size(g, locating), "LD",
              min_size(g, lambda h, x: locating(h, x) and dominating(h, x)),
              "twin_free", twin_free(g))
    print("P70", nx.to_graph6_bytes(nx.path_graph(70), header=False).strip().decode())
    # smallest s_n over twin-free labeled graphs per order
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        best = None
        count = 0
        for bits in range(1 << len(pairs)):
            g = nx.empty_graph(n)
            g.add_edges_from(p for i, p in enumerate(pairs) if bits >> i & 1)
            if twin_free(g):
                count += 1
                v = s_n(g)
                best = v if best is None else min(best, v)
        print("n", n, "twin_free_labeled", count, "min_s_n", best)
