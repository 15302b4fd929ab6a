"""Independent brute-force oracles used to derive frozen expected values.

These share no code with forestmat's enumeration: subsets come from
itertools.combinations and acyclicity/components from networkx.
"""

import itertools

import networkx as nx


def naive_rooted_forests(g):
    """Yield (edge subset, {root: tree vertex set}) for every rooted forest."""
    for r in range(len(g.edges) + 1):
        for sub in itertools.combinations(g.edges, r):
            h = nx.Graph()
            h.add_nodes_from(g.vertices)
            h.add_edges_from(sub)
            if not nx.is_forest(h):
                continue
            comps = [frozenset(c) for c in nx.connected_components(h)]
            for roots in itertools.product(*[sorted(c) for c in comps]):
                yield sub, dict(zip(roots, comps))


def naive_forest_matrix(g):
    n = g.n
    f = 0
    counts = [[0] * n for _ in range(n)]
    for _, trees in naive_rooted_forests(g):
        f += 1
        for root, comp in trees.items():
            for j in comp:
                counts[root - 1][j - 1] += 1
    return f, counts


def naive_constrained(g, required_roots=(), same_tree=None):
    total = 0
    for _, trees in naive_rooted_forests(g):
        if not set(required_roots) <= trees.keys():
            continue
        if same_tree is not None:
            i, j = same_tree
            if i not in trees or j not in trees[i]:
                continue
        total += 1
    return total
