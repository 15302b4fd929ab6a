"""Deterministic graph corpora used by the verification suites."""

from __future__ import annotations

import random

from .graph import Graph, make_complete, make_cycle, make_path, make_tcaterpillar, random_graph


def family_graphs(max_n: int, min_n: int = 2) -> list[tuple[str, Graph]]:
    """P_n, C_n and T_n for every admissible n in [min_n, max_n]."""
    out = []
    for n in range(max(min_n, 2), max_n + 1):
        out.append((f"P{n}", make_path(n)))
        if n >= 3:
            out.append((f"C{n}", make_cycle(n)))
            out.append((f"T{n}", make_tcaterpillar(n)))
    return out


def random_corpus(count: int = 200, max_edges: int = 12, max_n: int = 8,
                  seed: int = 0) -> list[tuple[str, Graph]]:
    """``count`` seeded G(n, p) samples with at most ``max_edges`` edges.

    Disconnected samples are kept. Sample k uses n in 1..max_n and a
    density drawn from its own stream; oversize samples are redrawn.
    """
    out = []
    for k in range(count):
        rng = random.Random(f"{seed}:{k}")
        n = 1 + k % max_n
        while True:
            g = random_graph(n, rng.uniform(0.2, 0.9), seed=rng.getrandbits(64))
            if g.m <= max_edges:
                break
        out.append((f"G{k}(n={n},m={g.m})", g))
    return out


def oracle_corpus() -> list[tuple[str, Graph]]:
    """Families up to n = 8, K1, K3, K4 and 200 random graphs, all with <= 12 edges."""
    named = [("K1", Graph(1, ())), ("K3", make_complete(3)), ("K4", make_complete(4))]
    return named + family_graphs(8) + random_corpus()


def exact_corpus(max_n: int) -> list[tuple[str, Graph]]:
    """Families up to ``max_n`` plus a few larger random graphs, for exact-only checks."""
    extra = [(f"K{n}", make_complete(n)) for n in (3, 5, 8) if n <= max_n]
    for k, n in enumerate(range(10, max_n + 1, 5)):
        extra.append((f"R{n}", random_graph(n, 0.3, seed=k)))
    return family_graphs(max_n) + extra
