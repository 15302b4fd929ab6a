"""Information dissemination along uniformly chosen rooted forests.

A transmission plan is a spanning rooted forest: an idea enters at the
roots and travels along tree edges, so the source of the idea reaching
vertex j is the root of j's tree. Plans are drawn uniformly from all
rooted forests, which makes the source frequencies converge to F.

Sampling is two-stage and exact: an acyclic edge subset is drawn with
probability proportional to the product of its tree sizes, then each tree
gets a uniformly random root. The acyclic-subset table is enumerated once
per graph and cached.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import EnumerationLimitError, ValidationError
from .exact import DEFAULT_EDGE_CAP, ForestTable, ProximityMatrix, RootedForest, forest_table
from .graph import Graph
from .random_walk import DEFAULT_BLOCK_SIZE, block_rng


class ForestSampler:
    """Uniform sampler over the rooted forests of a small graph.

    Forest indices follow the enumeration order of
    ``enumerate_rooted_forests``: subsets by bitmask, then root tuples
    lexicographically with the first tree most significant.
    """

    def __init__(self, g: Graph, cap: int = DEFAULT_EDGE_CAP):
        self.graph = g
        self.table: ForestTable = forest_table(g, cap)
        self.total = self.table.total()
        if self.total >= 2 ** 63:
            raise EnumerationLimitError(f"{self.total} forests exceed the 64-bit sampler range")
        self.cumulative = np.cumsum(self.table.weights)
        self.offsets = self.cumulative - self.table.weights
        self._tree_arrays = [
            [np.asarray(t, dtype=np.int64) for t in trees] for trees in self.table.trees]

    def sample_subsets(self, rng: np.random.Generator, size: int) -> np.ndarray:
        r = rng.integers(0, self.total, size=size)
        return np.searchsorted(self.cumulative, r, side="right")

    def sample_roots(self, rng: np.random.Generator, s: int, size: int) -> list[np.ndarray]:
        """Uniform roots for each tree of subset ``s``, ``size`` draws each."""
        return [t[rng.integers(0, t.size, size=size)] for t in self._tree_arrays[s]]

    def sample_indices(self, count: int, seed: int) -> np.ndarray:
        """Enumeration indices of ``count`` independent uniform forests."""
        rng = block_rng(seed)
        subsets = self.sample_subsets(rng, count)
        out = np.empty(count, dtype=np.int64)
        for s in range(len(self.table)):
            where = np.flatnonzero(subsets == s)
            if not where.size:
                continue
            local = np.zeros(where.size, dtype=np.int64)
            for t, roots in zip(self._tree_arrays[s], self.sample_roots(rng, s, where.size)):
                local = local * t.size + np.searchsorted(t, roots)
            out[where] = self.offsets[s] + local
        return out

    def forest(self, index: int) -> RootedForest:
        """The rooted forest at a given enumeration index."""
        if not 0 <= index < self.total:
            raise IndexError(index)
        s = int(np.searchsorted(self.cumulative, index, side="right"))
        local = index - int(self.offsets[s])
        roots = []
        for t in reversed(self.table.trees[s]):
            local, k = divmod(local, len(t))
            roots.append(t[k])
        return RootedForest(self.table.subset_edges(s), tuple(reversed(roots)))

    def sample(self, rng: np.random.Generator) -> RootedForest:
        s = int(self.sample_subsets(rng, 1)[0])
        roots = tuple(int(r[0]) for r in self.sample_roots(rng, s, 1))
        return RootedForest(self.table.subset_edges(s), roots)


def sample_rooted_forest(g: Graph, seed: int, cap: int = DEFAULT_EDGE_CAP) -> RootedForest:
    """One rooted forest drawn uniformly from all rooted forests of ``g``."""
    return ForestSampler(g, cap).sample(block_rng(seed))


@dataclass(frozen=True)
class DisseminationEstimate:
    """``source_counts[i-1][j-1]``: trials in which j received its idea from root i."""

    n: int
    source_counts: np.ndarray = field(repr=False)
    trials: int

    @property
    def estimates(self) -> np.ndarray:
        return self.source_counts / self.trials

    def own_idea_odds(self, v: int) -> float:
        """Ideas injected at v per idea adopted from elsewhere."""
        own = int(self.source_counts[v - 1, v - 1])
        return own / (self.trials - own)

    def max_abs_error(self, exact: ProximityMatrix) -> float:
        return float(np.abs(self.estimates - exact.as_floats()).max())

    def report(self, seed: int, exact: ProximityMatrix) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": seed,
            "source_estimates": self.estimates.tolist(),
            "max_abs_error_vs_exact": self.max_abs_error(exact),
        }


def _source_block(sampler: ForestSampler, size: int, rng: np.random.Generator) -> np.ndarray:
    n = sampler.graph.n
    counts = np.zeros((n, n), dtype=np.int64)
    subsets, multiplicity = np.unique(sampler.sample_subsets(rng, size), return_counts=True)
    for s, c in zip(subsets.tolist(), multiplicity.tolist()):
        for t, roots in zip(sampler._tree_arrays[s], sampler.sample_roots(rng, s, c)):
            tally = np.bincount(roots - 1, minlength=n)
            counts[:, t - 1] += tally[:, None]
    return counts


def estimate_source_probabilities(g: Graph, trials: int, seed: int, workers: int = 1,
                                  block_size: int = DEFAULT_BLOCK_SIZE,
                                  cap: int = DEFAULT_EDGE_CAP) -> DisseminationEstimate:
    """Empirical Pr{idea at j came from root i} over ``trials`` uniform plans.

    Block ``b`` of trials draws from ``SeedSequence(seed, spawn_key=(b,))``.
    """
    if trials < 1:
        raise ValidationError(f"trials must be >= 1, got {trials}")
    sampler = ForestSampler(g, cap)
    blocks = -(-trials // block_size)
    sizes = [min(block_size, trials - b * block_size) for b in range(blocks)]

    def work(b):
        return _source_block(sampler, sizes[b], block_rng(seed, b))

    if workers == 1:
        parts = map(work, range(blocks))
    else:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(work, range(blocks)))
    counts = np.zeros((g.n, g.n), dtype=np.int64)
    for part in parts:
        counts += part
    return DisseminationEstimate(g.n, counts, trials)
