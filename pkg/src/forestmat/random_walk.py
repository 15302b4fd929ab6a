"""Random walks with a geometric number of steps.

The chain is P = I - L / (n - 1): from vertex i every neighbour is entered
with probability 1/(n-1) and the walk stays put otherwise. The number of
steps K is geometric, Pr{K = k} = (1/n)(1 - 1/n)^k, so the overall
transition matrix Q = sum_k Pr{K = k} P^k equals (I + L)^-1.

Simulation uses only integer draws. Before every step a uniform integer in
[0, n) is drawn and the walk stops on 0; a step draws u in [0, n-2] and
moves to the u-th neighbour (sorted) if u < deg(i), else stays.

Seed splitting: walks for start vertex ``i`` are processed in fixed blocks
of ``block_size``; block ``b`` draws from
``SeedSequence(seed, spawn_key=(i - 1, b))``. Blocks are the unit of
parallel work, so results do not depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidSizeError, ValidationError
from .exact import ProximityMatrix, rational_inverse
from .graph import Graph, laplacian

DEFAULT_BLOCK_SIZE = 1 << 16


def _require_walkable(g: Graph) -> None:
    if g.n < 2:
        raise InvalidSizeError(f"random walk needs n >= 2, got {g.n}")


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]


def transition_matrix(g: Graph) -> TransitionMatrix:
    """P = I - L / (n - 1), exact."""
    _require_walkable(g)
    eps = Fraction(1, g.n - 1)
    rows = []
    for i, row in enumerate(laplacian(g)):
        rows.append(tuple(int(i == j) - eps * x for j, x in enumerate(row)))
    return TransitionMatrix(g.n, tuple(rows))


def exact_q_matrix(g: Graph) -> ProximityMatrix:
    """(1/n) (I - (1 - 1/n) P)^-1 in exact rational arithmetic."""
    p = transition_matrix(g)
    n = g.n
    keep = 1 - Fraction(1, n)
    m = [[int(i == j) - keep * p.entries[i][j] for j in range(n)] for i in range(n)]
    inv = rational_inverse(m)
    return ProximityMatrix(n, tuple(tuple(x / n for x in row) for row in inv))


def expected_steps(g: Graph) -> Fraction:
    """E[K] = (1 - q) / q with q = 1/n, i.e. n - 1."""
    _require_walkable(g)
    q = Fraction(1, g.n)
    return (1 - q) / q


@dataclass(frozen=True)
class WalkConfig:
    n: int
    num_walks: int
    seed: int
    max_steps: int | None = None
    workers: int = 1
    block_size: int = DEFAULT_BLOCK_SIZE

    def __post_init__(self):
        if self.n < 2:
            raise InvalidSizeError(f"random walk needs n >= 2, got {self.n}")
        if self.num_walks < 1:
            raise ValidationError(f"num_walks must be >= 1, got {self.num_walks}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.workers < 1 or self.block_size < 1:
            raise ValidationError("workers and block_size must be positive")
        if self.max_steps is None:
            object.__setattr__(self, "max_steps", 1000 * self.n)

    @classmethod
    def for_graph(cls, g: Graph, num_walks: int, seed: int, **kwargs) -> "WalkConfig":
        return cls(g.n, num_walks, seed, **kwargs)

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, self.n - 1)

    @property
    def q(self) -> Fraction:
        return Fraction(1, self.n)


@dataclass(frozen=True)
class WalkEstimate:
    """Terminal-vertex counts: ``hits[i-1][j-1]`` walks from i ended at j."""

    n: int
    hits: np.ndarray = field(repr=False)
    num_walks_per_start: int
    aborted_walks: int = 0
    total_steps: int = 0
    zero_step_walks: int = 0

    @property
    def estimates(self) -> np.ndarray:
        return self.hits / self.num_walks_per_start

    @property
    def mean_steps(self) -> float:
        return self.total_steps / (self.n * self.num_walks_per_start)

    @property
    def zero_step_fraction(self) -> float:
        return self.zero_step_walks / (self.n * self.num_walks_per_start)

    def max_abs_error(self, exact: ProximityMatrix) -> float:
        return float(np.abs(self.estimates - exact.as_floats()).max())

    def report(self, seed: int, exact: ProximityMatrix) -> dict:
        return {
            "n": self.n,
            "num_walks": self.num_walks_per_start,
            "seed": seed,
            "estimates": self.estimates.tolist(),
            "max_abs_error_vs_exact": self.max_abs_error(exact),
            "aborted_walks": self.aborted_walks,
        }


def step_table(g: Graph) -> np.ndarray:
    """``table[v, u]``: 0-based vertex reached from v on step draw u in [0, n-2]."""
    table = np.empty((g.n, g.n - 1), dtype=np.int64)
    for v in g.vertices:
        nbrs = [w - 1 for w in g.neighbors(v)]
        table[v - 1] = nbrs + [v - 1] * (g.n - 1 - len(nbrs))
    return table


def block_rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def _run_block(table: np.ndarray, start: int, size: int, max_steps: int,
               rng: np.random.Generator):
    n = table.shape[0]
    state = np.full(size, start, dtype=np.int64)
    steps = np.zeros(size, dtype=np.int64)
    active = np.arange(size)
    aborted = 0
    while active.size:
        stop = rng.integers(0, n, size=active.size) == 0
        active = active[~stop]
        if not active.size:
            break
        u = rng.integers(0, n - 1, size=active.size)
        state[active] = table[state[active], u]
        steps[active] += 1
        over = active[steps[active] > max_steps]
        if over.size:
            aborted += over.size
            state[over] = start
            steps[over] = 0
    hits = np.bincount(state, minlength=n)
    return hits, aborted, int(steps.sum()), int((steps == 0).sum())


def simulate_walks(g: Graph, cfg: WalkConfig) -> WalkEstimate:
    """Run ``cfg.num_walks`` geometric-stop walks from every vertex."""
    _require_walkable(g)
    if cfg.n != g.n:
        raise ValidationError(f"config is for n = {cfg.n} but the graph has n = {g.n}")
    table = step_table(g)
    blocks = -(-cfg.num_walks // cfg.block_size)
    tasks = []
    for start in range(g.n):
        for b in range(blocks):
            size = min(cfg.block_size, cfg.num_walks - b * cfg.block_size)
            tasks.append((start, b, size))

    def work(task):
        start, b, size = task
        return start, _run_block(table, start, size, cfg.max_steps, block_rng(cfg.seed, start, b))

    if cfg.workers == 1:
        results = map(work, tasks)
    else:
        with ThreadPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(work, tasks))

    hits = np.zeros((g.n, g.n), dtype=np.int64)
    aborted = total_steps = zero_steps = 0
    for start, (row, ab, st, zs) in results:
        hits[start] += row
        aborted += ab
        total_steps += st
        zero_steps += zs
    return WalkEstimate(g.n, hits, cfg.num_walks, aborted, total_steps, zero_steps)
