"""Simple undirected graphs on vertices 1..n and their integer matrices.

Vertices are labelled 1..n everywhere in the public API. Matrices are plain
lists of lists of Python ints indexed from 0, so entry ``[i - 1][j - 1]``
belongs to the vertex pair ``(i, j)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphFormatError, InvalidSizeError

IntegerMatrix = list[list[int]]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as sorted ``(u, v)`` with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise GraphFormatError(f"vertex count must be a positive integer, got {self.n!r}")
        seen = set()
        canonical = []
        for k, edge in enumerate(self.edges):
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise GraphFormatError(f"edges[{k}] = {edge!r} is not a vertex pair") from None
            where = f"edges[{k}] = ({u}, {v})"
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphFormatError(f"{where} has non-integer labels")
            if u == v:
                raise GraphFormatError(f"{where} is a self-loop")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"{where} has a label outside 1..{self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"{where} duplicates edge {key}")
            seen.add(key)
            canonical.append(key)
        canonical.sort()
        object.__setattr__(self, "edges", tuple(canonical))
        adj = [[] for _ in range(self.n + 1)]
        for u, v in canonical:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of vertex ``v``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(self._adj[v]) for v in self.vertices]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + ((u, v),))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise GraphFormatError(
                    f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
                ) from None
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphFormatError('graph JSON must be an object with keys "n" and "edges"')
        if not isinstance(data["edges"], list):
            raise GraphFormatError('"edges" must be a list of [u, v] pairs')
        edges = []
        for k, e in enumerate(data["edges"]):
            if not isinstance(e, list) or len(e) != 2:
                raise GraphFormatError(f"edges[{k}] = {e!r} is not a [u, v] pair")
            edges.append(tuple(e))
        return cls(data["n"], tuple(edges))


def make_path(n: int) -> Graph:
    if n < 2:
        raise InvalidSizeError(f"path needs n >= 2, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((n, 1),))


def make_tcaterpillar(n: int) -> Graph:
    """The path P_n with edge (1,2) replaced by (1,3)."""
    if n < 3:
        raise InvalidSizeError(f"T-caterpillar needs n >= 3, got {n}")
    return Graph(n, ((1, 3), (2, 3)) + tuple((i, i + 1) for i in range(3, n)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def augment_with_hub(g: Graph) -> Graph:
    """Add vertex n+1 adjacent to every original vertex."""
    hub = g.n + 1
    return Graph(hub, g.edges + tuple((v, hub) for v in g.vertices))


def random_graph(n: int, p: float, seed: int, connected: bool = False) -> Graph:
    """Erdos-Renyi G(n, p) sample.

    With ``connected=True`` the sample is redrawn (from the same stream) until
    it is connected.
    """
    if n < 1:
        raise InvalidSizeError(f"random graph needs n >= 1, got {n}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    while True:
        g = Graph(n, tuple(e for e in pairs if rng.random() < p))
        if not connected or is_connected(g):
            return g


def is_connected(g: Graph) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def adjacency_matrix(g: Graph) -> IntegerMatrix:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u - 1][v - 1] = a[v - 1][u - 1] = 1
    return a


def laplacian(g: Graph) -> IntegerMatrix:
    """L = D - A."""
    lap = [[-x for x in row] for row in adjacency_matrix(g)]
    for v in g.vertices:
        lap[v - 1][v - 1] = g.degree(v)
    return lap


def identity_plus_laplacian(g: Graph) -> IntegerMatrix:
    m = laplacian(g)
    for i in range(g.n):
        m[i][i] += 1
    return m
