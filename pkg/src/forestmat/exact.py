"""Exact spanning-rooted-forest counts.

Two independent routes are provided:

* the matrix route, ``forest_matrix_exact``: f = det(I + L) by fraction-free
  (Bareiss) elimination and (f_ij) = adj(I + L) = f * (I + L)^-1 via exact
  rational Gauss-Jordan inversion;
* the enumeration route, which walks every acyclic edge subset and counts
  root assignments directly from the definition of a rooted forest.

The second is exponential in the edge count and guarded by an edge cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import ConstraintError, EnumerationLimitError
from .graph import Graph, identity_plus_laplacian, laplacian

DEFAULT_EDGE_CAP = 20


# --------------------------------------------------------------------------
# exact linear algebra

def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_principal_minors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """All leading principal minors of an integer matrix.

    Bareiss elimination without row exchanges leaves the k-th leading minor
    on the diagonal at step k. Stops early (returning the minors found so
    far, the last one zero) if a minor vanishes.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return minors


def rational_inverse(matrix: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    width = 2 * n
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise ZeroDivisionError("matrix is singular")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
        row = a[col]
        pivot = row[col]
        if pivot != 1:
            inv = 1 / pivot
            row = a[col] = [x * inv if x else x for x in row]
        nonzero = [j for j in range(col, width) if row[j]]
        for r in range(n):
            if r == col:
                continue
            other = a[r]
            factor = other[col]
            if factor:
                for j in nonzero:
                    other[j] -= factor * row[j]
    return [row[n:] for row in a]


# --------------------------------------------------------------------------
# result types

@dataclass(frozen=True)
class ForestCountMatrix:
    """Total forest count ``f`` and the matrix ``counts`` of f_ij values.

    ``counts[i - 1][j - 1]`` is the number of spanning rooted forests in
    which vertex j belongs to the tree rooted at vertex i.
    """

    n: int
    f: int
    counts: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """f_ij with 1-based labels."""
        return self.counts[i - 1][j - 1]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "f": str(self.f),
            "counts": [[str(x) for x in row] for row in self.counts],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ForestCountMatrix":
        counts = tuple(tuple(int(x) for x in row) for row in data["counts"])
        return cls(int(data["n"]), int(data["f"]), counts)


@dataclass(frozen=True)
class ProximityMatrix:
    """The doubly stochastic matrix F = (f_ij) / f with exact entries."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def diagonal(self) -> list[Fraction]:
        return [self.entries[i][i] for i in range(self.n)]

    def as_floats(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [[{"num": str(x.numerator), "den": str(x.denominator)} for x in row]
                        for row in self.entries],
        }

    def to_csv_rows(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.entries]


@dataclass(frozen=True)
class RootedForest:
    """A spanning rooted forest.

    ``edges`` is a sorted tuple of graph edges. ``roots`` holds one root per
    tree, with trees ordered by their smallest vertex.
    """

    edges: tuple[tuple[int, int], ...]
    roots: tuple[int, ...]


@dataclass(frozen=True)
class ForestConstraint:
    """Restriction on the forests to count.

    ``required_roots``: vertices that must be roots.
    ``same_tree_rooted_at``: pair (i, j) asking that j lie in the tree rooted at i.
    """

    required_roots: frozenset[int] = frozenset()
    same_tree_rooted_at: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "required_roots", frozenset(self.required_roots))

    def vertices(self) -> set[int]:
        vs = set(self.required_roots)
        if self.same_tree_rooted_at is not None:
            vs.update(self.same_tree_rooted_at)
        return vs


# --------------------------------------------------------------------------
# matrix route

def forest_matrix_exact(g: Graph) -> ForestCountMatrix:
    """f = det(I + L) and (f_ij) = adj(I + L), exactly."""
    m = identity_plus_laplacian(g)
    f = bareiss_determinant(m)
    inv = rational_inverse(m)
    counts = []
    for i, row in enumerate(inv):
        out = []
        for j, x in enumerate(row):
            y = x * f
            if y.denominator != 1 or y < 0:
                raise ArithmeticError(
                    f"adjugate entry ({i + 1}, {j + 1}) = {y} is not a nonnegative integer")
            out.append(y.numerator)
        counts.append(tuple(out))
    return ForestCountMatrix(g.n, f, tuple(counts))


def proximity_matrix(fc: ForestCountMatrix) -> ProximityMatrix:
    return ProximityMatrix(
        fc.n, tuple(tuple(Fraction(x, fc.f) for x in row) for row in fc.counts))


def count_spanning_trees(g: Graph) -> int:
    """Spanning-tree count via a Laplacian cofactor (0 if disconnected)."""
    if g.n == 1:
        return 1
    lap = laplacian(g)
    return bareiss_determinant([row[:-1] for row in lap[:-1]])


# --------------------------------------------------------------------------
# enumeration route

class ForestTable:
    """Every acyclic edge subset of a graph, sorted by bitmask.

    Bit k of a mask selects ``graph.edges[k]``. For subset s:
    ``labels[s, v-1]`` is the tree index of vertex v (trees numbered by
    smallest vertex), ``sizes[s, v-1]`` the size of v's tree, ``weights[s]``
    the number of ways to root the subset (product of tree sizes), and
    ``trees[s]`` the tuple of sorted vertex tuples per tree.
    """

    def __init__(self, g: Graph):
        self.graph = g
        records = []
        n = g.n
        edges = [(u - 1, v - 1) for u, v in g.edges]
        m = len(edges)

        def extend(k, mask, label):
            if k == m:
                records.append((mask, label))
                return
            extend(k + 1, mask, label)
            u, v = edges[k]
            lu, lv = label[u], label[v]
            if lu != lv:
                merged = tuple(lu if x == lv else x for x in label)
                extend(k + 1, mask | (1 << k), merged)

        extend(0, 0, tuple(range(n)))
        records.sort()

        self.masks = [mask for mask, _ in records]
        self.labels = np.empty((len(records), n), dtype=np.int64)
        self.sizes = np.empty((len(records), n), dtype=np.int64)
        self.weights = np.empty(len(records), dtype=np.int64)
        self.trees = []
        for s, (_, raw) in enumerate(records):
            canon = {}
            members = []
            for v, lab in enumerate(raw):
                idx = canon.setdefault(lab, len(canon))
                if idx == len(members):
                    members.append([])
                members[idx].append(v + 1)
                self.labels[s, v] = idx
            tree_sizes = [len(t) for t in members]
            for v in range(n):
                self.sizes[s, v] = tree_sizes[self.labels[s, v]]
            self.weights[s] = _product(tree_sizes)
            self.trees.append(tuple(tuple(t) for t in members))

    def __len__(self):
        return len(self.masks)

    def subset_edges(self, s: int) -> tuple[tuple[int, int], ...]:
        mask = self.masks[s]
        return tuple(e for k, e in enumerate(self.graph.edges) if mask >> k & 1)

    def total(self) -> int:
        return int(self.weights.sum())


def _product(values) -> int:
    out = 1
    for x in values:
        out *= x
    return out


def _check_cap(g: Graph, cap: int) -> None:
    if g.m > cap:
        raise EnumerationLimitError(
            f"graph has {g.m} edges; brute-force enumeration is capped at {cap} edges")


@lru_cache(maxsize=64)
def _cached_table(g: Graph) -> ForestTable:
    return ForestTable(g)


def forest_table(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> ForestTable:
    _check_cap(g, cap)
    return _cached_table(g)


def enumerate_rooted_forests(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> Iterator[RootedForest]:
    """Yield every spanning rooted forest once, ordered by (edge bitmask, roots)."""
    table = forest_table(g, cap)
    for s in range(len(table)):
        edges = table.subset_edges(s)
        for roots in itertools.product(*table.trees[s]):
            yield RootedForest(edges, roots)


def count_forests_constrained(g: Graph, c: ForestConstraint = ForestConstraint(),
                              cap: int = DEFAULT_EDGE_CAP) -> int:
    """Count rooted forests satisfying ``c`` by brute force."""
    bad = [v for v in sorted(c.vertices()) if not 1 <= v <= g.n]
    if bad:
        raise ConstraintError(f"constraint names vertex {bad[0]} outside 1..{g.n}")
    table = forest_table(g, cap)
    roots = set(c.required_roots)
    keep = np.ones(len(table), dtype=bool)
    if c.same_tree_rooted_at is not None:
        i, j = c.same_tree_rooted_at
        keep &= table.labels[:, i - 1] == table.labels[:, j - 1]
        roots.add(i)
    roots = sorted(roots)
    # two required roots in one tree is impossible
    for a, b in itertools.combinations(roots, 2):
        keep &= table.labels[:, a - 1] != table.labels[:, b - 1]
    counts = table.weights[keep]
    for r in roots:
        counts = counts // table.sizes[keep, r - 1]
    return int(counts.sum())


def forest_matrix_oracle(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> ForestCountMatrix:
    """The whole (f_ij) matrix by enumeration, in one pass over the table."""
    table = forest_table(g, cap)
    n = g.n
    counts = []
    for i in range(n):
        rooted_at_i = table.weights // table.sizes[:, i]
        same = table.labels == table.labels[:, [i]]
        counts.append(tuple(int(x) for x in rooted_at_i @ same))
    return ForestCountMatrix(n, table.total(), tuple(counts))
