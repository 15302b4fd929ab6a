"""Invariant suites shared by ``forestmat verify`` and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import closed_forms as cf
from .corpus import exact_corpus, oracle_corpus
from .exact import (
    ForestConstraint,
    ForestCountMatrix,
    count_forests_constrained,
    count_spanning_trees,
    forest_matrix_exact,
    forest_matrix_oracle,
    leading_principal_minors,
    proximity_matrix,
)
from .graph import (
    Graph,
    augment_with_hub,
    identity_plus_laplacian,
    make_cycle,
    make_path,
    make_tcaterpillar,
)
from .random_walk import exact_q_matrix

P4_FIXTURE = {
    "graph": {"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]},
    "f": "21",
    "counts": [["13", "5", "2", "1"],
               ["5", "10", "4", "2"],
               ["2", "4", "10", "5"],
               ["1", "2", "5", "13"]],
}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        if condition:
            self.passed += 1
        else:
            self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed} passed, {self.failed} failed"


Corpus = Iterable[tuple[str, Graph]]


def matrix_identity_holds(g: Graph, fc: ForestCountMatrix) -> bool:
    """(I + L) * counts == f * I."""
    m = identity_plus_laplacian(g)
    n = g.n
    for i in range(n):
        for j in range(n):
            s = sum(m[i][k] * fc.counts[k][j] for k in range(n))
            if s != (fc.f if i == j else 0):
                return False
    return True


def oracle_suite(corpus: Corpus | None = None) -> SuiteResult:
    """Enumeration oracle against the exact adjugate, entry by entry."""
    res = SuiteResult("oracle equivalence")
    for name, g in corpus if corpus is not None else oracle_corpus():
        fc = forest_matrix_exact(g)
        oracle = forest_matrix_oracle(g)
        res.check(oracle.f == fc.f, f"{name}: oracle f = {oracle.f}, exact f = {fc.f}")
        res.check(oracle.counts == fc.counts, f"{name}: oracle matrix differs from adjugate")
        for i in g.vertices:
            for j in g.vertices:
                c = count_forests_constrained(g, ForestConstraint(same_tree_rooted_at=(i, j)))
                res.check(c == fc.entry(i, j),
                          f"{name}: constrained count ({i},{j}) = {c}, f_ij = {fc.entry(i, j)}")
        res.check(count_spanning_trees(augment_with_hub(g)) == fc.f,
                  f"{name}: hub spanning trees differ from f")
    return res


def bounds_suite(corpus: Corpus) -> SuiteResult:
    """Structural properties of (f_ij) and F on every graph of the corpus."""
    res = SuiteResult("matrix properties and bounds")
    for name, g in corpus:
        fc = forest_matrix_exact(g)
        f, c, n = fc.f, fc.counts, g.n
        res.check(matrix_identity_holds(g, fc), f"{name}: (I+L) counts != f I")
        res.check(all(c[i][j] == c[j][i] for i in range(n) for j in range(n)),
                  f"{name}: counts not symmetric")
        res.check(all(sum(row) == f for row in c), f"{name}: a row sum differs from f")
        pm = proximity_matrix(fc)
        res.check(all(sum(row) == 1 for row in pm.entries)
                  and all(sum(pm.entries[i][j] for i in range(n)) == 1 for j in range(n)),
                  f"{name}: F is not doubly stochastic")
        for i in range(n):
            for j in range(n):
                if i != j:
                    res.check(2 * c[i][j] <= c[i][i],
                              f"{name}: 2 f_{i + 1}{j + 1} > f_{i + 1}{i + 1}")
            res.check(c[i][i] * (1 + g.degree(i + 1)) >= f,
                      f"{name}: f_{i + 1}{i + 1} (1 + d) < f")
        minors = leading_principal_minors(c)
        res.check(len(minors) == n and all(x > 0 for x in minors),
                  f"{name}: counts matrix is not positive definite")
    return res


def closed_form_suite(max_n: int = 40) -> SuiteResult:
    res = SuiteResult("closed forms")
    for n in range(2, max_n + 1):
        exact_p = forest_matrix_exact(make_path(n))
        res.check(cf.path_counts(n) == exact_p, f"path n={n}: closed form differs")
        if n < 3:
            continue
        exact_c = forest_matrix_exact(make_cycle(n))
        res.check(cf.cycle_counts(n) == exact_c, f"cycle n={n}: closed form differs")
        res.check(cf.cycle_counts_lucas(n) == exact_c, f"cycle n={n}: Lucas form differs")
        exact_t = forest_matrix_exact(make_tcaterpillar(n))
        t = cf.tcaterpillar_counts(n)
        res.check((t.f, t.f33, t.fnn) == (exact_t.f, exact_t.entry(3, 3), exact_t.entry(n, n)),
                  f"T-caterpillar n={n}: closed form differs")
    return res


def walk_identity_suite(max_n: int = 30) -> SuiteResult:
    """Q computed from the walk equals F exactly."""
    res = SuiteResult("walk identity Q = F")
    for name, g in exact_corpus(max_n):
        res.check(exact_q_matrix(g) == proximity_matrix(forest_matrix_exact(g)),
                  f"{name}: Q != F")
    return res


def fixture_suite(fixture: dict) -> SuiteResult:
    """Compare a stored {graph, f, counts} fixture with the exact computation."""
    res = SuiteResult("fixture")
    g = Graph.from_json(fixture["graph"])
    fc = forest_matrix_exact(g)
    f = int(fixture["f"])
    res.check(f == fc.f, f"f: expected {f}, computed {fc.f}")
    for i, row in enumerate(fixture["counts"], start=1):
        for j, x in enumerate(row, start=1):
            x = int(x)
            res.check(x == fc.entry(i, j),
                      f"entry ({i},{j}): expected {x}, computed {fc.entry(i, j)}")
    return res


def run_suites(scope: str = "fast", fixture: dict | None = None,
               log: Callable[[str], None] = print) -> list[SuiteResult]:
    """Run every suite for ``scope`` ("fast" or "all") and log one line each."""
    big = scope == "all"
    oracle_graphs = oracle_corpus()
    suites = [
        lambda: fixture_suite(fixture if fixture is not None else P4_FIXTURE),
        lambda: oracle_suite(oracle_graphs),
        lambda: bounds_suite(oracle_graphs + (exact_corpus(30) if big else [])),
        lambda: closed_form_suite(40 if big else 20),
        lambda: walk_identity_suite(30 if big else 12),
        lambda: golden_suite(40),
    ]
    results = []
    for make in suites:
        r = make()
        log(r.summary())
        for msg in r.failures[:20]:
            log(f"  {msg}")
        results.append(r)
    return results


def golden_suite(n: int = 40) -> SuiteResult:
    res = SuiteResult("golden-ratio limits")
    for family in cf.FAMILIES:
        gap = cf.golden_ratio_gap(family, n)
        res.check(gap < 1e-12, f"{family} n={n}: gap {gap:.3e} >= 1e-12")
    g = make_tcaterpillar(n).add_edge(1, 2)
    fc = forest_matrix_exact(g)
    for family, v in ((cf.TCAT_LAST_VERTEX, n), (cf.TCAT_VERTEX_3, 3)):
        gap = cf.ratio_gap(Fraction(fc.entry(v, v), fc.f), cf.golden_ratio_limit(family))
        res.check(gap < 1e-10, f"T{n}+(1,2) vertex {v}: gap {gap:.3e} >= 1e-10")
    return res
