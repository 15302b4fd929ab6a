from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath
import pytest

from forestmat import closed_forms as cf
from forestmat.errors import InvalidSizeError, ValidationError
from forestmat.exact import forest_matrix_exact, proximity_matrix
from forestmat.fibonacci import fib, fib_even, fib_odd, lucas
from forestmat.graph import Graph, make_complete, make_cycle, make_path, make_tcaterpillar


def test_path_examples():
    fc = cf.path_counts(4)
    assert fc.f == 21
    assert fc.entry(1, 3) == 2
    assert fc.entry(1, 1) == 13
    two = cf.path_counts(2)
    assert (two.f, two.counts) == (3, ((2, 1), (1, 2)))


def test_cycle_examples():
    c3 = cf.cycle_counts(3)
    assert c3.f == 16
    assert c3.counts == ((8, 4, 4), (4, 8, 4), (4, 4, 8))
    assert cf.cycle_counts(5).f == 121 == lucas(5) ** 2 == fib(9) + fib(11) - 2
    assert cf.cycle_counts(6).entry(1, 3) == 24 == lucas(2) * fib(6)


def test_cycle_lucas_examples():
    c5 = cf.cycle_counts_lucas(5)
    assert c5.f == 121 and c5.entry(1, 2) == 22 == fib_even(1) + fib_even(4)
    c6 = cf.cycle_counts_lucas(6)
    assert c6.f == 320 == fib_odd(6) + fib_odd(7) - 2
    assert cf.cycle_counts_lucas(4).entry(2, 2) == 21


def test_tcaterpillar_examples():
    assert cf.tcaterpillar_counts(4) == (20, 8, 12)
    assert cf.tcaterpillar_counts(5).f == 52
    assert cf.tcaterpillar_counts(3).f == 8 == cf.path_counts(3).f


def test_row_numerators():
    assert cf.cycle_row_numerators(5) == [5, 2, 1, 1, 2]
    assert cf.cycle_row_numerators(6) == [18, 7, 3, 2, 3, 7]
    assert cf.cycle_row_numerators(3) == [2, 1, 1]
    odd = [34, 13, 5, 2, 1, 1, 2, 5, 13, 34]
    even = [47, 18, 7, 3, 2, 3, 7, 18, 47]
    for n in range(3, 10):
        row = cf.cycle_row_numerators(n)
        seq = odd if n % 2 else even
        assert any(seq[k:k + len(row)] == row for k in range(len(seq)))


@pytest.mark.parametrize("n", range(3, 20))
def test_row_numerators_give_f_row(n):
    den = lucas(n) if n % 2 else 5 * fib(n)
    pm = proximity_matrix(forest_matrix_exact(make_cycle(n)))
    assert [Fraction(x, den) for x in cf.cycle_row_numerators(n)] == list(pm.entries[0])


@pytest.mark.parametrize("func, smallest", [
    (cf.path_counts, 2), (cf.cycle_counts, 3), (cf.cycle_counts_lucas, 3),
    (cf.tcaterpillar_counts, 3), (cf.cycle_row_numerators, 3)])
def test_size_errors(func, smallest):
    with pytest.raises(InvalidSizeError):
        func(smallest - 1)


@pytest.mark.parametrize("n", range(2, 41))
def test_closed_forms_match_exact(n):
    assert cf.path_counts(n) == forest_matrix_exact(make_path(n))
    if n >= 3:
        exact = forest_matrix_exact(make_cycle(n))
        assert cf.cycle_counts(n) == exact == cf.cycle_counts_lucas(n)
        t = forest_matrix_exact(make_tcaterpillar(n))
        assert cf.tcaterpillar_counts(n) == (t.f, t.entry(3, 3), t.entry(n, n))


def test_classification_examples():
    p4 = cf.classify_vertices(proximity_matrix(forest_matrix_exact(make_path(4))))
    assert [(c.kind, c.ratio) for c in p4[:2]] == [
        (cf.INTROVERT, Fraction(13, 21)), (cf.EXTROVERT, Fraction(10, 21))]
    k3 = cf.classify_vertices(proximity_matrix(forest_matrix_exact(make_complete(3))))
    assert [c.kind for c in k3] == [cf.BOUNDARY] * 3
    assert str(k3[0]) == "1 boundary 1/2"
    one = cf.classify_vertices(proximity_matrix(forest_matrix_exact(Graph(1, ()))))
    assert (one[0].kind, one[0].ratio) == (cf.INTROVERT, 1)


def test_classification_sweep():
    for n in range(2, 41):
        ends = cf.classify_vertices(proximity_matrix(cf.path_counts(n)))
        assert ends[0].kind == ends[-1].kind == cf.INTROVERT
    for n in range(4, 41):
        t = cf.tcaterpillar_counts(n)
        assert cf.classify_ratio(Fraction(t.f33, t.f)) == cf.EXTROVERT


def test_golden_gap_examples():
    mpmath.mp.dps = 50
    expected = abs(mpmath.mpf(13) / 21 - (mpmath.sqrt(5) - 1) / 2)
    gap = cf.golden_ratio_gap(cf.PATH_FIRST_VERTEX, 4)
    assert abs(float(gap) - float(expected)) < 1e-15
    assert Decimal("0.00101") < gap < Decimal("0.00102")
    assert cf.golden_ratio_gap(cf.TCAT_VERTEX_3, 400) < Decimal("1e-55")
    assert cf.golden_ratio_gap(cf.PATH_FIRST_VERTEX, 20) < 1e-8


def test_golden_gap_monotone():
    gaps = [cf.golden_ratio_gap(cf.PATH_FIRST_VERTEX, n) for n in range(2, 61)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert all(g < 1e-12 for g in gaps[38:])


def test_golden_limit_identity():
    with localcontext() as ctx:
        ctx.prec = 60
        inv = cf.golden_ratio_limit(cf.TCAT_LAST_VERTEX)
        assert cf.golden_ratio_limit(cf.TCAT_VERTEX_3) == 1 - inv
        assert abs(inv * inv - (1 - inv)) < Decimal("1e-55")


def test_golden_gap_validation():
    with pytest.raises(ValidationError):
        cf.golden_ratio_gap("star-center", 10)
    with pytest.raises(InvalidSizeError):
        cf.golden_ratio_gap(cf.TCAT_VERTEX_3, 2)


def test_tcaterpillar_plus_edge_limits():
    n = 40
    g = make_tcaterpillar(n).add_edge(1, 2)
    fc = forest_matrix_exact(g)
    for family, v in ((cf.TCAT_LAST_VERTEX, n), (cf.TCAT_VERTEX_3, 3)):
        gap = cf.ratio_gap(Fraction(fc.entry(v, v), fc.f), cf.golden_ratio_limit(family))
        assert gap < 1e-10
