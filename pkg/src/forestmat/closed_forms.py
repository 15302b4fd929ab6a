"""Fibonacci/Lucas closed forms for paths, cycles and T-caterpillars.

Also the golden-ratio limits of the self-connectivity ratios f_ii / f and
the introvert / extrovert classification of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidSizeError, ValidationError
from .exact import ForestCountMatrix, ProximityMatrix
from .fibonacci import PRECISION, fib, fib_even, fib_odd, inverse_golden_ratio, lucas

HALF = Fraction(1, 2)

INTROVERT = "introvert"
EXTROVERT = "extrovert"
BOUNDARY = "boundary"


def _require(n: int, least: int, what: str) -> None:
    if n < least:
        raise InvalidSizeError(f"{what} closed form needs n >= {least}, got {n}")


def path_counts(n: int) -> ForestCountMatrix:
    """f = F(2n), f_ij = F'(min(i,j)) * F'(n+1-max(i,j))."""
    _require(n, 2, "path")
    odd = [0] + [fib_odd(i) for i in range(1, n + 1)]
    counts = tuple(
        tuple(odd[min(i, j)] * odd[n + 1 - max(i, j)] for j in range(1, n + 1))
        for i in range(1, n + 1))
    return ForestCountMatrix(n, fib_even(n), counts)


def cycle_counts(n: int) -> ForestCountMatrix:
    """f = F'(n) + F'(n+1) - 2, f_ij = F''(|j-i|) + F''(n-|j-i|)."""
    _require(n, 3, "cycle")
    by_gap = [fib_even(d) + fib_even(n - d) for d in range(n)]
    counts = tuple(tuple(by_gap[abs(j - i)] for j in range(n)) for i in range(n))
    return ForestCountMatrix(n, fib_odd(n) + fib_odd(n + 1) - 2, counts)


def cycle_counts_lucas(n: int) -> ForestCountMatrix:
    """The cycle matrix through Lucas numbers, with t = |n - 2|j-i||.

    Odd n: f = L(n)^2, f_ij = F(t) L(n). Even n: f = 5 F(n)^2, f_ij = L(t) F(n).
    """
    _require(n, 3, "cycle")
    if n % 2:
        f = lucas(n) ** 2
        by_gap = [fib(abs(n - 2 * d)) * lucas(n) for d in range(n)]
    else:
        f = 5 * fib(n) ** 2
        by_gap = [lucas(abs(n - 2 * d)) * fib(n) for d in range(n)]
    counts = tuple(tuple(by_gap[abs(j - i)] for j in range(n)) for i in range(n))
    return ForestCountMatrix(n, f, counts)


def cycle_row_numerators(n: int) -> list[int]:
    """Numerators of a row of F(C_n) for |j-i| = 0..n-1.

    These are F(t) for odd n and L(t) for even n, over the common
    denominator L(n) or 5 F(n) respectively.
    """
    _require(n, 3, "cycle")
    seq = fib if n % 2 else lucas
    return [seq(abs(n - 2 * d)) for d in range(n)]


class TCaterpillarCounts(NamedTuple):
    f: int
    f33: int
    fnn: int


def tcaterpillar_counts(n: int) -> TCaterpillarCounts:
    """f = 4F'(n-1), f_33 = 4F'(n-2), f_nn = 4F''(n-2)."""
    _require(n, 3, "T-caterpillar")
    return TCaterpillarCounts(4 * fib_odd(n - 1), 4 * fib_odd(n - 2), 4 * fib_even(n - 2))


# --------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class VertexClassification:
    vertex: int
    ratio: Fraction
    kind: str

    def __str__(self):
        return f"{self.vertex} {self.kind} {self.ratio.numerator}/{self.ratio.denominator}"


def classify_ratio(ratio: Fraction) -> str:
    if ratio > HALF:
        return INTROVERT
    if ratio < HALF:
        return EXTROVERT
    return BOUNDARY


def classify_vertices(pm: ProximityMatrix) -> list[VertexClassification]:
    return [VertexClassification(v, r, classify_ratio(r))
            for v, r in enumerate(pm.diagonal(), start=1)]


# --------------------------------------------------------------------------
# golden-ratio limits

PATH_FIRST_VERTEX = "path-first-vertex"
TCAT_LAST_VERTEX = "tcat-last-vertex"
TCAT_VERTEX_3 = "tcat-vertex-3"
FAMILIES = (PATH_FIRST_VERTEX, TCAT_LAST_VERTEX, TCAT_VERTEX_3)


def golden_ratio_limit(family: str, prec: int = PRECISION) -> Decimal:
    """phi^-1 for the introvert families, 1 - phi^-1 for vertex 3 of T_n."""
    inv = inverse_golden_ratio(prec)
    if family in (PATH_FIRST_VERTEX, TCAT_LAST_VERTEX):
        return inv
    if family == TCAT_VERTEX_3:
        with localcontext() as ctx:
            ctx.prec = prec
            return 1 - inv
    raise ValidationError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def family_ratio(family: str, n: int) -> Fraction:
    """Exact self-connectivity ratio from the closed forms."""
    if family == PATH_FIRST_VERTEX:
        _require(n, 2, "path")
        return Fraction(fib_odd(n), fib_even(n))
    if family in (TCAT_LAST_VERTEX, TCAT_VERTEX_3):
        _require(n, 3, "T-caterpillar")
        t = tcaterpillar_counts(n)
        return Fraction(t.fnn if family == TCAT_LAST_VERTEX else t.f33, t.f)
    raise ValidationError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def ratio_gap(ratio: Fraction, limit: Decimal, prec: int = PRECISION) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = prec
        return abs(Decimal(ratio.numerator) / Decimal(ratio.denominator) - limit)


def golden_ratio_gap(family: str, n: int, prec: int = PRECISION) -> Decimal:
    """|ratio(n) - limit| at ``prec`` significant digits."""
    return ratio_gap(family_ratio(family, n), golden_ratio_limit(family, prec), prec)
