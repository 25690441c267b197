"""Exact intrinsic (shortest-path) distance between two addressed points.

Let k be the first index where the two addresses differ.  Inside the
level-(k-1) triangle both points share, every shortest path either passes
through the junction of the two child triangles containing them (route
``P``) or crosses the side of the third child triangle, which contributes
a straight segment of length 1/2^k (route ``EDGE``).  Each candidate
length is a series sum(bit_i / 2^i) whose bits are eventually periodic,
so both evaluate in closed form to exact rationals; the distance is their
minimum, and an exact tie (route ``TIE``) signals that both shortest-path
shapes are realized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .codes import Code

ROUTE_P = "P"
ROUTE_EDGE = "EDGE"
ROUTE_TIE = "TIE"

_ZERO = Fraction(0)


class IdenticalCodes(ValueError):
    """Both addresses expand to the same infinite word, so no split index exists."""


@dataclass(frozen=True)
class DistanceResult:
    """Distance together with the quantities the minimum was taken over.

    ``sum_p`` is the length through the shared junction, ``sum_edge`` the
    length across the third child's side (including the 1/2^k segment);
    ``distance`` is their minimum and ``route`` tags which one won (``TIE``
    iff they are exactly equal).
    """

    distance: Fraction
    split_index: int
    sum_p: Fraction
    sum_edge: Fraction
    route: str


def split_index(a: Code, b: Code) -> int:
    """Smallest 1-based index where the two expansions differ.

    Scanning max(preperiods) + lcm(periods) symbols is enough: identical
    windows of that length force identical expansions, in which case
    `IdenticalCodes` is raised.  Twin representations of one junction
    point differ as words and are therefore allowed.
    """
    limit = max(len(a.preperiod), len(b.preperiod)) + lcm(len(a.period), len(b.period))
    for i in range(1, limit + 1):
        if a.symbol_at(i) != b.symbol_at(i):
            return i
    raise IdenticalCodes(f"{a} and {b} expand to the same word")


def indicator_bits(a: Code, b: Code, k: int, i: int) -> tuple[int, int, int, int]:
    """The four 0/1 coefficients (alpha_i, beta_i, gamma_i, delta_i) at index i > k.

    alpha_i = 0 iff a_i = b_k        (a's leg toward the shared junction)
    beta_i  = 0 iff b_i = a_k        (b's leg toward the shared junction)
    gamma_i = 0 iff a_i differs from both a_k and b_k   (a's leg toward the far side)
    delta_i = 0 iff b_i differs from both b_k and a_k   (b's leg toward the far side)
    """
    ak = a.symbol_at(k)
    bk = b.symbol_at(k)
    ai = a.symbol_at(i)
    bi = b.symbol_at(i)
    alpha = 0 if ai == bk else 1
    beta = 0 if bi == ak else 1
    gamma = 0 if (ai != ak and ai != bk) else 1
    delta = 0 if (bi != bk and bi != ak) else 1
    return alpha, beta, gamma, delta


def periodic_bit_sum(preperiod_bits: Sequence[int], period_bits: Sequence[int], start: int) -> Fraction:
    """Exact value of sum(bits_i / 2^i for i >= start) for eventually periodic bits.

    The sequence is ``preperiod_bits`` at indices start, start+1, ... followed
    by ``period_bits`` repeating forever.  The periodic tail is a geometric
    series, so the denominator always divides 2^m * (2^p - 1).
    """
    if not period_bits:
        raise ValueError("period_bits must be nonempty")
    if start < 1:
        raise ValueError("start index must be >= 1")
    for bit in (*preperiod_bits, *period_bits):
        if bit not in (0, 1):
            raise ValueError(f"bit {bit!r} outside {{0, 1}}")
    total = _ZERO
    for j, bit in enumerate(preperiod_bits):
        if bit:
            total += Fraction(1, 1 << (start + j))
    word = 0
    for bit in period_bits:
        word = (word << 1) | bit
    p = len(period_bits)
    tail_start = start + len(preperiod_bits)
    total += Fraction(word, ((1 << p) - 1) << (tail_start - 1))
    return total


def distance(a: Code, b: Code) -> DistanceResult:
    """Exact intrinsic distance between the points addressed by a and b.

    Both candidate sums are evaluated in closed form over one aligned
    period block (lcm of the two code periods, offset past both preperiods
    and past k), never by truncation.  Twin representations of one point
    go through the same formula and yield 0.  For literally identical
    expansions the formula has no split index; by convention the result is
    distance 0 with route ``P``, sum_p 0, split index 1 and sum_edge 1/2
    (both series treated as empty).
    """
    try:
        k = split_index(a, b)
    except IdenticalCodes:
        return DistanceResult(_ZERO, 1, _ZERO, Fraction(1, 2), ROUTE_P)
    start = k + 1
    block_start = max(len(a.preperiod), len(b.preperiod), k) + 1
    block = lcm(len(a.period), len(b.period))
    head = [indicator_bits(a, b, k, i) for i in range(start, block_start)]
    cycle = [indicator_bits(a, b, k, i) for i in range(block_start, block_start + block)]
    sums = [
        periodic_bit_sum([bits[t] for bits in head], [bits[t] for bits in cycle], start)
        for t in range(4)
    ]
    sum_p = sums[0] + sums[1]
    sum_edge = Fraction(1, 1 << k) + sums[2] + sums[3]
    if sum_p < sum_edge:
        route = ROUTE_P
    elif sum_edge < sum_p:
        route = ROUTE_EDGE
    else:
        route = ROUTE_TIE
    return DistanceResult(min(sum_p, sum_edge), k, sum_p, sum_edge, route)
