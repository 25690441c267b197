"""Coordinates for addressed points: exact barycentric, float Cartesian.

In barycentric form the three contractions are f_t(x) = (x + e_t) / 2, so
the point with address a_1 a_2 ... sits at sum(e_{a_j} / 2^j): component t
collects exactly the indices whose symbol is t.  Barycentric coordinates
are therefore exact rationals for eventually periodic addresses; floating
point enters only at the Cartesian rendering boundary, with the outer
triangle laid out equilaterally at (0,0), (1,0), (1/2, sqrt(3)/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .codes import Code, NotAJunction, canonicalize, is_junction, twin
from .metric import periodic_bit_sum

SQRT3_HALF = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class Barycentric:
    """Exact weights relative to the outer triangle's corners; they sum to 1."""

    b0: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self):
        if self.b0 + self.b1 + self.b2 != 1:
            raise ValueError("barycentric components must sum to 1")
        for comp in (self.b0, self.b1, self.b2):
            if not 0 <= comp <= 1:
                raise ValueError("barycentric components must lie in [0, 1]")

    def components(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.b0, self.b1, self.b2)


@dataclass(frozen=True)
class CartesianPoint:
    x: float
    y: float


#: Corner positions of the unit outer triangle.
P0 = CartesianPoint(0.0, 0.0)
P1 = CartesianPoint(1.0, 0.0)
P2 = CartesianPoint(0.5, SQRT3_HALF)


def to_barycentric(c: Code) -> Barycentric:
    """Exact barycentric coordinates of the addressed point.

    Component t is sum(1/2^j over positions j whose symbol equals t),
    evaluated in closed form.
    """
    comps = []
    for t in range(3):
        pre = [1 if s == t else 0 for s in c.preperiod]
        per = [1 if s == t else 0 for s in c.period]
        comps.append(periodic_bit_sum(pre, per, 1))
    return Barycentric(*comps)


def to_cartesian(p: Barycentric) -> CartesianPoint:
    """Affine combination b0*P0 + b1*P1 + b2*P2, in floating point."""
    x = float(p.b1) + 0.5 * float(p.b2)
    y = float(p.b2) * SQRT3_HALF
    return CartesianPoint(x, y)


def apply_contraction(symbol: int, p: Barycentric) -> Barycentric:
    """Image of p under the contraction toward corner `symbol`: (p + e_t) / 2."""
    comps = [comp / 2 for comp in p.components()]
    comps[symbol] += Fraction(1, 2)
    return Barycentric(*comps)


def twin_coordinates_agree(c: Code) -> bool:
    """Whether both addresses of a junction point map to identical coordinates."""
    if not is_junction(c):
        raise NotAJunction(str(c))
    return to_barycentric(canonicalize(c)) == to_barycentric(twin(c))
