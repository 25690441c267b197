"""Symbolic addresses for points of the Sierpinski gasket.

A point is named by an infinite word over {0, 1, 2}: the j-th symbol picks
the child triangle entered at level j (0 = left-bottom, 1 = right-bottom,
2 = top), and the point is the intersection of the nested triangles the
prefixes select.  This module handles the eventually periodic addresses,
written ``prefix(period)`` -- e.g. ``000(2)`` or ``(012)`` -- for which
every derived quantity is an exact rational.

Points where two subtriangles touch ("junction points") are the only ones
with two distinct addresses; the pair always has the shape

    prefix b a a a a ...   and   prefix a b b b b ...

with a != b.  `twin` converts between the two and `same_point` compares
addresses up to this ambiguity.  All values are immutable and all
operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass

ALPHABET = (0, 1, 2)


class MalformedCode(ValueError):
    """Input text does not match the ``prefix(period)`` grammar."""

    def __init__(self, reason: str, offset: int):
        super().__init__(f"{reason} at offset {offset}")
        self.reason = reason
        self.offset = offset


class NotAJunction(ValueError):
    """The point has a unique address, so there is no second representation."""


@dataclass(frozen=True)
class Code:
    """An eventually periodic address: finite preperiod, repeating period.

    The represented infinite word is ``preperiod + period + period + ...``.
    Structural equality; use `same_point` for point equality (which also
    identifies the two addresses of a junction point).
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        for s in self.preperiod + self.period:
            if s not in ALPHABET:
                raise ValueError(f"symbol {s!r} outside alphabet {{0, 1, 2}}")

    def symbol_at(self, i: int) -> int:
        """The i-th symbol (1-based) of the infinite expansion."""
        if i < 1:
            raise ValueError("symbol index is 1-based")
        m = len(self.preperiod)
        if i <= m:
            return self.preperiod[i - 1]
        return self.period[(i - m - 1) % len(self.period)]

    def __str__(self) -> str:
        c = canonicalize(self)
        head = "".join(str(s) for s in c.preperiod)
        body = "".join(str(s) for s in c.period)
        return f"{head}({body})"


def parse_code(text: str) -> Code:
    """Parse ``prefix(period)`` with prefix in {0,1,2}* and period in {0,1,2}+.

    The result keeps exactly the written preperiod/period; call
    `canonicalize` for the normal form.  Raises `MalformedCode` with the
    byte offset of the first violation.
    """
    i = 0
    pre = []
    while i < len(text) and text[i] in "012":
        pre.append(int(text[i]))
        i += 1
    if i >= len(text) or text[i] != "(":
        raise MalformedCode("expected '(' opening the period", i)
    i += 1
    per = []
    while i < len(text) and text[i] in "012":
        per.append(int(text[i]))
        i += 1
    if not per:
        raise MalformedCode("period must contain at least one symbol of {0,1,2}", i)
    if i >= len(text) or text[i] != ")":
        raise MalformedCode("expected ')' closing the period", i)
    i += 1
    if i != len(text):
        raise MalformedCode("trailing characters after ')'", i)
    return Code(tuple(pre), tuple(per))


def canonicalize(c: Code) -> Code:
    """Unique normal form: primitive period, minimal preperiod.

    First the period is reduced to its primitive root (shortest word whose
    repetition gives the period), then trailing preperiod symbols equal to
    the last period symbol are absorbed by rotating the period.  Two codes
    denote the same infinite word iff their canonical forms are equal.
    """
    per = list(c.period)
    p = len(per)
    for d in range(1, p + 1):
        if p % d == 0 and per == per[:d] * (p // d):
            per = per[:d]
            break
    pre = list(c.preperiod)
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = [per[-1]] + per[:-1]
    return Code(tuple(pre), tuple(per))


def shift(c: Code, n: int) -> Code:
    """The address with the first n symbols dropped (same tail of the word)."""
    if n < 0:
        raise ValueError("shift count must be nonnegative")
    m = len(c.preperiod)
    if n <= m:
        return Code(c.preperiod[n:], c.period)
    r = (n - m) % len(c.period)
    return Code((), c.period[r:] + c.period[:r])


def prepend(symbol: int, c: Code) -> Code:
    """The address of the image of the point under the contraction `symbol`."""
    if symbol not in ALPHABET:
        raise ValueError(f"symbol {symbol!r} outside alphabet {{0, 1, 2}}")
    return Code((symbol,) + c.preperiod, c.period)


def is_junction(c: Code) -> bool:
    """True iff the point has two representations.

    Canonically these are the codes whose period is a single symbol with a
    nonempty preperiod; the pure single-symbol codes ``(0)``, ``(1)``,
    ``(2)`` are the three outer corners and have a unique address.
    """
    cc = canonicalize(c)
    return len(cc.period) == 1 and len(cc.preperiod) >= 1


def twin(c: Code) -> Code:
    """The other canonical representation of a junction point.

    Maps ``prefix b(a)`` to ``prefix a(b)``; an involution up to
    canonicalization.  Raises `NotAJunction` for single-address points.
    """
    cc = canonicalize(c)
    if not (len(cc.period) == 1 and len(cc.preperiod) >= 1):
        raise NotAJunction(str(c))
    alpha = cc.period[0]
    beta = cc.preperiod[-1]
    return Code(cc.preperiod[:-1] + (alpha,), (beta,))


def same_point(a: Code, b: Code) -> bool:
    """Whether two addresses denote the same point of the gasket."""
    ca = canonicalize(a)
    cb = canonicalize(b)
    if ca == cb:
        return True
    if len(ca.period) == 1 and len(ca.preperiod) >= 1:
        return twin(ca) == cb
    return False
