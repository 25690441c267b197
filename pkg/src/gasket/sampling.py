"""Seeded random address generators for property sweeps.

Sizes are kept small (preperiod up to 6, period up to 3 by default) so
period alignment and graph projections stay cheap in large sweeps.
"""

from __future__ import annotations

from random import Random

from .codes import Code


def random_code(rng: Random, max_preperiod: int = 6, max_period: int = 3) -> Code:
    """Uniform symbols, preperiod length 0..max_preperiod, period length 1..max_period."""
    pre = tuple(rng.randrange(3) for _ in range(rng.randint(0, max_preperiod)))
    per = tuple(rng.randrange(3) for _ in range(rng.randint(1, max_period)))
    return Code(pre, per)


def random_junction(rng: Random, max_prefix: int = 6) -> Code:
    """A canonical junction code: random prefix, then two distinct symbols b(a)."""
    sigma = tuple(rng.randrange(3) for _ in range(rng.randint(0, max_prefix)))
    alpha = rng.randrange(3)
    beta = rng.choice([s for s in range(3) if s != alpha])
    return Code(sigma + (beta,), (alpha,))
