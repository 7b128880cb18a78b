"""Bundled reference algebras.

Chains are generated from the closed-form [0,1]-valued operations
(join = max, Lukasiewicz product = max(0, x+y-1) scaled to {0..k-1},
involution = reversal), so the stored tables double as an independent
cross-check for everything computed from them.
"""

from __future__ import annotations

from functools import lru_cache

from .core import FiniteAlgebra, product


def _chain_names(k: int) -> tuple[str, ...]:
    if k == 1:
        return ("0",)
    if k == 2:
        return ("0", "1")
    if k == 3:
        return ("0", "h", "1")
    if k == 4:
        return ("0", "a", "b", "1")
    return ("0",) + tuple(f"c{i}" for i in range(1, k - 1)) + ("1",)


@lru_cache(maxsize=None)
def luk_chain(k: int) -> FiniteAlgebra:
    """The k-element Lukasiewicz chain: join with truncated addition's dual."""
    m = k - 1
    plus = [[max(i, j) for j in range(k)] for i in range(k)]
    times = [[max(0, i + j - m) for j in range(k)] for i in range(k)]
    alpha = [m - i for i in range(k)]
    return FiniteAlgebra(size=k, plus=plus, times=times, alpha=alpha,
                         zero=0, one=m, names=_chain_names(k))


@lru_cache(maxsize=None)
def boolean2() -> FiniteAlgebra:
    """The 2-element Boolean algebra (identical to the 2-chain)."""
    return luk_chain(2)


@lru_cache(maxsize=None)
def godel3() -> FiniteAlgebra:
    """3-chain with idempotent middle (times = min): fails the interchange axiom."""
    plus = [[max(i, j) for j in range(3)] for i in range(3)]
    times = [[min(i, j) for j in range(3)] for i in range(3)]
    alpha = [2, 1, 0]
    return FiniteAlgebra(size=3, plus=plus, times=times, alpha=alpha,
                         zero=0, one=2, names=("0", "h", "1"))


@lru_cache(maxsize=None)
def trivial() -> FiniteAlgebra:
    return FiniteAlgebra(size=1, plus=((0,),), times=((0,),), alpha=(0,),
                         zero=0, one=0, names=("0",))


@lru_cache(maxsize=None)
def b2_x_l3() -> FiniteAlgebra:
    return product(boolean2(), luk_chain(3))


@lru_cache(maxsize=None)
def l3_x_b2() -> FiniteAlgebra:
    return product(luk_chain(3), boolean2())


@lru_cache(maxsize=None)
def b2_x_b2() -> FiniteAlgebra:
    return product(boolean2(), boolean2())


def luk_corpus() -> tuple[FiniteAlgebra, ...]:
    """The bundled Lukasiewicz algebras (all sizes <= 6)."""
    return (boolean2(), luk_chain(3), luk_chain(4), b2_x_b2(), b2_x_l3())


def full_corpus() -> tuple[FiniteAlgebra, ...]:
    """luk_corpus plus the non-Lukasiewicz inrs example and the trivial algebra."""
    return luk_corpus() + (godel3(), trivial())
