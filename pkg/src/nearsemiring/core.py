"""Finite algebras with operation tables: construction, products, isomorphism search.

An algebra here is a finite universe {0..n-1} together with total tables for
a binary join ``plus``, a binary multiplication ``times``, a unary involution
``alpha`` and two designated constants ``zero`` and ``one``.  Only structural
well-formedness (shapes, index ranges) is enforced at construction; whether
the tables satisfy any axioms is the job of :mod:`nearsemiring.axioms`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

Table = tuple[tuple[int, ...], ...]

DEFAULT_MAX_SIZE = 4096


class AlgebraError(Exception):
    """Structurally malformed algebra data."""


class SizeLimitError(AlgebraError):
    """A construction would exceed the configured maximum universe size."""


def _as_table(rows: Sequence[Sequence[int]], n: int, what: str) -> Table:
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if len(rows) != n:
        raise AlgebraError(f"{what} must have {n} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise AlgebraError(f"{what} row {i} must have {n} entries, got {len(row)}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise AlgebraError(f"{what}[{i}][{j}] = {v} is outside the universe [0, {n})")
    return rows


def _as_vector(vals: Sequence[int], n: int, what: str) -> tuple[int, ...]:
    vals = tuple(int(v) for v in vals)
    if len(vals) != n:
        raise AlgebraError(f"{what} must have {n} entries, got {len(vals)}")
    for i, v in enumerate(vals):
        if not 0 <= v < n:
            raise AlgebraError(f"{what}[{i}] = {v} is outside the universe [0, {n})")
    return vals


@dataclass(frozen=True)
class FiniteAlgebra:
    """Immutable operation-table algebra over the universe {0..size-1}.

    ``zero`` and ``one`` are explicit designated indices; they are not
    required to sit at positions 0 and n-1 (file round trips preserve
    whatever a document declares).
    """

    size: int
    plus: Table
    times: Table
    alpha: tuple[int, ...]
    zero: int = 0
    one: int = 0
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n = self.size
        if n < 1:
            raise AlgebraError(f"size must be positive, got {n}")
        object.__setattr__(self, "plus", _as_table(self.plus, n, "plus"))
        object.__setattr__(self, "times", _as_table(self.times, n, "times"))
        object.__setattr__(self, "alpha", _as_vector(self.alpha, n, "alpha"))
        for which, v in (("zero", self.zero), ("one", self.one)):
            if not 0 <= v < n:
                raise AlgebraError(f"{which} = {v} is outside the universe [0, {n})")
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != n:
                raise AlgebraError(f"names must have {n} entries, got {len(names)}")
            object.__setattr__(self, "names", names)

    # -- display ------------------------------------------------------

    def label(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    @cached_property
    def name_to_index(self) -> dict[str, int]:
        if self.names is None:
            return {}
        return {s: i for i, s in enumerate(self.names)}

    def __repr__(self) -> str:  # compact; tables are noisy
        return f"<FiniteAlgebra n={self.size} zero={self.zero} one={self.one}>"

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.zero
        for x in xs:
            acc = self.plus[acc][x]
        return acc

    def same_tables(self, other: "FiniteAlgebra") -> bool:
        """Table-for-table equality, ignoring display names."""
        return (self.size == other.size and self.plus == other.plus
                and self.times == other.times and self.alpha == other.alpha
                and self.zero == other.zero and self.one == other.one)


def leq(alg: FiniteAlgebra, a: int, b: int) -> bool:
    """Induced order: a <= b iff a + b = b."""
    return alg.plus[a][b] == b


def product(a: FiniteAlgebra, b: FiniteAlgebra,
            max_size: int = DEFAULT_MAX_SIZE) -> FiniteAlgebra:
    """Direct product with componentwise tables.

    Pair (i, j) gets the row-major index i*|b| + j; this indexing is part of
    the interface and is relied on by decomposition checks.
    """
    n, m = a.size, b.size
    if n * m > max_size:
        raise SizeLimitError(f"product size {n * m} exceeds the {max_size} limit")

    def idx(i: int, j: int) -> int:
        return i * m + j

    size = n * m
    plus = [[0] * size for _ in range(size)]
    times = [[0] * size for _ in range(size)]
    alpha = [0] * size
    for i, j in itertools.product(range(n), range(m)):
        p = idx(i, j)
        alpha[p] = idx(a.alpha[i], b.alpha[j])
        for k, l in itertools.product(range(n), range(m)):
            q = idx(k, l)
            plus[p][q] = idx(a.plus[i][k], b.plus[j][l])
            times[p][q] = idx(a.times[i][k], b.times[j][l])
    names = None
    if a.names is not None or b.names is not None:
        names = tuple(f"({a.label(i)},{b.label(j)})"
                      for i in range(n) for j in range(m))
    return FiniteAlgebra(size=size, plus=plus, times=times, alpha=alpha,
                         zero=idx(a.zero, b.zero), one=idx(a.one, b.one),
                         names=names)


@dataclass(frozen=True)
class Homomorphism:
    """A total map between algebras, verified to preserve +, ., alpha, 0, 1.

    Construction raises :class:`AlgebraError` if the map does not preserve
    the operations, so holding a Homomorphism value is itself the proof.
    """

    source: FiniteAlgebra
    target: FiniteAlgebra
    mapping: tuple[int, ...]
    bijective: bool = field(init=False, default=False)

    def __post_init__(self) -> None:
        src, tgt = self.source, self.target
        m = _as_vector(self.mapping, src.size, "mapping")
        if len(m) != src.size or any(not 0 <= v < tgt.size for v in m):
            raise AlgebraError("mapping must send every source element into the target universe")
        object.__setattr__(self, "mapping", m)
        if m[src.zero] != tgt.zero:
            raise AlgebraError(f"map does not preserve zero: {src.zero} -> {m[src.zero]} != {tgt.zero}")
        if m[src.one] != tgt.one:
            raise AlgebraError(f"map does not preserve one: {src.one} -> {m[src.one]} != {tgt.one}")
        for a in range(src.size):
            if m[src.alpha[a]] != tgt.alpha[m[a]]:
                raise AlgebraError(f"map does not preserve alpha at {a}")
            for b in range(src.size):
                if m[src.plus[a][b]] != tgt.plus[m[a]][m[b]]:
                    raise AlgebraError(f"map does not preserve plus at ({a},{b})")
                if m[src.times[a][b]] != tgt.times[m[a]][m[b]]:
                    raise AlgebraError(f"map does not preserve times at ({a},{b})")
        bij = src.size == tgt.size and len(set(m)) == tgt.size
        object.__setattr__(self, "bijective", bij)

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size


def identity_map(alg: FiniteAlgebra) -> Homomorphism:
    return Homomorphism(alg, alg, tuple(range(alg.size)))


def projections(a: FiniteAlgebra, b: FiniteAlgebra,
                prod: Optional[FiniteAlgebra] = None) -> tuple[Homomorphism, Homomorphism]:
    """The two coordinate projections of product(a, b), verified."""
    if prod is None:
        prod = product(a, b)
    m = b.size
    p1 = Homomorphism(prod, a, tuple(p // m for p in range(prod.size)))
    p2 = Homomorphism(prod, b, tuple(p % m for p in range(prod.size)))
    return p1, p2


def _invariant_profile(alg: FiniteAlgebra) -> list[tuple[int, int, int]]:
    """Per-element invariants preserved by isomorphisms fixing 0 and 1.

    (alpha orbit size, occurrence count in the times table, occurrence
    count in the plus table) -- cheap pruning data for the backtracker.
    """
    n = alg.size
    t_occ = [0] * n
    p_occ = [0] * n
    for a in range(n):
        for b in range(n):
            t_occ[alg.times[a][b]] += 1
            p_occ[alg.plus[a][b]] += 1
    return [(1 if alg.alpha[x] == x else 2, t_occ[x], p_occ[x]) for x in range(n)]


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra) -> Optional[Homomorphism]:
    """Backtracking search for an isomorphism a -> b.

    Fixes zero -> zero and one -> one, prunes candidates by alpha-orbit size
    and operation in-degree profiles, and tries target elements in ascending
    order, so the first (hence returned) isomorphism is the lexicographically
    least one.  Returns None when the algebras are not isomorphic.
    """
    n = a.size
    if n != b.size:
        return None
    prof_a, prof_b = _invariant_profile(a), _invariant_profile(b)
    if sorted(prof_a) != sorted(prof_b):
        return None

    mapping: list[Optional[int]] = [None] * n
    used = [False] * n

    def assign(x: int, y: int) -> bool:
        if mapping[x] is not None:
            return mapping[x] == y
        if used[y] or prof_a[x] != prof_b[y]:
            return False
        mapping[x] = y
        used[y] = True
        return True

    def consistent(x: int) -> bool:
        # checks involving x and previously assigned elements only
        y = mapping[x]
        assert y is not None
        ax, ay = a.alpha[x], b.alpha[y]
        if mapping[ax] is not None and mapping[ax] != ay:
            return False
        for u in range(n):
            v = mapping[u]
            if v is None:
                continue
            for (ta, tb) in ((a.plus, b.plus), (a.times, b.times)):
                for (p, q, pp, qq) in ((x, u, y, v), (u, x, v, y)):
                    r = mapping[ta[p][q]]
                    if r is not None and r != tb[pp][qq]:
                        return False
        return True

    order = list(dict.fromkeys([a.zero, a.one] + list(range(n))))

    def full_check() -> bool:
        m = mapping
        for u in range(n):
            if m[a.alpha[u]] != b.alpha[m[u]]:
                return False
            for v in range(n):
                if m[a.plus[u][v]] != b.plus[m[u]][m[v]]:
                    return False
                if m[a.times[u][v]] != b.times[m[u]][m[v]]:
                    return False
        return True

    def backtrack(k: int) -> bool:
        if k == len(order):
            return full_check()
        x = order[k]
        if mapping[x] is not None:
            return consistent(x) and backtrack(k + 1)
        forced = b.zero if x == a.zero else b.one if x == a.one else None
        candidates = [forced] if forced is not None else [y for y in range(n) if not used[y]]
        for y in candidates:
            snapshot = (mapping.copy(), used.copy())
            if assign(x, y) and consistent(x) and backtrack(k + 1):
                return True
            mapping[:], used[:] = snapshot
        return False

    if not backtrack(0):
        return None
    return Homomorphism(a, b, tuple(int(v) for v in mapping))  # type: ignore[arg-type]
