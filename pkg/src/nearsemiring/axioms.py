"""Axiom and identity checking by exhaustive evaluation.

Everything here is deliberately brute force (O(n^k) scans over all variable
assignments) -- these checkers are the oracles the rest of the workbench
leans on, so they take no algebraic shortcuts.

Witness search scans assignments with the first variable varying fastest;
the first failing assignment is the reported witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import FiniteAlgebra, leq
from .terms import (JOIN_FROM_TIMES, LUK_LHS, LUK_RHS, Term, eval_term, x, y, z)

INRS = "inrs"
LUK_NRS = "luk-nrs"
LUK_RS = "luk-rs"
CLASSES = (INRS, LUK_NRS, LUK_RS)


@dataclass(frozen=True)
class Witness:
    """A falsifying assignment together with the two evaluated sides."""

    env: tuple[tuple[str, int], ...]
    lhs: int
    rhs: int

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.env)

    def render(self, alg: FiniteAlgebra) -> str:
        binds = ", ".join(f"{k}={alg.label(v)}" for k, v in self.env)
        return f"{binds}: lhs={alg.label(self.lhs)} rhs={alg.label(self.rhs)}"


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    ok: bool
    witness: Optional[Witness] = None
    detail: str = ""


def assignments(variables: Sequence[str], n: int):
    """All environments, first variable fastest."""
    k = len(variables)
    rev = tuple(reversed(variables))
    for combo in itertools.product(range(n), repeat=k):
        yield dict(zip(rev, combo))


def check_identity(alg: FiniteAlgebra, name: str, lhs: Term, rhs: Term,
                   detail: str = "") -> CheckOutcome:
    variables = tuple(dict.fromkeys(lhs.variables() + rhs.variables()))
    for env in assignments(variables, alg.size):
        l = eval_term(alg, lhs, env)
        r = eval_term(alg, rhs, env)
        if l != r:
            w = Witness(tuple((v, env[v]) for v in variables), l, r)
            return CheckOutcome(name, False, w, detail)
    return CheckOutcome(name, True, detail=detail)


def first_failure(alg: FiniteAlgebra, name: str,
                  laws: Sequence[tuple[str, Term, Term]]) -> CheckOutcome:
    """One verdict for a bundle of identities; the detail names the sublaw."""
    for law_name, lhs, rhs in laws:
        out = check_identity(alg, name, lhs, rhs, detail=law_name)
        if not out.ok:
            return out
    return CheckOutcome(name, True)


def _semilattice(alg: FiniteAlgebra) -> CheckOutcome:
    from .terms import ONE, ZERO
    laws = [
        ("x+x = x", x + x, x),
        ("x+y = y+x", x + y, y + x),
        ("(x+y)+z = x+(y+z)", (x + y) + z, x + (y + z)),
        ("0+x = x", ZERO + x, x),
        ("x+1 = 1", x + ONE, ONE),
    ]
    return first_failure(alg, "(i)", laws)


def _antitone(alg: FiniteAlgebra) -> CheckOutcome:
    n = alg.size
    for env in assignments(("x", "y"), n):
        a, b = env["x"], env["y"]
        if leq(alg, a, b) and not leq(alg, alg.alpha[b], alg.alpha[a]):
            w = Witness((("x", a), ("y", b)),
                        alg.plus[alg.alpha[b]][alg.alpha[a]], alg.alpha[a])
            return CheckOutcome("(vi)", False, w, "x<=y but not y^a<=x^a")
    return CheckOutcome("(vi)", True)


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts for a requested class, plus always-run derived checks."""

    algebra_class: str
    axioms: tuple[CheckOutcome, ...]
    derived: tuple[CheckOutcome, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.axioms)

    def failures(self) -> tuple[CheckOutcome, ...]:
        return tuple(c for c in self.axioms if not c.ok)

    def outcome(self, name: str) -> CheckOutcome:
        for c in self.axioms + self.derived:
            if c.name == name:
                return c
        raise KeyError(name)


def check_axioms(alg: FiniteAlgebra, algebra_class: str = LUK_NRS) -> AxiomReport:
    """Verdict per axiom of the requested class.

    inrs checks (i)-(vi); luk-nrs adds the interchange axiom (vii); luk-rs
    further requires multiplication to be a monoid operation and then also
    records commutativity and right distributivity (they are theorems for
    Lukasiewicz semirings, but are re-verified rather than trusted).
    Derived identities -- (viii) and the two recovered laws -- always run and
    are reported separately; they never affect admission for the class.
    """
    if algebra_class not in CLASSES:
        raise ValueError(f"unknown class {algebra_class!r}; expected one of {CLASSES}")
    from .terms import ONE, ZERO

    checks: list[CheckOutcome] = [
        _semilattice(alg),
        first_failure(alg, "(ii)", [("x*1 = x", x * ONE, x), ("1*x = x", ONE * x, x)]),
        check_identity(alg, "(iii)", (x + y) * z, x * z + y * z),
        first_failure(alg, "(iv)", [("x*0 = 0", x * ZERO, ZERO), ("0*x = 0", ZERO * x, ZERO)]),
        check_identity(alg, "(v)", x.a.a, x),
        _antitone(alg),
    ]
    if algebra_class in (LUK_NRS, LUK_RS):
        checks.append(check_identity(alg, "(vii)", LUK_LHS, LUK_RHS))
    if algebra_class == LUK_RS:
        checks.append(check_identity(alg, "(assoc)", (x * y) * z, x * (y * z)))
        checks.append(check_identity(alg, "(comm)", x * y, y * x))
        checks.append(check_identity(alg, "(rdist)", z * (x + y), z * x + z * y))

    derived = (
        check_identity(alg, "(viii)", (x + y).a + x.a, x.a),
        first_failure(alg, "x*x^a = x^a*x = 0",
                      [("x*x^a = 0", x * x.a, ZERO), ("x^a*x = 0", x.a * x, ZERO)]),
        check_identity(alg, "x+y = ((x*y^a)^a*y^a)^a", x + y, JOIN_FROM_TIMES),
    )
    return AxiomReport(algebra_class, tuple(checks), derived)


def classify(alg: FiniteAlgebra) -> Optional[str]:
    """Best class the algebra passes, or None if not even an inrs."""
    if not check_axioms(alg, INRS).ok:
        return None
    if not check_axioms(alg, LUK_NRS).ok:
        return INRS
    if check_axioms(alg, LUK_RS).ok:
        return LUK_RS
    return LUK_NRS


def require_class(alg: FiniteAlgebra, algebra_class: str, context: str = "") -> None:
    """Raise with the first failed axiom when the algebra misses its class."""
    report = check_axioms(alg, algebra_class)
    if not report.ok:
        bad = report.failures()[0]
        where = f" ({context})" if context else ""
        witness = f" witness {bad.witness.render(alg)}" if bad.witness else ""
        raise ValueError(
            f"algebra fails {algebra_class} axiom {bad.name}{where}:"
            f" {bad.detail or 'identity violated'}{witness}")
