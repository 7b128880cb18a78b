"""Term syntax over the signature (+, ., alpha, 0, 1) and table evaluation.

Terms are built with operators: ``x + y``, ``x * y`` and ``x.a`` (involution),
e.g. the join-recovery term is ``((x * y.a).a * y.a).a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import FiniteAlgebra


class UnboundVariableError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"variable '{self.name}' is not bound in the environment"


class Term:
    __slots__ = ()

    def __add__(self, other: "Term") -> "Term":
        return Plus(self, other)

    def __mul__(self, other: "Term") -> "Term":
        return Times(self, other)

    @property
    def a(self) -> "Term":
        return Alpha(self)

    def variables(self) -> tuple[str, ...]:
        """Free variables in first-occurrence order."""
        out: list[str] = []

        def walk(t: Term) -> None:
            if isinstance(t, Var):
                if t.name not in out:
                    out.append(t.name)
            elif isinstance(t, Alpha):
                walk(t.arg)
            elif isinstance(t, (Plus, Times)):
                walk(t.left)
                walk(t.right)

        walk(self)
        return tuple(out)


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const(Term):
    which: str  # "0" or "1", resolved against the algebra's designated indices

    def __str__(self) -> str:
        return self.which


@dataclass(frozen=True)
class Plus(Term):
    left: Term
    right: Term

    def __str__(self) -> str:
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Times(Term):
    left: Term
    right: Term

    def __str__(self) -> str:
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Alpha(Term):
    arg: Term

    def __str__(self) -> str:
        return f"{self.arg}^a"


ZERO = Const("0")
ONE = Const("1")


def eval_term(alg: FiniteAlgebra, t: Term, env: Mapping[str, int]) -> int:
    """Structural recursion over the operation tables."""
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariableError(t.name) from None
    if isinstance(t, Const):
        return alg.zero if t.which == "0" else alg.one
    if isinstance(t, Plus):
        return alg.plus[eval_term(alg, t.left, env)][eval_term(alg, t.right, env)]
    if isinstance(t, Times):
        return alg.times[eval_term(alg, t.left, env)][eval_term(alg, t.right, env)]
    if isinstance(t, Alpha):
        return alg.alpha[eval_term(alg, t.arg, env)]
    raise TypeError(f"not a term: {t!r}")


# Named terms used throughout the structure theory.

x, y, z = Var("x"), Var("y"), Var("z")

#: both sides of the interchange law that separates Lukasiewicz from plain
#: involutive near semirings
LUK_LHS = (x * y.a).a * y.a
LUK_RHS = (y * x.a).a * x.a

#: join recovered from the multiplication: x + y = ((x * y^a)^a * y^a)^a
JOIN_FROM_TIMES = ((x * y.a).a * y.a).a

#: ternary if-then-else witness q(x, y, z) = x*y + x^a*z
CHURCH_Q = x * y + x.a * z

#: permutability witness p(x,y,z) = (((x*y^a)^a*z^a) + ((z*y^a)^a*x^a))^a
MALCEV_P = ((x * y.a).a * z.a + (z * y.a).a * x.a).a

#: subtraction-style difference witness s(x, y) = x^a * y
DIFFERENCE_S = x.a * y
