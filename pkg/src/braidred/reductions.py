"""Reductions of group problems to positive-word problems on the monoid.

Word problem: X = Y in the group iff P = Q in the monoid, where (P, Q) is
the division of X * Y^-1.  Conjugacy: U and V are conjugate iff some
positive word M satisfies A * M * B = C * M * D in the monoid, where the
quadruple comes from dividing U as C^-1 * A and V as D * B^-1; the
restriction to positive conjugators is harmless because any braid equals an
even half-twist power times a positive braid and even half-twist powers are
central.  The bounded search below is a desk-scale verifier of that
contract, not a conjugacy solver: a miss means "none up to the bound",
never "not conjugate".
"""

from __future__ import annotations

from dataclasses import dataclass

from .bridge import fsd, fsd_symmetric
from .extended import DivisionPair
from .garside import PositivityError, enumerate_positive, equal_group, equal_monoid
from .words import StandardWord, StrandMismatchError

__all__ = [
    "MonoidEquationInstance",
    "ConjugacyInstance",
    "reduce_word_problem",
    "reduce_conjugacy",
    "conjugacy_search_instance",
    "search_conjugator",
]


def _require_same_strands(x: StandardWord, y: StandardWord) -> None:
    if x.n != y.n:
        raise StrandMismatchError(
            f"inputs are over different strand counts: {x.n} and {y.n}"
        )


def reduce_word_problem(x: StandardWord, y: StandardWord) -> DivisionPair:
    """Positive words (P, Q) such that X = Y in the group iff P = Q in the
    monoid; costs one division of X * Y^-1."""
    _require_same_strands(x, y)
    return fsd(x * y.inverse())


@dataclass(frozen=True, slots=True)
class MonoidEquationInstance:
    """Four positive words (A, B, C, D) posing the monoid question: is
    there a positive M with A * M * B = C * M * D?"""

    a: StandardWord
    b: StandardWord
    c: StandardWord
    d: StandardWord

    def __post_init__(self) -> None:
        for word in (self.b, self.c, self.d):
            if word.n != self.a.n:
                raise StrandMismatchError("equation words must share one strand count")
        if not all(w.is_positive() for w in (self.a, self.b, self.c, self.d)):
            raise PositivityError("equation words must be positive")

    @property
    def n(self) -> int:
        return self.a.n

    def sides(self, m: StandardWord) -> tuple[StandardWord, StandardWord]:
        """The two positive words A*M*B and C*M*D for a candidate M."""
        return self.a * m * self.b, self.c * m * self.d


def reduce_conjugacy(u: StandardWord, v: StandardWord) -> MonoidEquationInstance:
    """Build the monoid equation instance for the conjugacy question.

    U is divided as C^-1 * A and V as D * B^-1, so that U = M * V * M^-1
    for a positive M iff A * M * B = C * M * D in the monoid.
    """
    _require_same_strands(u, v)
    left = fsd_symmetric(u)
    right = fsd(v)
    return MonoidEquationInstance(a=left.p, b=right.q, c=left.q, d=right.p)


@dataclass(frozen=True, slots=True)
class ConjugacyInstance:
    """A monoid equation instance that remembers the original pair, so a
    candidate conjugator can be verified against both contracts."""

    equation: MonoidEquationInstance
    u: StandardWord
    v: StandardWord

    def verify(self, m: StandardWord) -> bool:
        """True when M solves the monoid equation and conjugates V to U."""
        lhs, rhs = self.equation.sides(m)
        return equal_monoid(lhs, rhs) and equal_group(
            self.u, m * self.v * m.inverse()
        )


def conjugacy_search_instance(u: StandardWord, v: StandardWord) -> ConjugacyInstance:
    """Search form of the conjugacy reduction: any M solving the monoid
    equation is itself the conjugator of V to U."""
    return ConjugacyInstance(reduce_conjugacy(u, v), u, v)


def search_conjugator(
    instance: MonoidEquationInstance | ConjugacyInstance, max_length: int
) -> StandardWord | None:
    """Bounded brute-force search for a positive solution M, shortest first
    and lexicographic by index sequence within each length.

    Returns None when no solution exists up to the bound; that outcome
    never certifies non-conjugacy.  Positive relations preserve word
    length, so when the constant sides differ in total length no candidate
    of any length can work and the search exits immediately.
    """
    equation = instance.equation if isinstance(instance, ConjugacyInstance) else instance
    if len(equation.a) + len(equation.b) != len(equation.c) + len(equation.d):
        return None
    for length in range(max_length + 1):
        for m in enumerate_positive(equation.n, length):
            lhs, rhs = equation.sides(m)
            if equal_monoid(lhs, rhs):
                return m
    return None
