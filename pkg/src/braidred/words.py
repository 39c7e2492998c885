"""Standard braid words over the Artin generators.

A word is an immutable sequence of signed generator letters tied to a strand
count; every operation returns a fresh value.  No free reduction is ever
performed: the division and reduction algorithms built on top of these words
work purely by rewriting, so a word keeps exactly the letters it was given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MIN_STRANDS = 3


class StrandCountError(ValueError):
    """Strand count below the supported minimum of 3."""


class StrandMismatchError(ValueError):
    """Two words over different strand counts were combined."""


class LetterRangeError(ValueError):
    """A letter does not fit its word's strand count."""


class ParseError(ValueError):
    """Malformed word text.  ``position`` is the 1-based offending token."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"token {position}: {message}")
        self.position = position


def check_strand_count(n: int) -> int:
    if n < MIN_STRANDS:
        raise StrandCountError(f"strand count must be at least {MIN_STRANDS}, got {n}")
    return n


class StandardLetter(NamedTuple):
    """One generator occurrence: index in [1, n-1] and sign +1 or -1."""

    index: int
    sign: int

    def inverse(self) -> StandardLetter:
        return StandardLetter(self.index, -self.sign)


@dataclass(frozen=True, slots=True, repr=False)
class StandardWord:
    """An immutable word over the standard generators of the n-strand group."""

    n: int
    letters: tuple[StandardLetter, ...]

    def __post_init__(self) -> None:
        check_strand_count(self.n)
        top = self.n - 1
        if not all(1 <= i <= top and (s == 1 or s == -1) for i, s in self.letters):
            for index, sign in self.letters:
                if not 1 <= index <= top:
                    raise LetterRangeError(
                        f"generator index {index} out of range 1..{top}"
                    )
                if sign not in (1, -1):
                    raise LetterRangeError(f"letter sign must be +1 or -1, got {sign}")

    @classmethod
    def identity(cls, n: int) -> StandardWord:
        return cls(n, ())

    @classmethod
    def from_ints(cls, n: int, values: Iterable[int]) -> StandardWord:
        """Build a word from signed generator indices, e.g. [1, -2, 1]."""
        letters = []
        for value in values:
            if value == 0:
                raise LetterRangeError("generator index 0 is not allowed")
            letters.append(StandardLetter(abs(value), 1 if value > 0 else -1))
        return cls(n, tuple(letters))

    @classmethod
    def parse(cls, text: str, n: int) -> StandardWord:
        """Parse whitespace-separated signed indices; k > 0 is a generator,
        k < 0 its inverse."""
        check_strand_count(n)
        letters = []
        for position, token in enumerate(text.split(), start=1):
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"expected a nonzero integer, got {token!r}", position) from None
            if value == 0:
                raise ParseError("generator index 0 is not allowed", position)
            if abs(value) > n - 1:
                raise ParseError(
                    f"generator index {abs(value)} out of range 1..{n - 1}", position
                )
            letters.append(StandardLetter(abs(value), 1 if value > 0 else -1))
        return cls(n, tuple(letters))

    def serialize(self) -> str:
        """Canonical token text: single-space-separated signed indices."""
        return " ".join(str(index * sign) for index, sign in self.letters)

    def to_ints(self) -> tuple[int, ...]:
        return tuple(index * sign for index, sign in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[StandardLetter]:
        return iter(self.letters)

    def __mul__(self, other: StandardWord) -> StandardWord:
        if not isinstance(other, StandardWord):
            return NotImplemented
        if other.n != self.n:
            raise StrandMismatchError(
                f"cannot concatenate words over {self.n} and {other.n} strands"
            )
        return StandardWord(self.n, self.letters + other.letters)

    def inverse(self) -> StandardWord:
        """Letterwise-inverted reversal; inverse(inverse(w)) == w."""
        return StandardWord(
            self.n, tuple(StandardLetter(i, -s) for i, s in reversed(self.letters))
        )

    def reverse(self) -> StandardWord:
        """Letters in reversed order, signs unchanged (an anti-automorphism
        fixing each generator; the defining relations are palindromes)."""
        return StandardWord(self.n, tuple(reversed(self.letters)))

    def exponent_sum(self) -> int:
        """Sum of letter signs; invariant under relations and conjugation."""
        return sum(sign for _, sign in self.letters)

    def is_positive(self) -> bool:
        return all(sign > 0 for _, sign in self.letters)

    def __repr__(self) -> str:
        if len(self.letters) <= 16:
            return f"StandardWord({self.n}, {self.serialize()!r})"
        return f"<StandardWord n={self.n} length={len(self.letters)}>"
