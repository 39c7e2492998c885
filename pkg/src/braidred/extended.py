"""Extended braid letters and the streaming division into quotient form.

An extended letter ``(sub, i, +1)`` denotes one of four positive braids on n
strands, selected by the subscript ``sub`` modulo 4 (sigma_i is the i-th
Artin generator and D is the positive half twist):

    sub = 0:  sigma_i
    sub = 1:  D * sigma_i^-1
    sub = 2:  sigma_{n-i}
    sub = 3:  D * sigma_{n-i}^-1

Sign -1 denotes the inverse braid.  Multiplying a positive letter by D^-1 on
the right, or a negative letter by D on the left, advances the subscript by
one and flips the sign; this is the ``sh`` action below, and it lets a
positive letter trade places with a negative letter without moving either
position: the sign pattern migrates while every letter keeps its strand
index.

The division algorithm exploits this.  A single left-to-right pass
(`separation`) computes a bookkeeping triple (a `Trip`) whose letterwise
application (`bishift`) turns any word into a block of positive letters
followed by a block of negative letters, using only arithmetic modulo 4 and
a constant number of operations per letter.  Reading the negative block
backwards with signs flipped yields the positive pair (P, Q) with
W = P * Q^-1 in the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .words import (
    LetterRangeError,
    ParseError,
    StrandMismatchError,
    check_strand_count,
)

RULE_CORRECTED = "corrected"
RULE_LITERAL = "literal"

# Rule-three constants for `separation`: the leading-entry offset and the
# trailing-entry base.  The corrected pair matches the commutation identity
# read right to left (net shift 3 on both letters involved); the literal
# pair is an alternative retained for comparison only -- its output is not
# equivalence-preserving (see the erratum tests).
_RULE_CONSTANTS = {RULE_CORRECTED: (3, 1), RULE_LITERAL: (1, 3)}


class ExtendedLetter(NamedTuple):
    """One extended generator occurrence: subscript in Z/4Z, index, sign."""

    sub: int
    index: int
    sign: int

    def inverse(self) -> ExtendedLetter:
        return ExtendedLetter(self.sub, self.index, -self.sign)


@dataclass(frozen=True, slots=True, repr=False)
class ExtendedWord:
    """An immutable word over the extended generators of the n-strand group."""

    n: int
    letters: tuple[ExtendedLetter, ...]

    def __post_init__(self) -> None:
        check_strand_count(self.n)
        top = self.n - 1
        if not all(
            0 <= a <= 3 and 1 <= i <= top and (s == 1 or s == -1)
            for a, i, s in self.letters
        ):
            for sub, index, sign in self.letters:
                if not 0 <= sub <= 3:
                    raise LetterRangeError(f"subscript {sub} out of range 0..3")
                if not 1 <= index <= top:
                    raise LetterRangeError(
                        f"generator index {index} out of range 1..{top}"
                    )
                if sign not in (1, -1):
                    raise LetterRangeError(f"letter sign must be +1 or -1, got {sign}")

    @classmethod
    def identity(cls, n: int) -> ExtendedWord:
        return cls(n, ())

    @classmethod
    def parse(cls, text: str, n: int) -> ExtendedWord:
        """Parse ``a:i`` tokens; a leading ``-`` marks an inverse letter."""
        check_strand_count(n)
        letters = []
        for position, token in enumerate(text.split(), start=1):
            sign = 1
            body = token
            if body.startswith("-"):
                sign = -1
                body = body[1:]
            sub_text, sep, index_text = body.partition(":")
            if not sep:
                raise ParseError(f"expected 'a:i' or '-a:i', got {token!r}", position)
            try:
                sub = int(sub_text)
                index = int(index_text)
            except ValueError:
                raise ParseError(f"expected 'a:i' or '-a:i', got {token!r}", position) from None
            if not 0 <= sub <= 3:
                raise ParseError(f"subscript {sub} out of range 0..3", position)
            if not 1 <= index <= n - 1:
                raise ParseError(
                    f"generator index {index} out of range 1..{n - 1}", position
                )
            letters.append(ExtendedLetter(sub, index, sign))
        return cls(n, tuple(letters))

    def serialize(self) -> str:
        return " ".join(
            f"{sub}:{index}" if sign > 0 else f"-{sub}:{index}"
            for sub, index, sign in self.letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[ExtendedLetter]:
        return iter(self.letters)

    def __mul__(self, other: ExtendedWord) -> ExtendedWord:
        if not isinstance(other, ExtendedWord):
            return NotImplemented
        if other.n != self.n:
            raise StrandMismatchError(
                f"cannot concatenate words over {self.n} and {other.n} strands"
            )
        return ExtendedWord(self.n, self.letters + other.letters)

    def inverse(self) -> ExtendedWord:
        return ExtendedWord(
            self.n, tuple(ExtendedLetter(a, i, -s) for a, i, s in reversed(self.letters))
        )

    def is_positive(self) -> bool:
        return all(sign > 0 for _, _, sign in self.letters)

    def positive_letter_count(self) -> int:
        return sum(1 for _, _, sign in self.letters if sign > 0)

    def index_sequence(self) -> tuple[int, ...]:
        """Strand indices read left to right (stable under every shift)."""
        return tuple(index for _, index, _ in self.letters)

    def __repr__(self) -> str:
        if len(self.letters) <= 12:
            return f"ExtendedWord({self.n}, {self.serialize()!r})"
        return f"<ExtendedWord n={self.n} length={len(self.letters)}>"


def sh(d: int, letter: ExtendedLetter) -> ExtendedLetter:
    """Advance the subscript by d modulo 4, flipping the sign when d is odd.

    This is a Z/4Z action on letters: sh(d, sh(e, x)) == sh(d + e, x) and
    sh(0, x) == x.  It never changes the strand index.
    """
    d &= 3
    sign = -letter.sign if d & 1 else letter.sign
    return ExtendedLetter((letter.sub + d) & 3, letter.index, sign)


def big_shift(shifts: Sequence[int], word: ExtendedWord) -> ExtendedWord:
    """Apply ``sh`` letterwise; ``shifts`` must match the word length."""
    if len(shifts) != len(word.letters):
        raise ValueError(
            f"shift list length {len(shifts)} does not match word length {len(word.letters)}"
        )
    return ExtendedWord(
        word.n, tuple(sh(d, x) for d, x in zip(shifts, word.letters))
    )


@dataclass(frozen=True, slots=True)
class Trip:
    """Shift bookkeeping (leading, delta, trailing) for a word.

    ``leading`` holds one Z/4Z shift per letter of the leading block,
    applied as-is; ``trailing`` holds one shift per remaining letter,
    applied after adding ``delta``.  For a trip produced by `separation`,
    the leading block length equals the word's positive-letter count and
    delta is always 0 or 2.
    """

    leading: tuple[int, ...]
    delta: int
    trailing: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "leading", tuple(d & 3 for d in self.leading))
        object.__setattr__(self, "delta", self.delta & 3)
        object.__setattr__(self, "trailing", tuple(d & 3 for d in self.trailing))

    def __len__(self) -> int:
        return len(self.leading) + len(self.trailing)


def bishift(trip: Trip, word: ExtendedWord) -> ExtendedWord:
    """Apply a trip letterwise: leading shifts verbatim, then trailing
    shifts offset by delta.  Equivalent to one `big_shift` whose trailing
    entries were all translated by delta."""
    letters = word.letters
    if len(trip) != len(letters):
        raise ValueError(
            f"trip covers {len(trip)} letters but word has {len(letters)}"
        )
    out = []
    append = out.append
    for d, (sub, index, sign) in zip(trip.leading, letters):
        append(ExtendedLetter((sub + d) & 3, index, -sign if d & 1 else sign))
    delta = trip.delta
    split = len(trip.leading)
    for e, (sub, index, sign) in zip(trip.trailing, letters[split:]):
        d = (delta + e) & 3
        append(ExtendedLetter((sub + d) & 3, index, -sign if d & 1 else sign))
    return ExtendedWord(word.n, tuple(out))


def _separate(
    letters: Sequence[ExtendedLetter], rule: str
) -> tuple[Trip, tuple[int, int, int]]:
    """Single pass building the trip; returns per-rule application counts.

    The trailing list is consumed from a head pointer and extended at the
    tail only, so each letter costs a constant number of Z/4Z operations
    and list appends.
    """
    try:
        lead_offset, trail_base = _RULE_CONSTANTS[rule]
    except KeyError:
        raise ValueError(f"unknown separation rule {rule!r}") from None
    leading: list[int] = []
    trailing: list[int] = []
    head = 0
    delta = 0
    enqueued = extended = swapped = 0
    for _sub, _index, sign in letters:
        if sign < 0:
            trailing.append(-delta & 3)
            enqueued += 1
        elif head == len(trailing):
            leading.append(0)
            extended += 1
        else:
            a = trailing[head]
            head += 1
            leading.append((a + delta + lead_offset) & 3)
            trailing.append((trail_base - delta) & 3)
            delta = (delta + 2) & 3
            swapped += 1
    trip = Trip(tuple(leading), delta, tuple(trailing[head:]))
    return trip, (enqueued, extended, swapped)


def separation(word: ExtendedWord, *, rule: str = RULE_CORRECTED) -> Trip:
    """Compute the trip of a word in one left-to-right pass.

    Rules, starting from ([], 0, []):

    * negative letter: append -delta to trailing;
    * positive letter, trailing empty: append 0 to leading;
    * positive letter, trailing nonempty with head entry a: pop the head,
      append a + delta + 3 to leading and 1 - delta to trailing, and add 2
      to delta.

    ``rule="literal"`` replaces the last pair of constants by a + delta + 1
    and 3 - delta; that variant does not preserve braid equivalence and is
    kept only so the discrepancy stays reproducible.
    """
    trip, _counts = _separate(word.letters, rule)
    return trip


@dataclass(frozen=True, slots=True)
class DivisionPair:
    """Two positive words (p, q) dividing some word as p * q^-1 (or, for the
    symmetric construction, q^-1 * p).  Both components are over the same
    alphabet: extended or standard depending on the producing operation."""

    p: object
    q: object


class GedStats(NamedTuple):
    """Machine-independent operation counts for one division run."""

    enqueued_rules: int
    extended_rules: int
    swapped_rules: int
    shift_count: int

    @property
    def total_ops(self) -> int:
        return self.enqueued_rules + self.extended_rules + self.swapped_rules + self.shift_count


@dataclass(frozen=True, slots=True)
class GedResult:
    """Full output of one extended division: the pair, the transformed word
    (positive block then negative block, same indices as the input), the
    trip that produced it, and operation counts."""

    pair: DivisionPair
    transformed: ExtendedWord
    trip: Trip
    stats: GedStats


def ged_details(word: ExtendedWord, *, rule: str = RULE_CORRECTED) -> GedResult:
    """General extended division with full instrumentation."""
    trip, counts = _separate(word.letters, rule)
    transformed = bishift(trip, word)
    split = len(trip.leading)
    t_letters = transformed.letters
    p_word = ExtendedWord(word.n, t_letters[:split])
    q_word = ExtendedWord(
        word.n,
        tuple(ExtendedLetter(a, i, -s) for a, i, s in reversed(t_letters[split:])),
    )
    stats = GedStats(*counts, shift_count=len(t_letters))
    return GedResult(
        pair=DivisionPair(p_word, q_word),
        transformed=transformed,
        trip=trip,
        stats=stats,
    )


def ged(word: ExtendedWord, *, rule: str = RULE_CORRECTED) -> DivisionPair:
    """General extended division: positive extended words (P, Q) with
    W = P * Q^-1 in the group, computed in a constant number of operations
    per letter.  |P| + |Q| equals |W|, |P| equals the number of positive
    letters of W, and the strand-index sequence is untouched."""
    return ged_details(word, rule=rule).pair


def commutation_swap(
    x: ExtendedLetter, y: ExtendedLetter
) -> tuple[ExtendedLetter, ExtendedLetter]:
    """Rewrite positive * negative as negative * positive, shifting both
    subscripts by one; the returned pair concatenates to a word equivalent
    to x * y with the same indices in the same positions."""
    if x.sign <= 0 or y.sign >= 0:
        raise ValueError("expected a positive letter followed by a negative letter")
    return sh(1, x), sh(1, y)


def commutation_swap_rev(
    y: ExtendedLetter, x: ExtendedLetter
) -> tuple[ExtendedLetter, ExtendedLetter]:
    """Reverse reading of `commutation_swap`: rewrite negative * positive as
    positive * negative, shifting both subscripts by three."""
    if y.sign >= 0 or x.sign <= 0:
        raise ValueError("expected a negative letter followed by a positive letter")
    return sh(3, y), sh(3, x)
