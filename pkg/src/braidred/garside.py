"""Equality oracle for the braid group and monoid via left-canonical form.

Every braid word has a unique expression D^k * A_1 ... A_m where D is the
positive half twist, each A_t is a permutation braid (a positive braid in
which any two strands cross at most once) different from the identity and
from D, and each adjacent pair is left-weighted: every generator that can
start A_{t+1} can also finish A_t.  Two words represent the same group
element exactly when these expressions coincide, which makes the form a
total equality oracle for the group; positive words are compared the same
way, which is valid for the monoid because positive braids embed in the
group.

Permutation braids are recorded by their underlying permutation (one-line
notation, 0-indexed).  Words are first cut greedily into maximal
permutation-braid chunks (inverse letters contribute an inverse half-twist
power plus the complementary permutation braid), the half-twist powers are
migrated to the front through the order-two conjugation automorphism, and
the chunk sequence is normalised by local pairwise rebalancing.  All pair
rebalances are memoised per strand count, so repeated comparisons over the
same group are fast.  This module is a test instrument: correctness and
totality matter here, asymptotic optimality does not.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .words import (
    StandardLetter,
    StandardWord,
    StrandMismatchError,
    check_strand_count,
)


class PositivityError(ValueError):
    """A monoid-only operation received a word with inverse letters."""


class PermutationBraid(NamedTuple):
    """A positive braid whose strand pairs cross at most once, recorded by
    its permutation in one-line notation (0-indexed)."""

    perm: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class GarsideForm:
    """Left-canonical form: half-twist power ``inf`` plus left-weighted
    permutation-braid factors, none equal to the identity or the half
    twist.  Forms are equal componentwise iff the words are equivalent."""

    n: int
    inf: int
    factors: tuple[PermutationBraid, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors


class _PermTables:
    """Permutation arithmetic and memoised pair rebalancing for one n."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.identity = tuple(range(n))
        self.half_twist = tuple(range(n - 1, -1, -1))
        # gen_perms[g] is the transposition of positions g-1, g (1-indexed g)
        self.gen_perms = {}
        for g in range(1, n):
            perm = list(range(n))
            perm[g - 1], perm[g] = perm[g], perm[g - 1]
            self.gen_perms[g] = tuple(perm)
        self._masks: dict[tuple[int, ...], tuple[int, int]] = {}
        self._renorm: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple] = {}
        self._tau: dict[tuple[int, ...], tuple[int, ...]] = {}

    @staticmethod
    def mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        """Composition matching word concatenation: apply p, then q."""
        return tuple(q[v] for v in p)

    @staticmethod
    def invert(p: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(p)
        for position, value in enumerate(p):
            out[value] = position
        return tuple(out)

    def masks(self, p: tuple[int, ...]) -> tuple[int, int]:
        """(start, finish) bitmasks: bit g set when generator g can start /
        finish the permutation braid of p."""
        cached = self._masks.get(p)
        if cached is not None:
            return cached
        start = 0
        for k in range(self.n - 1):
            if p[k] > p[k + 1]:
                start |= 1 << (k + 1)
        inv = self.invert(p)
        finish = 0
        for k in range(self.n - 1):
            if inv[k] > inv[k + 1]:
                finish |= 1 << (k + 1)
        self._masks[p] = (start, finish)
        return start, finish

    def tau(self, p: tuple[int, ...]) -> tuple[int, ...]:
        """Conjugation by the half twist (an order-two automorphism)."""
        cached = self._tau.get(p)
        if cached is None:
            w0 = self.half_twist
            cached = self.mul(w0, self.mul(p, w0))
            self._tau[p] = cached
        return cached

    def renorm(
        self, x: tuple[int, ...], y: tuple[int, ...]
    ) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Rebalance an adjacent factor pair into left-weighted position by
        moving generators from the head of y to the tail of x."""
        key = (x, y)
        cached = self._renorm.get(key)
        if cached is not None:
            return cached
        gen_perms = self.gen_perms
        mul = self.mul
        cx, cy = x, y
        while True:
            available = self.masks(cy)[0] & ~self.masks(cx)[1]
            if not available:
                break
            g = (available & -available).bit_length() - 1
            cx = mul(cx, gen_perms[g])
            cy = mul(gen_perms[g], cy)
        result = (cx, cy)
        self._renorm[key] = result
        return result

    # -- word -> factor pipeline -------------------------------------------

    def chunk(self, letters: Sequence[StandardLetter]) -> tuple[list[int], list[tuple[int, ...]]]:
        """Greedily cut a word into permutation-braid chunks.

        Returns parallel lists (delta_powers, factors): the word equals the
        product of D^delta_powers[t] * factors[t].  A maximal run of inverse
        letters with positive reversal R becomes D^-1 times the braid
        completing R to the half twist.
        """
        deltas: list[int] = []
        factors: list[tuple[int, ...]] = []
        gen_perms = self.gen_perms
        mul = self.mul
        current: tuple[int, ...] | None = None
        negative = False

        def flush() -> None:
            nonlocal current
            if current is None:
                return
            if negative:
                deltas.append(-1)
                factors.append(mul(self.half_twist, self.invert(current)))
            else:
                deltas.append(0)
                factors.append(current)
            current = None

        for index, sign in letters:
            if sign > 0:
                if (
                    current is not None
                    and not negative
                    and not (self.masks(current)[1] >> index) & 1
                ):
                    current = mul(current, gen_perms[index])
                else:
                    flush()
                    current = gen_perms[index]
                    negative = False
            else:
                if (
                    current is not None
                    and negative
                    and not (self.masks(current)[0] >> index) & 1
                ):
                    current = mul(gen_perms[index], current)
                else:
                    flush()
                    current = gen_perms[index]
                    negative = True
        flush()
        return deltas, factors

    def migrate_deltas(
        self, deltas: list[int], factors: list[tuple[int, ...]]
    ) -> tuple[int, list[tuple[int, ...]]]:
        """Move all half-twist powers to the front, conjugating each factor
        by the total power accumulated to its right."""
        total = 0
        out: list[tuple[int, ...]] = []
        for e, f in zip(reversed(deltas), reversed(factors)):
            out.append(f if total % 2 == 0 else self.tau(f))
            total += e
        out.reverse()
        return total, out

    def push(self, nf: list[tuple[int, ...]], factor: tuple[int, ...]) -> None:
        """Right-multiply a left-weighted factor list by one permutation
        braid, restoring left-weightedness by a backward comb."""
        if factor == self.identity:
            return
        nf.append(factor)
        j = len(nf) - 2
        identity = self.identity
        while j >= 0:
            x, y = self.renorm(nf[j], nf[j + 1])
            if x == nf[j]:
                break
            nf[j] = x
            if y == identity:
                del nf[j + 1]
            else:
                nf[j + 1] = y
            j -= 1

    def settle(self, nf: list[tuple[int, ...]]) -> None:
        """Local pairwise passes until every adjacent pair is left-weighted.
        Normally a single clean verification sweep; it also serves as an
        unconditional fallback since left-weightedness is a local property
        and rebalancing preserves the represented braid."""
        identity = self.identity
        while True:
            changed = False
            i = 0
            while i < len(nf) - 1:
                x, y = self.renorm(nf[i], nf[i + 1])
                if x == nf[i] and y == nf[i + 1]:
                    i += 1
                    continue
                changed = True
                if y == identity:
                    nf[i] = x
                    del nf[i + 1]
                else:
                    nf[i], nf[i + 1] = x, y
                    i += 1
            if not changed:
                return

    def normal_key(self, letters: Sequence[StandardLetter]) -> tuple[int, tuple[tuple[int, ...], ...]]:
        deltas, raw = self.chunk(letters)
        inf, factors = self.migrate_deltas(deltas, raw)
        nf: list[tuple[int, ...]] = []
        for factor in factors:
            self.push(nf, factor)
        self.settle(nf)
        lead = 0
        while lead < len(nf) and nf[lead] == self.half_twist:
            lead += 1
        if lead:
            inf += lead
            del nf[:lead]
        return inf, tuple(nf)


@lru_cache(maxsize=None)
def _tables(n: int) -> _PermTables:
    check_strand_count(n)
    return _PermTables(n)


def _normal_key(word: StandardWord) -> tuple[int, tuple[tuple[int, ...], ...]]:
    return _tables(word.n).normal_key(word.letters)


def normal_form(word: StandardWord) -> GarsideForm:
    """Left-canonical form of the braid represented by a word."""
    inf, factors = _normal_key(word)
    return GarsideForm(word.n, inf, tuple(PermutationBraid(p) for p in factors))


def equal_group(w1: StandardWord, w2: StandardWord) -> bool:
    """Group equality: identical left-canonical forms."""
    if w1.n != w2.n:
        raise StrandMismatchError(
            f"cannot compare words over {w1.n} and {w2.n} strands"
        )
    return _normal_key(w1) == _normal_key(w2)


def equal_monoid(p1: StandardWord, p2: StandardWord) -> bool:
    """Monoid equality of positive words.  Valid as group equality because
    the positive monoid embeds in the group; inverse letters are refused."""
    if not p1.is_positive() or not p2.is_positive():
        raise PositivityError("monoid comparison requires positive words")
    return equal_group(p1, p2)


def enumerate_positive(n: int, length: int) -> Iterator[StandardWord]:
    """All positive words of exactly the given length, lexicographic by
    index sequence."""
    check_strand_count(n)
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    for indices in itertools.product(range(1, n), repeat=length):
        yield StandardWord(n, tuple(StandardLetter(i, 1) for i in indices))
