"""Seeded random word generation.

The sampling model is i.i.d. uniform over the letter alphabet: all 2(n-1)
signed standard letters, or all 8(n-1) signed extended letters.  Letters are
drawn from a prebuilt pool so large samples share letter objects.
`equivalent_variant` produces a provably equal word by applying defining
relations and free insertions, which is how known-equal test pairs are
constructed.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .extended import ExtendedLetter, ExtendedWord
from .words import StandardLetter, StandardWord, check_strand_count


@lru_cache(maxsize=None)
def _standard_pool(n: int, positive_only: bool) -> tuple[StandardLetter, ...]:
    check_strand_count(n)
    signs = (1,) if positive_only else (1, -1)
    return tuple(
        StandardLetter(index, sign) for index in range(1, n) for sign in signs
    )


@lru_cache(maxsize=None)
def _extended_pool(n: int, positive_only: bool) -> tuple[ExtendedLetter, ...]:
    check_strand_count(n)
    signs = (1,) if positive_only else (1, -1)
    return tuple(
        ExtendedLetter(sub, index, sign)
        for sub in range(4)
        for index in range(1, n)
        for sign in signs
    )


def random_standard_word(n: int, length: int, rng: random.Random) -> StandardWord:
    return StandardWord(n, tuple(rng.choices(_standard_pool(n, False), k=length)))


def random_positive_word(n: int, length: int, rng: random.Random) -> StandardWord:
    return StandardWord(n, tuple(rng.choices(_standard_pool(n, True), k=length)))


def random_extended_word(n: int, length: int, rng: random.Random) -> ExtendedWord:
    return ExtendedWord(n, tuple(rng.choices(_extended_pool(n, False), k=length)))


def random_positive_extended_word(
    n: int, length: int, rng: random.Random
) -> ExtendedWord:
    return ExtendedWord(n, tuple(rng.choices(_extended_pool(n, True), k=length)))


def equivalent_variant(
    word: StandardWord, rng: random.Random, moves: int = 12
) -> StandardWord:
    """A word equal to the input in the group, produced by random moves.

    Each move is a free insertion of a cancelling letter pair, a far
    commutation (adjacent letters with index distance at least two trade
    places, any signs), or a braid-relation rewrite of an adjacent
    same-sign triple with index pattern i, j, i and |i - j| = 1.
    """
    n = word.n
    letters = list(word.letters)
    for _ in range(moves):
        kind = rng.randrange(3)
        if kind == 0:
            position = rng.randint(0, len(letters))
            index = rng.randint(1, n - 1)
            sign = rng.choice((1, -1))
            letters[position:position] = [
                StandardLetter(index, sign),
                StandardLetter(index, -sign),
            ]
        elif kind == 1:
            spots = [
                k
                for k in range(len(letters) - 1)
                if abs(letters[k].index - letters[k + 1].index) >= 2
            ]
            if spots:
                k = rng.choice(spots)
                letters[k], letters[k + 1] = letters[k + 1], letters[k]
        else:
            spots = [
                k
                for k in range(len(letters) - 2)
                if letters[k].index == letters[k + 2].index
                and abs(letters[k].index - letters[k + 1].index) == 1
                and letters[k].sign == letters[k + 1].sign == letters[k + 2].sign
            ]
            if spots:
                k = rng.choice(spots)
                i, j, sign = letters[k].index, letters[k + 1].index, letters[k].sign
                letters[k : k + 3] = [
                    StandardLetter(j, sign),
                    StandardLetter(i, sign),
                    StandardLetter(j, sign),
                ]
    return StandardWord(n, tuple(letters))
