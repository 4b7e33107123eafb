"""
Free group words on the loops around the inner holes of a planar page.

Letters use the Tietze convention: the integer ``i + 1`` stands for the
generator ``x_i`` and ``-(i + 1)`` for its inverse.  Every word handled here
is kept freely reduced.  Automorphisms (and endomorphisms) of the free group
are tuples of generator images, each a reduced letter tuple.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

DEFAULT_MAX_LENGTH = 10**6

Letters = tuple[int, ...]
Images = tuple[Letters, ...]


class WordLengthError(RuntimeError):
    """Raised when a substitution would produce a word over the length cap."""


def reduce_letters(letters: Iterable[int]) -> Letters:
    stack: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("0 is not a valid letter")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_letters(letters: Sequence[int]) -> Letters:
    return tuple(-letter for letter in reversed(letters))


def cyclic_reduce(letters: Letters) -> Letters:
    """Strip cancelling letters from both ends of a reduced word."""
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == -letters[end - 1]:
        start += 1
        end -= 1
    return letters[start:end]


def substitute(images: Sequence[Letters], letters: Sequence[int],
               max_length: int = DEFAULT_MAX_LENGTH) -> Letters:
    """Image of a word under the endomorphism ``x_i -> images[i]``."""
    stack: list[int] = []
    for letter in letters:
        piece = images[letter - 1] if letter > 0 else invert_letters(images[-letter - 1])
        for a in piece:
            if stack and stack[-1] == -a:
                stack.pop()
            else:
                stack.append(a)
        if len(stack) > max_length:
            raise WordLengthError(f"word length exceeded cap of {max_length} letters")
    return tuple(stack)


def compose_images(outer: Sequence[Letters], inner: Sequence[Letters],
                   max_length: int = DEFAULT_MAX_LENGTH) -> Images:
    """Images of ``outer o inner`` (apply ``inner`` first)."""
    return tuple(substitute(outer, w, max_length) for w in inner)


def identity_images(rank: int) -> Images:
    return tuple((i + 1,) for i in range(rank))


def exponent_sums(letters: Iterable[int], rank: int) -> tuple[int, ...]:
    sums = [0] * rank
    for letter in letters:
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    return tuple(sums)


_SYMBOL = re.compile(r"^([xX])(\d+)$")


def parse_symbol(symbol: str) -> int:
    """``"x3"`` -> 4, ``"X3"`` -> -4 (uppercase is the inverse)."""
    match = _SYMBOL.match(symbol.strip())
    if match is None:
        raise ValueError(f"bad generator symbol {symbol!r}")
    index = int(match.group(2)) + 1
    return index if match.group(1) == "x" else -index


def format_symbol(letter: int) -> str:
    return ("x" if letter > 0 else "X") + str(abs(letter) - 1)


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; construct through ``FreeWord.of`` to reduce."""

    letters: Letters = ()

    def __post_init__(self):
        if reduce_letters(self.letters) != tuple(self.letters):
            raise ValueError("FreeWord letters must be freely reduced; use FreeWord.of")

    @classmethod
    def of(cls, letters: Iterable[int]) -> FreeWord:
        return cls(reduce_letters(letters))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> FreeWord:
        """Build from ``(generator index, exponent)`` pairs, exponent +1 or -1."""
        letters = []
        for index, exponent in pairs:
            if exponent not in (1, -1) or index < 0:
                raise ValueError(f"bad letter {(index, exponent)}")
            letters.append((index + 1) * exponent)
        return cls.of(letters)

    @classmethod
    def from_symbols(cls, symbols: Iterable[str]) -> FreeWord:
        return cls.of(parse_symbol(s) for s in symbols)

    @classmethod
    def parse(cls, text: str) -> FreeWord:
        """Parse the dotted form ``"x0.x1.X0"``; the empty string is the identity."""
        text = text.strip()
        if not text or text == "1":
            return cls()
        return cls.from_symbols(text.split("."))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((abs(a) - 1, 1 if a > 0 else -1) for a in self.letters)

    def symbols(self) -> list[str]:
        return [format_symbol(a) for a in self.letters]

    def inverse(self) -> FreeWord:
        return FreeWord(invert_letters(self.letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord.of(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ".".join(self.symbols())
