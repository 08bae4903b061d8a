"""Reduced words over signed generators.

Generators are identified by a (namespace, index) pair so that assembled
presentations stay self-documenting: the namespace records which building
block a generator came from.  Words are plain sequences of signed letters;
multiplication concatenates without reducing, and ``reduce_word`` computes
the unique free normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = ["GenId", "Word", "IDENTITY", "gen", "word", "reduce_word"]


@dataclass(frozen=True, order=True)
class GenId:
    """A generator name: origin namespace plus an index within it."""

    namespace: str
    index: int

    def __str__(self) -> str:
        return f"{self.namespace}.{self.index}"


Letter = tuple[GenId, int]


@dataclass(frozen=True)
class Word:
    """A word in signed generators; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for g, s in self.letters:
            if not isinstance(g, GenId) or s not in (1, -1):
                raise ValueError(f"bad letter {(g, s)!r}")

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> frozenset[GenId]:
        return frozenset(g for g, _ in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(f"{g}" if s > 0 else f"{g}^-1" for g, s in self.letters)


IDENTITY = Word()


def gen(g: GenId, sign: int = 1) -> Word:
    """One-letter word."""
    return Word(((g, sign),))


def word(*letters: Letter) -> Word:
    return Word(tuple(letters))


def reduce_word(w: Word) -> Word:
    """Free reduction: cancel adjacent inverse pairs until none remain.

    Reduction is confluent, so the result is the unique reduced word freely
    equal to ``w``; the function is idempotent and never lengthens a word.
    """
    stack: list[Letter] = []
    for g, s in w.letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return Word(tuple(stack))
