"""Alphabet orderings: the total order on symbols behind every lexicographic comparison."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_ALPHABET = 256


@dataclass(frozen=True)
class AlphabetOrdering:
    """A total order on a set of single-character symbols, smallest first.

    ``symbols[0]`` is the smallest symbol.  The induced order on strings is
    the usual lexicographic one: x is smaller than y iff x is a proper prefix
    of y, or the first mismatching symbol of x has smaller rank.
    """

    symbols: tuple[str, ...]
    _rank: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("an ordering needs at least one symbol")
        if any(len(s) != 1 for s in self.symbols):
            bad = next(s for s in self.symbols if len(s) != 1)
            raise ValueError(f"symbols must be single characters, got {bad!r}")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbol in ordering {''.join(self.symbols)!r}")
        if len(self.symbols) > MAX_ALPHABET:
            raise ValueError(f"alphabet larger than {MAX_ALPHABET} symbols")
        object.__setattr__(self, "_rank", {c: i for i, c in enumerate(self.symbols)})

    @classmethod
    def from_string(cls, spec: str) -> AlphabetOrdering:
        """Build an ordering from a permutation string such as ``"ab"`` or ``"$ab"``."""
        return cls(tuple(spec))

    @classmethod
    def standard(cls, text: str) -> AlphabetOrdering:
        """The ordering of the distinct symbols of ``text`` by their code points."""
        if not text:
            raise ValueError("cannot derive an ordering from empty text")
        return cls(tuple(sorted(set(text))))

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    @property
    def spec(self) -> str:
        """The permutation string, smallest symbol first."""
        return "".join(self.symbols)

    def rank(self, symbol: str) -> int:
        try:
            return self._rank[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in ordering {self.spec!r}") from None

    def key(self, text: str) -> tuple[int, ...]:
        """Rank tuple of ``text``; tuple comparison realizes the induced string order."""
        rank = self._rank
        try:
            return tuple(rank[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} not in ordering {self.spec!r}") from None

    def less(self, x: str, y: str) -> bool:
        """Strict lexicographic comparison of two strings under this ordering."""
        return self.key(x) < self.key(y)

    def covers(self, text: str) -> bool:
        return set(text) <= set(self.symbols)

    def require_covers(self, text: str) -> None:
        extra = sorted(set(text) - set(self.symbols))
        if extra:
            raise ValueError(
                f"text contains symbols {extra!r} outside the ordering {self.spec!r}"
            )


def all_orderings(symbols: Iterable[str]) -> Iterator[AlphabetOrdering]:
    """Every total order on ``symbols``, enumerated deterministically.

    Permutations are emitted in lexicographic order of the sorted symbol set,
    so scans that iterate orderings are reproducible run to run.
    """
    base = sorted(set(symbols))
    if not base:
        raise ValueError("cannot enumerate orderings of an empty symbol set")
    for perm in itertools.permutations(base):
        yield AlphabetOrdering(perm)
