"""Elementary combinatorics on words: occurrences, borders, primitivity, edit enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .alphabet import AlphabetOrdering

EDIT_KINDS = ("sub", "ins", "del")

_KIND_ALIASES = {
    "sub": "sub", "substitute": "sub", "substitution": "sub",
    "ins": "ins", "insert": "ins", "insertion": "ins",
    "del": "del", "delete": "del", "deletion": "del",
}


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown edit kind {kind!r}; expected one of {EDIT_KINDS}") from None


def substring(w: str, i: int, j: int) -> str:
    """1-based inclusive slice w[i..j]; empty whenever i > j."""
    if i > j:
        return ""
    if i < 1 or j > len(w):
        raise ValueError(f"slice [{i}..{j}] out of range for length {len(w)}")
    return w[i - 1 : j]


def occurrences(pattern: str, text: str) -> list[int]:
    """All 1-based start positions of ``pattern`` in ``text``, ascending; overlaps count."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    out = []
    start = 0
    while True:
        p = text.find(pattern, start)
        if p < 0:
            return out
        out.append(p + 1)
        start = p + 1


def is_primitive(w: str) -> bool:
    """True iff ``w`` is not a proper power; decided by counting occurrences in its square."""
    if not w:
        raise ValueError("input must be non-empty")
    return len(occurrences(w, w + w)) == 2


def longest_border(w: str) -> int:
    """Length of the longest proper prefix of ``w`` that is also a suffix; 0 if none."""
    if not w:
        raise ValueError("input must be non-empty")
    # KMP prefix function, last entry.
    pi = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k > 0 and w[i] != w[k]:
            k = pi[k - 1]
        if w[i] == w[k]:
            k += 1
        pi[i] = k
    return pi[-1]


@dataclass(frozen=True)
class EditCandidate:
    """One single-edit neighbour of a text.

    ``position`` is 1-based: the edited position for substitutions and
    deletions, and the position the new symbol occupies for insertions.
    ``old`` is None for insertions, ``new`` is None for deletions.
    """

    kind: str
    position: int
    old: str | None
    new: str | None
    text: str


def _alphabet_symbols(alphabet: str | Sequence[str] | AlphabetOrdering) -> tuple[str, ...]:
    if isinstance(alphabet, AlphabetOrdering):
        return alphabet.symbols
    symbols = tuple(alphabet)
    if not symbols:
        raise ValueError("alphabet must be non-empty")
    if any(len(s) != 1 for s in symbols):
        raise ValueError("alphabet entries must be single characters")
    if len(set(symbols)) != len(symbols):
        raise ValueError("alphabet contains duplicate symbols")
    return symbols


def edit_candidates(
    w: str,
    kind: str,
    alphabet: str | Sequence[str] | AlphabetOrdering,
) -> Iterator[EditCandidate]:
    """Every neighbour of ``w`` at edit distance exactly 1, with edit metadata.

    Enumeration order is deterministic: position-major, then replacement
    symbol in the order the alphabet lists them.  Distinct edits may yield
    equal strings; deduplication is the caller's concern.
    """
    kind = normalize_kind(kind)
    symbols = _alphabet_symbols(alphabet)
    n = len(w)
    if kind in ("sub", "del") and n < 1:
        raise ValueError(f"{kind} requires a non-empty text")
    if kind == "sub":
        for i in range(n):
            for c in symbols:
                if c != w[i]:
                    yield EditCandidate("sub", i + 1, w[i], c, w[:i] + c + w[i + 1 :])
    elif kind == "ins":
        for i in range(n + 1):
            for c in symbols:
                yield EditCandidate("ins", i + 1, None, c, w[:i] + c + w[i:])
    else:
        for i in range(n):
            yield EditCandidate("del", i + 1, w[i], None, w[:i] + w[i + 1 :])


def enumerate_edits(
    w: str,
    kind: str,
    alphabet: str | Sequence[str] | AlphabetOrdering,
) -> Iterator[str]:
    """The texts of :func:`edit_candidates`, in the same deterministic order."""
    for cand in edit_candidates(w, kind, alphabet):
        yield cand.text
