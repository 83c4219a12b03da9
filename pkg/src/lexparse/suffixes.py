"""Suffix arrays under an arbitrary alphabet ordering, with LCP support.

The ordering is absorbed by renaming symbols to their ranks before
construction, so one code path serves every ordering.  Construction is
prefix doubling (O(n log n) sorts over integer keys); a naive full sort is
kept permanently as the test oracle.  All positions and ranks in the public
contract are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import AlphabetOrdering


@dataclass(frozen=True)
class SuffixArray:
    """Sorted-suffix permutation of a text plus inverse and LCP arrays.

    ``sa[r-1]`` is the 1-based start of the r-th smallest suffix,
    ``rank[i-1]`` the 1-based rank of the suffix starting at position i, and
    ``lcp[r-1]`` the longest-common-prefix length between the suffixes of
    rank r-1 and r (``lcp[0]`` is 0).
    """

    text: str
    ordering: AlphabetOrdering
    sa: tuple[int, ...]
    rank: tuple[int, ...]
    lcp: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.text)

    def suffix_start(self, r: int) -> int:
        """Start position of the suffix of rank r."""
        self._check_pos(r)
        return self.sa[r - 1]

    def rank_of(self, i: int) -> int:
        """Rank of the suffix starting at position i."""
        self._check_pos(i)
        return self.rank[i - 1]

    def suffix(self, i: int) -> str:
        self._check_pos(i)
        return self.text[i - 1 :]

    def previous_suffix(self, i: int) -> int | None:
        """Start of the lexicographic predecessor of suffix i, or None if i is smallest."""
        r = self.rank_of(i)
        if r == 1:
            return None
        return self.sa[r - 2]

    def lcp_at_rank(self, r: int) -> int:
        """LCP of the suffixes of ranks r-1 and r; 0 when r == 1."""
        self._check_pos(r)
        return self.lcp[r - 1]

    def lcp_between(self, i: int, j: int) -> int:
        """LCP length of the suffixes starting at positions i and j, by direct scan."""
        self._check_pos(i)
        self._check_pos(j)
        t = self.text
        n = len(t)
        a, b = i - 1, j - 1
        l = 0
        while a + l < n and b + l < n and t[a + l] == t[b + l]:
            l += 1
        return l

    def _check_pos(self, i: int) -> None:
        if not 1 <= i <= len(self.text):
            raise ValueError(f"position {i} out of range [1..{len(self.text)}]")


def build_suffix_array(text: str, ordering: AlphabetOrdering | None = None) -> SuffixArray:
    """Suffix array of ``text`` under ``ordering`` (default: code-point order)."""
    ranks, ordering = _symbol_ranks(text, ordering)
    sa0 = _doubling_sort(ranks)
    return _finish(text, ordering, sa0)


def build_suffix_array_naive(text: str, ordering: AlphabetOrdering | None = None) -> SuffixArray:
    """Reference construction: full comparison sort of the suffix rank tuples.

    Quadratic; kept as the permanent oracle for the doubling construction.
    """
    ranks, ordering = _symbol_ranks(text, ordering)
    n = len(ranks)
    sa0 = sorted(range(n), key=lambda i: ranks[i:])
    return _finish(text, ordering, sa0, kasai=False)


def _symbol_ranks(
    text: str, ordering: AlphabetOrdering | None
) -> tuple[list[int], AlphabetOrdering]:
    if not text:
        raise ValueError("text must be non-empty")
    if ordering is None:
        ordering = AlphabetOrdering.standard(text)
    else:
        ordering.require_covers(text)
    rank = {c: ordering.rank(c) for c in set(text)}
    return [rank[c] for c in text], ordering


def _doubling_sort(ranks: list[int]) -> list[int]:
    """0-based suffix array by prefix doubling over integer keys."""
    n = len(ranks)
    sa = sorted(range(n), key=ranks.__getitem__)
    rank = [0] * n
    r = 0
    for idx in range(1, n):
        if ranks[sa[idx]] != ranks[sa[idx - 1]]:
            r += 1
        rank[sa[idx]] = r
    step = 1
    while r < n - 1:
        base = n + 1
        key = [0] * n
        for i in range(n):
            second = rank[i + step] + 1 if i + step < n else 0
            key[i] = rank[i] * base + second
        sa.sort(key=key.__getitem__)
        rank = [0] * n
        r = 0
        prev = key[sa[0]]
        for idx in range(1, n):
            cur = key[sa[idx]]
            if cur != prev:
                r += 1
                prev = cur
            rank[sa[idx]] = r
        step *= 2
    return sa


def _kasai_lcp(ranks: list[int], sa0: list[int]) -> list[int]:
    """Adjacent-rank LCP array (Kasai), 0-based ranks; lcp[0] = 0."""
    n = len(ranks)
    inv = [0] * n
    for r, p in enumerate(sa0):
        inv[p] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = inv[i]
        if r == 0:
            h = 0
            continue
        j = sa0[r - 1]
        while i + h < n and j + h < n and ranks[i + h] == ranks[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def _pairwise_lcp(ranks: list[int], sa0: list[int]) -> list[int]:
    """Adjacent-rank LCP by direct character scans (used with the naive oracle)."""
    n = len(ranks)
    lcp = [0] * n
    for r in range(1, n):
        a, b = sa0[r - 1], sa0[r]
        l = 0
        while a + l < n and b + l < n and ranks[a + l] == ranks[b + l]:
            l += 1
        lcp[r] = l
    return lcp


def _finish(
    text: str,
    ordering: AlphabetOrdering,
    sa0: list[int],
    *,
    kasai: bool = True,
) -> SuffixArray:
    rank_map = {c: ordering.rank(c) for c in set(text)}
    ranks = [rank_map[c] for c in text]
    lcp = _kasai_lcp(ranks, sa0) if kasai else _pairwise_lcp(ranks, sa0)
    n = len(text)
    inv = [0] * n
    for r, p in enumerate(sa0):
        inv[p] = r + 1
    return SuffixArray(
        text=text,
        ordering=ordering,
        sa=tuple(p + 1 for p in sa0),
        rank=tuple(inv),
        lcp=tuple(lcp),
    )
