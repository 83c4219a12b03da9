"""Order-parameterized Lyndon factorization and significant suffixes."""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import AlphabetOrdering
from .fibwords import fib_lyndon_factor  # noqa: F401  (re-exported: part of this module's API)


def is_lyndon(w: str, ordering: AlphabetOrdering | None = None) -> bool:
    """True iff ``w`` is strictly smaller than every proper suffix of itself."""
    if not w:
        raise ValueError("input must be non-empty")
    if ordering is None:
        ordering = AlphabetOrdering.standard(w)
    key = ordering.key(w)
    return all(key < key[i:] for i in range(1, len(key)))


@dataclass(frozen=True)
class LyndonFactorization:
    """Run-length compressed Lyndon factorization: ((factor, exponent), ...).

    Factors strictly decrease under the ordering; expanding every factor to
    its exponent reproduces the input.
    """

    factors: tuple[tuple[str, int], ...]
    ordering: AlphabetOrdering

    @property
    def m(self) -> int:
        """Number of distinct factors."""
        return len(self.factors)

    def expand(self) -> str:
        return "".join(lam * p for lam, p in self.factors)

    def factor_starts(self) -> list[int]:
        """1-based start position of each factor block."""
        out = []
        pos = 1
        for lam, p in self.factors:
            out.append(pos)
            pos += len(lam) * p
        return out


def lyndon_factorize(w: str, ordering: AlphabetOrdering | None = None) -> LyndonFactorization:
    """The unique decreasing factorization of ``w`` into Lyndon-word powers (Duval, linear)."""
    if not w:
        raise ValueError("input must be non-empty")
    if ordering is None:
        ordering = AlphabetOrdering.standard(w)
    else:
        ordering.require_covers(w)
    s = ordering.key(w)
    n = len(s)
    raw: list[str] = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            if s[k] < s[j]:
                k = i
            else:
                k += 1
            j += 1
        period = j - k
        while i <= k:
            raw.append(w[i : i + period])
            i += period
    grouped: list[tuple[str, int]] = []
    for lam in raw:
        if grouped and grouped[-1][0] == lam:
            grouped[-1] = (lam, grouped[-1][1] + 1)
        else:
            grouped.append((lam, 1))
    return LyndonFactorization(tuple(grouped), ordering)


def significant_suffixes(w: str, ordering: AlphabetOrdering | None = None) -> list[int]:
    """Start positions of the significant suffixes of ``w``, ascending.

    A suffix that starts at a factor block of the Lyndon factorization is
    significant when every block tail after it is a prefix of the block it
    follows.  The last block is always significant (the condition is vacuous),
    so for a single-factor word the whole string qualifies.
    """
    lf = lyndon_factorize(w, ordering)
    blocks = [lam * p for lam, p in lf.factors]
    starts = lf.factor_starts()
    m = len(blocks)
    out = [starts[m - 1]]
    tail = blocks[m - 1]
    # Walk blocks right to left; the significant indices form a suffix of 1..m.
    for j in range(m - 2, -1, -1):
        if not blocks[j].startswith(tail):
            break
        out.append(starts[j])
        tail = blocks[j] + tail
    out.reverse()
    return out
