"""Greedy lex-parse: construction, decoding, serialization, LZ77 comparator.

A lex-parse phrase starting at position i copies the longest common prefix
between the suffix at i and its lexicographic predecessor suffix; when that
prefix is empty the phrase is a single explicit symbol.  The phrase sequence
is a bidirectional macro scheme: copy sources may lie to the right of the
phrase, and decoding resolves per-position reference chains, which terminate
because every hop moves to a lexicographically smaller suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .alphabet import AlphabetOrdering
from .suffixes import SuffixArray, build_suffix_array


class MalformedParseError(ValueError):
    """A structurally invalid phrase sequence (bad lengths, bad source, or a reference cycle)."""


@dataclass(frozen=True)
class Explicit:
    """A length-1 phrase carrying its symbol literally; encoded as the pair (0, symbol)."""

    symbol: str

    @property
    def length(self) -> int:
        return 1

    @property
    def is_explicit(self) -> bool:
        return True


@dataclass(frozen=True)
class Copy:
    """A phrase of ``length`` >= 1 copied from the suffix starting at 1-based ``source``."""

    length: int
    source: int

    @property
    def is_explicit(self) -> bool:
        return False


Phrase = Union[Explicit, Copy]


@dataclass(frozen=True)
class LexParse:
    """An ordered phrase sequence covering a text of length ``n``."""

    phrases: tuple[Phrase, ...]
    n: int
    ordering: AlphabetOrdering

    @property
    def v(self) -> int:
        """Number of phrases."""
        return len(self.phrases)

    def starts(self) -> list[int]:
        """1-based start position of each phrase."""
        out = []
        pos = 1
        for ph in self.phrases:
            out.append(pos)
            pos += ph.length
        return out

    def spans(self) -> list[tuple[int, int]]:
        """(start, length) of each phrase, 1-based."""
        return [(s, p.length) for s, p in zip(self.starts(), self.phrases)]

    def lengths(self) -> list[int]:
        return [p.length for p in self.phrases]


def phrase_strings(parse: LexParse, text: str) -> list[str]:
    """The phrase contents of ``parse`` read off ``text``."""
    if len(text) != parse.n:
        raise ValueError(f"text length {len(text)} != parse length {parse.n}")
    return [text[s - 1 : s - 1 + l] for s, l in parse.spans()]


def lex_parse(
    text: str,
    ordering: AlphabetOrdering | None = None,
    sa: SuffixArray | None = None,
) -> LexParse:
    """Greedy left-to-right lex-parse of ``text`` under ``ordering``.

    A prebuilt suffix array for the same text/ordering may be passed to avoid
    rebuilding it.
    """
    if sa is None:
        sa = build_suffix_array(text, ordering)
    elif sa.text != text or (ordering is not None and sa.ordering != ordering):
        raise ValueError("suffix array does not match the given text/ordering")
    n = sa.n
    phrases: list[Phrase] = []
    i = 1
    while i <= n:
        r = sa.rank_of(i)
        l = sa.lcp_at_rank(r)
        if l == 0:
            phrases.append(Explicit(text[i - 1]))
            i += 1
        else:
            phrases.append(Copy(l, sa.suffix_start(r - 1)))
            i += l
    return LexParse(tuple(phrases), n, sa.ordering)


def v_count(text: str, ordering: AlphabetOrdering | None = None) -> int:
    """Number of lex-parse phrases of ``text`` under ``ordering``."""
    return lex_parse(text, ordering).v


def lex_parse_naive(text: str, ordering: AlphabetOrdering | None = None) -> LexParse:
    """From-the-definition quadratic lex-parse: naive suffix sort, naive LCP scans.

    Independent of the suffix-array module; kept as the oracle for
    :func:`lex_parse`.
    """
    if not text:
        raise ValueError("text must be non-empty")
    if ordering is None:
        ordering = AlphabetOrdering.standard(text)
    else:
        ordering.require_covers(text)
    n = len(text)
    keys = {i: ordering.key(text[i - 1 :]) for i in range(1, n + 1)}
    order = sorted(range(1, n + 1), key=keys.__getitem__)
    rank = {p: r for r, p in enumerate(order)}
    phrases: list[Phrase] = []
    i = 1
    while i <= n:
        r = rank[i]
        if r == 0:
            phrases.append(Explicit(text[i - 1]))
            i += 1
            continue
        src = order[r - 1]
        a, b = keys[i], keys[src]
        l = 0
        while l < len(a) and l < len(b) and a[l] == b[l]:
            l += 1
        if l == 0:
            phrases.append(Explicit(text[i - 1]))
            i += 1
        else:
            phrases.append(Copy(l, src))
            i += l
    return LexParse(tuple(phrases), n, ordering)


def decode(parse: LexParse) -> str:
    """Reconstruct the unique text a lex-parse represents.

    Every copied position follows its source chain until it reaches an
    explicit symbol; chains are memoized.  Raises
    :class:`MalformedParseError` on inconsistent lengths, out-of-range
    sources, or reference cycles.
    """
    n = parse.n
    total = sum(p.length for p in parse.phrases)
    if total != n:
        raise MalformedParseError(f"phrase lengths sum to {total}, expected {n}")
    out: list[str | None] = [None] * (n + 1)
    ref = [0] * (n + 1)
    pos = 1
    for ph in parse.phrases:
        if isinstance(ph, Explicit):
            out[pos] = ph.symbol
            pos += 1
            continue
        if ph.length < 1:
            raise MalformedParseError(f"copy phrase at {pos} has length {ph.length}")
        if not 1 <= ph.source <= n or ph.source + ph.length - 1 > n:
            raise MalformedParseError(
                f"copy phrase at {pos} references [{ph.source}..{ph.source + ph.length - 1}] "
                f"outside [1..{n}]"
            )
        for t in range(ph.length):
            ref[pos + t] = ph.source + t
        pos += ph.length
    for p in range(1, n + 1):
        if out[p] is not None:
            continue
        chain = []
        q = p
        seen = set()
        while out[q] is None:
            if q in seen:
                raise MalformedParseError(f"reference cycle through position {q}")
            seen.add(q)
            chain.append(q)
            q = ref[q]
        c = out[q]
        for x in chain:
            out[x] = c
    return "".join(out[1:])  # type: ignore[arg-type]


# --- serialization ---------------------------------------------------------
#
# Line format:   header "LEXPARSE <n> <ordering>", then one record per
# phrase: "E <symbol>" or "C <length> <source>".  Symbols outside printable
# ASCII (and backslash/space) are escaped as \xNN so the format stays
# line-oriented for arbitrary byte alphabets.

_HEADER = "LEXPARSE"


def _escape_symbol(c: str) -> str:
    if c == "\\":
        return "\\\\"
    if 0x21 <= ord(c) <= 0x7E:
        return c
    return f"\\x{ord(c):02x}"


def _unescape_symbols(s: str) -> list[str]:
    out = []
    i = 0
    while i < len(s):
        if s[i] == "\\":
            if s[i : i + 2] == "\\\\":
                out.append("\\")
                i += 2
            elif s[i + 1 : i + 2] == "x" and len(s) >= i + 4:
                out.append(chr(int(s[i + 2 : i + 4], 16)))
                i += 4
            else:
                raise MalformedParseError(f"bad escape in {s!r}")
        else:
            out.append(s[i])
            i += 1
    return out


def to_lines(parse: LexParse) -> str:
    """Serialize a parse to the line-record format."""
    ordering = "".join(_escape_symbol(c) for c in parse.ordering.symbols)
    lines = [f"{_HEADER} {parse.n} {ordering}"]
    for ph in parse.phrases:
        if isinstance(ph, Explicit):
            lines.append(f"E {_escape_symbol(ph.symbol)}")
        else:
            lines.append(f"C {ph.length} {ph.source}")
    return "\n".join(lines) + "\n"


def from_lines(serialized: str) -> LexParse:
    """Parse the line-record format back into a :class:`LexParse`."""
    lines = [ln for ln in serialized.splitlines() if ln.strip()]
    if not lines:
        raise MalformedParseError("empty serialization")
    head = lines[0].split()
    if len(head) != 3 or head[0] != _HEADER:
        raise MalformedParseError(f"bad header {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise MalformedParseError(f"bad length in header {lines[0]!r}") from None
    ordering = AlphabetOrdering(tuple(_unescape_symbols(head[2])))
    phrases: list[Phrase] = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "E" and len(parts) == 2:
            syms = _unescape_symbols(parts[1])
            if len(syms) != 1:
                raise MalformedParseError(f"bad explicit record {ln!r}")
            phrases.append(Explicit(syms[0]))
        elif parts[0] == "C" and len(parts) == 3:
            try:
                phrases.append(Copy(int(parts[1]), int(parts[2])))
            except ValueError:
                raise MalformedParseError(f"bad copy record {ln!r}") from None
        else:
            raise MalformedParseError(f"bad record {ln!r}")
    return LexParse(tuple(phrases), n, ordering)


def to_dict(parse: LexParse) -> dict:
    """JSON-ready dictionary form of a parse."""
    phrases: list[list] = []
    for ph in parse.phrases:
        if isinstance(ph, Explicit):
            phrases.append(["E", ph.symbol])
        else:
            phrases.append(["C", ph.length, ph.source])
    return {
        "format": "lexparse",
        "n": parse.n,
        "ordering": "".join(parse.ordering.symbols),
        "v": parse.v,
        "phrases": phrases,
    }


def from_dict(obj: dict) -> LexParse:
    """Inverse of :func:`to_dict`."""
    try:
        n = int(obj["n"])
        ordering = AlphabetOrdering.from_string(obj["ordering"])
        records = obj["phrases"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedParseError(f"bad parse object: {exc}") from None
    phrases: list[Phrase] = []
    for rec in records:
        if rec[0] == "E" and len(rec) == 2:
            phrases.append(Explicit(rec[1]))
        elif rec[0] == "C" and len(rec) == 3:
            phrases.append(Copy(int(rec[1]), int(rec[2])))
        else:
            raise MalformedParseError(f"bad phrase record {rec!r}")
    return LexParse(tuple(phrases), n, ordering)


def lz77_count(text: str) -> int:
    """Number of factors in the greedy self-referencing LZ77 parse.

    Each factor is the longest prefix of the remaining suffix that also
    occurs starting at a strictly earlier position (the source may overlap
    the factor); a symbol with no earlier occurrence forms a length-1 factor.
    """
    if not text:
        raise ValueError("text must be non-empty")
    n = len(text)
    count = 0
    i = 0
    while i < n:
        # Longest l with an occurrence of text[i:i+l] starting before i;
        # feasibility is monotone in l, so binary search.
        best = 0
        lo, hi = 1, n - i
        while lo <= hi:
            mid = (lo + hi) // 2
            if text.find(text[i : i + mid]) < i:
                best = mid
                lo = mid + 1
            else:
                hi = mid - 1
        i += max(1, best)
        count += 1
    return count
