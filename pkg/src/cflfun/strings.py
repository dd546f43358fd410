"""String-level vocabulary: alphabets, dictionary order, tracks and ♮-extensions.

A *word* is any sequence of symbols.  Plain ``str`` values are words over
single-character symbols; tuples of tokens are used when symbols are longer
(track symbols such as ``⟨0,1⟩``).  Output words are always ``str``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError

LEFT_END = "¢"
RIGHT_END = "$"
PAD = "#"
NATURAL = "♮"
LAMBDA = "λ"

ENDMARKERS = frozenset({LEFT_END, RIGHT_END})
RESERVED = frozenset({LEFT_END, RIGHT_END, PAD, NATURAL})

Word = Sequence[str]

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite set of symbols.

    The listing order is the symbol order used by :func:`dict_compare`.
    ``#`` and ``♮`` are only accepted when passed in ``reserved``; the
    endmarkers and ``λ`` are never accepted.
    """

    symbols: tuple[str, ...]

    def __init__(self, symbols: Iterable[str] = (), reserved: Iterable[str] = ()):
        syms = tuple(symbols)
        allowed = set(reserved)
        seen = set()
        for s in syms:
            if not isinstance(s, str) or not s:
                raise InputError(f"alphabet symbols must be nonempty strings, got {s!r}")
            if s in seen:
                raise InputError(f"duplicate symbol {s!r} in alphabet")
            if s in ENDMARKERS or s == LAMBDA:
                raise InputError(f"{s!r} is reserved and cannot be an alphabet member")
            if s in RESERVED and s not in allowed:
                raise InputError(f"reserved symbol {s!r} must be declared explicitly")
            seen.add(s)
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(syms)})

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({' '.join(self.symbols)!r})"

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise InputError(f"symbol {symbol!r} not in {self!r}") from None

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def check(self, word: Word) -> None:
        for s in word:
            if s not in self._index:
                raise InputError(f"symbol {s!r} of {render(word)!r} not in {self!r}")

    def extend(self, *extra: str) -> "Alphabet":
        """Return a new alphabet with ``extra`` appended (reserved symbols allowed)."""
        syms = self.symbols + tuple(s for s in extra if s not in self)
        return Alphabet(syms, reserved=RESERVED - ENDMARKERS)

    def words(self, max_len: int, min_len: int = 0) -> Iterator[Word]:
        """All words of length ``min_len..max_len``, shortest first."""
        for n in range(min_len, max_len + 1):
            for t in itertools.product(self.symbols, repeat=n):
                yield "".join(t) if self.single_char else t

    def count_words(self, max_len: int) -> int:
        k = len(self.symbols)
        return sum(k ** n for n in range(max_len + 1))


def alphabet(spec: str | Iterable[str], reserved: Iterable[str] = ()) -> Alphabet:
    """Shorthand: ``alphabet("01")`` splits a string into single characters."""
    return Alphabet(list(spec), reserved=reserved)


def render(word: Word) -> str:
    return word if isinstance(word, str) else "".join(word)


def dict_key(alpha: Alphabet):
    """Sort key realising dictionary order over ``alpha``.

    Python compares tuples element-wise with proper prefixes first, which is
    exactly dictionary order once symbols are replaced by their ranks.
    """
    return lambda word: tuple(alpha.index(s) for s in word)


def dict_compare(x: Word, y: Word, alpha: Alphabet) -> int:
    """Compare two words in dictionary order; returns -1, 0 or 1.

    >>> ab = alphabet("abce")
    >>> dict_compare("abbe", "abc", ab), dict_compare("ab", "aba", ab)
    (-1, -1)
    """
    alpha.check(x)
    alpha.check(y)
    for a, b in zip(x, y):
        if a != b:
            return LESS if alpha.index(a) < alpha.index(b) else GREATER
    if len(x) == len(y):
        return EQUAL
    return LESS if len(x) < len(y) else GREATER


def track_symbol(upper: str, lower: str) -> str:
    return f"⟨{upper},{lower}⟩"


def split_track_symbol(symbol: str) -> tuple[str, str]:
    if not (symbol.startswith("⟨") and symbol.endswith("⟩")) or "," not in symbol:
        raise InputError(f"{symbol!r} is not a track symbol")
    upper, lower = symbol[1:-1].split(",", 1)
    return upper, lower


def track_alphabet(upper: Alphabet, lower: Alphabet, pad: str = PAD) -> Alphabet:
    """Product alphabet for tracks, including the padded columns."""
    ups = list(upper) + [pad]
    lows = list(lower) + [pad]
    syms = [track_symbol(a, b) for a in ups for b in lows if not (a == pad and b == pad)]
    return Alphabet(syms)


@dataclass(frozen=True)
class TrackedString:
    upper: Word
    lower: Word
    rendered: tuple[str, ...]
    pad: str = PAD

    def __str__(self) -> str:
        return "".join(self.rendered)

    def __len__(self) -> int:
        return len(self.rendered)


def track_pair(x: Word, y: Word, pad: str = PAD) -> TrackedString:
    """Stack ``x`` over ``y`` column by column, right-padding the shorter with ``pad``."""
    for word in (x, y):
        if pad in word:
            raise InputError(f"pad symbol {pad!r} may not occur in tracked word {render(word)!r}")
    n = max(len(x), len(y))
    xs = list(x) + [pad] * (n - len(x))
    ys = list(y) + [pad] * (n - len(y))
    return TrackedString(x, y, tuple(track_symbol(a, b) for a, b in zip(xs, ys)), pad)


def untrack(rendered: Iterable[str], pad: str = PAD) -> tuple[str, str]:
    """Recover (upper, lower) from rendered track symbols, stripping trailing pads."""
    cols = [split_track_symbol(s) for s in rendered]
    upper = [a for a, _ in cols]
    lower = [b for _, b in cols]
    for part in (upper, lower):
        while part and part[-1] == pad:
            part.pop()
    return "".join(upper), "".join(lower)


def project_naturals(word: Word) -> Word:
    """Erase every ♮."""
    if isinstance(word, str):
        return word.replace(NATURAL, "")
    return tuple(s for s in word if s != NATURAL)


def extensions_of_length(x: Word, length: int) -> Iterator[Word]:
    """♮-extensions of ``x`` having exactly ``length`` symbols."""
    n = len(x)
    if length < n:
        return
    xs = list(x)
    for slots in itertools.combinations(range(length), n):
        out = [NATURAL] * length
        for pos, sym in zip(slots, xs):
            out[pos] = sym
        yield "".join(out) if isinstance(x, str) else tuple(out)


def natural_extensions(x: Word, max_len: int) -> set:
    """All ♮-extensions of ``x`` with at most ``max_len`` symbols."""
    if NATURAL in x:
        raise InputError(f"{NATURAL} already occurs in {render(x)!r}")
    out = set()
    for length in range(len(x), max_len + 1):
        out.update(extensions_of_length(x, length))
    return out
