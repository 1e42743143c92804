"""Bracketed words over a finite generator set.

A bracketed word is a nonempty alternating sequence of factors, where a
factor is either a run of generator letters or a bracket enclosing a
smaller bracketed word.  Words of this shape form the monomial basis of
the free Nijenhuis algebra built in :mod:`nijenhuis.algebra`; this module
only knows about their combinatorial structure: construction, structural
measures, concatenation, canonical serialization, a total order, and
enumeration by size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, Union

__all__ = [
    "WordError",
    "AlternationViolation",
    "EmptyInput",
    "BracketAdjacency",
    "GeneratorSymbol",
    "Letters",
    "Bracket",
    "Factor",
    "BracketedWord",
    "EndKind",
    "generators",
    "make_word",
    "letter_word",
    "depth",
    "breadth",
    "size",
    "letter_count",
    "head_tail",
    "standard_decomposition",
    "concat_words",
    "to_canonical",
    "from_canonical",
    "canonical_key",
    "canonical_compare",
    "words_of_size",
    "words_up_to_size",
]

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class WordError(ValueError):
    """Base class for malformed word constructions."""


class AlternationViolation(WordError):
    """Two adjacent factors of the same kind."""


class EmptyInput(WordError):
    """An empty run, an empty factor sequence, or an empty symbol name."""


class BracketAdjacency(WordError):
    """Concatenation would place two bracket factors side by side."""


@dataclass(frozen=True)
class GeneratorSymbol:
    """A named generator.  Names are nonempty identifiers."""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise EmptyInput("generator name is empty")
        if not _IDENT.match(self.name):
            raise WordError(f"invalid generator name: {self.name!r}")

    def __str__(self) -> str:
        return self.name


def generators(*names: str) -> tuple[GeneratorSymbol, ...]:
    """Convenience constructor for several symbols at once."""
    return tuple(GeneratorSymbol(n) for n in names)


@dataclass(frozen=True)
class Letters:
    """A factor holding a nonempty run of generator letters."""

    run: tuple[GeneratorSymbol, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "run", tuple(self.run))
        if not self.run:
            raise EmptyInput("letter run is empty")
        for sym in self.run:
            if not isinstance(sym, GeneratorSymbol):
                raise TypeError(f"not a generator symbol: {sym!r}")


@dataclass(frozen=True)
class Bracket:
    """A factor enclosing a smaller word."""

    inner: "BracketedWord"

    def __post_init__(self) -> None:
        if not isinstance(self.inner, BracketedWord):
            raise TypeError(f"bracket content must be a word: {self.inner!r}")


Factor = Union[Letters, Bracket]


@dataclass(frozen=True)
class BracketedWord:
    """A nonempty sequence of factors with alternating kinds.

    Adjacent factors never share a kind: letter runs are maximal and
    brackets never touch.  The constructor enforces this, so every
    reachable instance is well formed.
    """

    factors: tuple[Factor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise EmptyInput("word has no factors")
        previous: type | None = None
        for f in self.factors:
            if not isinstance(f, (Letters, Bracket)):
                raise TypeError(f"not a factor: {f!r}")
            if type(f) is previous:
                raise AlternationViolation(
                    "adjacent factors of the same kind in "
                    + "*".join(_factor_str(g) for g in self.factors)
                )
            previous = type(f)

    def __str__(self) -> str:
        return to_canonical(self)


class EndKind(IntEnum):
    """Kind of a word's first or last factor."""

    GENERATOR = 0
    BRACKET = 1


def make_word(factors: Iterable[Factor]) -> BracketedWord:
    """Build a word from a factor sequence, validating alternation."""
    return BracketedWord(tuple(factors))


def letter_word(*syms: GeneratorSymbol) -> BracketedWord:
    """The word consisting of one run of the given letters."""
    return BracketedWord((Letters(syms),))


def _kind(f: Factor) -> EndKind:
    return EndKind.GENERATOR if isinstance(f, Letters) else EndKind.BRACKET


def depth(w: BracketedWord) -> int:
    """Maximal bracket nesting over the factors of ``w``."""
    return max(_factor_depth(f) for f in w.factors)


def _factor_depth(f: Factor) -> int:
    if isinstance(f, Letters):
        return 0
    return depth(f.inner) + 1


def breadth(w: BracketedWord) -> int:
    """Number of factors of ``w``."""
    return len(w.factors)


def letter_count(w: BracketedWord) -> int:
    """Total number of generator letters, at all nesting levels."""
    total = 0
    for f in w.factors:
        total += len(f.run) if isinstance(f, Letters) else letter_count(f.inner)
    return total


def size(w: BracketedWord) -> int:
    """Letters plus bracket pairs, at all nesting levels."""
    total = 0
    for f in w.factors:
        if isinstance(f, Letters):
            total += len(f.run)
        else:
            total += 1 + size(f.inner)
    return total


def head_tail(w: BracketedWord) -> tuple[EndKind, EndKind]:
    """Kinds of the first and last factor."""
    return _kind(w.factors[0]), _kind(w.factors[-1])


def standard_decomposition(w: BracketedWord) -> tuple[Factor, ...]:
    """The factor sequence of ``w``; ``make_word`` inverts it."""
    return w.factors


def concat_words(u: BracketedWord, v: BracketedWord) -> BracketedWord:
    """Concatenate two words, merging a letter-letter junction.

    Raises :class:`BracketAdjacency` when both junction factors are
    brackets; that juxtaposition is not a basis word.
    """
    last, first = u.factors[-1], v.factors[0]
    if isinstance(last, Letters) and isinstance(first, Letters):
        merged = Letters(last.run + first.run)
        return BracketedWord(u.factors[:-1] + (merged,) + v.factors[1:])
    if isinstance(last, Bracket) and isinstance(first, Bracket):
        raise BracketAdjacency(f"cannot concatenate {u} with {v}")
    return BracketedWord(u.factors + v.factors)


def _factor_str(f: Factor) -> str:
    if isinstance(f, Letters):
        return "*".join(s.name for s in f.run)
    return "[" + to_canonical(f.inner) + "]"


def to_canonical(w: BracketedWord) -> str:
    """Serialize: letters joined by ``*``, brackets as ``[...]``."""
    return "*".join(_factor_str(f) for f in w.factors)


def from_canonical(text: str) -> BracketedWord:
    """Parse the exact output format of :func:`to_canonical`.

    This reads single words only; it is not the expression parser.
    """
    word, pos = _read_word(text, 0, 0)
    if pos != len(text):
        raise WordError(f"trailing input at position {pos}: {text[pos:]!r}")
    return word


def _read_word(text: str, pos: int, nesting: int) -> tuple[BracketedWord, int]:
    factors: list[Factor] = []
    run: list[GeneratorSymbol] = []
    expect_item = True
    while True:
        if expect_item:
            if pos < len(text) and text[pos] == "[":
                if run:
                    factors.append(Letters(tuple(run)))
                    run = []
                inner, pos = _read_word(text, pos + 1, nesting + 1)
                if pos >= len(text) or text[pos] != "]":
                    raise WordError(f"unclosed bracket at position {pos}")
                pos += 1
                factors.append(Bracket(inner))
            else:
                m = re.match(r"[A-Za-z][A-Za-z0-9_]*", text[pos:])
                if not m:
                    raise WordError(f"expected a letter or bracket at position {pos}")
                run.append(GeneratorSymbol(m.group()))
                pos += m.end()
            expect_item = False
        elif pos < len(text) and text[pos] == "*":
            pos += 1
            expect_item = True
        else:
            break
    if run:
        factors.append(Letters(tuple(run)))
    if nesting == 0 and pos < len(text) and text[pos] == "]":
        raise WordError(f"unmatched closing bracket at position {pos}")
    return BracketedWord(tuple(factors)), pos


_KEY_CACHE: dict[BracketedWord, tuple[int, int, str]] = {}


def canonical_key(w: BracketedWord) -> tuple[int, int, str]:
    """Sort key realizing the canonical order on words.

    Words compare first by total letter count, then by depth, then
    lexicographically on the canonical serialization.
    """
    key = _KEY_CACHE.get(w)
    if key is None:
        key = (letter_count(w), depth(w), to_canonical(w))
        _KEY_CACHE[w] = key
    return key


def canonical_compare(u: BracketedWord, v: BracketedWord) -> int:
    """Three-way comparison in the canonical order: -1, 0, or 1."""
    ku, kv = canonical_key(u), canonical_key(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


@lru_cache(maxsize=None)
def words_of_size(alphabet: tuple[GeneratorSymbol, ...], n: int) -> tuple[BracketedWord, ...]:
    """All words of exact size ``n`` over ``alphabet``, canonically ordered."""
    if n <= 0:
        return ()
    found: list[BracketedWord] = []

    def extend(prefix: list[Factor], prev_letters: bool | None, remaining: int) -> None:
        if remaining == 0:
            found.append(BracketedWord(tuple(prefix)))
            return
        if prev_letters is not True:
            for k in range(1, remaining + 1):
                for run in _cartesian(alphabet, repeat=k):
                    prefix.append(Letters(run))
                    extend(prefix, True, remaining - k)
                    prefix.pop()
        if prev_letters is not False:
            # A bracket factor of size k wraps an inner word of size k - 1.
            for k in range(2, remaining + 1):
                for inner in words_of_size(alphabet, k - 1):
                    prefix.append(Bracket(inner))
                    extend(prefix, False, remaining - k)
                    prefix.pop()

    extend([], None, n)
    return tuple(sorted(found, key=canonical_key))


@lru_cache(maxsize=None)
def words_up_to_size(
    alphabet: tuple[GeneratorSymbol, ...], max_size: int
) -> tuple[BracketedWord, ...]:
    """All words of size at most ``max_size``, canonically ordered."""
    pool: list[BracketedWord] = []
    for n in range(1, max_size + 1):
        pool.extend(words_of_size(alphabet, n))
    return tuple(sorted(pool, key=canonical_key))


def iter_symbols(w: BracketedWord) -> Iterator[GeneratorSymbol]:
    """Yield every generator occurrence in ``w``, left to right, outside in."""
    for f in w.factors:
        if isinstance(f, Letters):
            yield from f.run
        else:
            yield from iter_symbols(f.inner)
