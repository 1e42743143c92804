"""The free Nijenhuis algebra product and its splitting operations.

The product of two basis words is computed by a junction recursion: all
factors except the last of the left word and the first of the right word
are carried along unchanged, and the two junction factors combine by
kind.  Two letter runs merge into one run, a letter run and a bracket
simply sit next to each other, and two brackets expand by the rule

    [u] . [v]  =  [[u] . v] + [u . [v]] - [[u . v]]

which terminates because every recursive call strictly lowers the total
bracket nesting.  The distinguished operator N wraps a combination in
one bracket; the identity

    N(a) . N(b)  =  N(N(a) . b) + N(a . N(b)) - N(N(a . b))

then holds by construction.  Splitting the product through N gives three
bilinear operations (and their sum):

    a < b = a . N(b)      a > b = N(a) . b      a o b = -N(a . b)

All operations extend bilinearly from words to combinations.  Word-level
products are memoized in a module cache; entries are pure values, so
concurrent repopulation is harmless.
"""

from __future__ import annotations

from enum import Enum

from .linalg import LinComb
from .words import Bracket, BracketedWord, Letters

__all__ = [
    "OpSymbol",
    "COORD_OPS",
    "product",
    "product_words",
    "operator_n",
    "derived_op",
]


class OpSymbol(Enum):
    """Names for the derived bilinear operations."""

    PREC = "prec"
    SUCC = "succ"
    BULLET = "bullet"
    STAR = "star"


#: The three operations that coordinatize quadratic relations.
COORD_OPS = (OpSymbol.PREC, OpSymbol.SUCC, OpSymbol.BULLET)

_PRODUCT_CACHE: dict[tuple[BracketedWord, BracketedWord], LinComb] = {}


def product_words(u: BracketedWord, v: BracketedWord) -> LinComb:
    """Product of two basis words as a linear combination of words."""
    key = (u, v)
    cached = _PRODUCT_CACHE.get(key)
    if cached is not None:
        return cached

    last, first = u.factors[-1], v.factors[0]
    if isinstance(last, Letters):
        if isinstance(first, Letters):
            junction = LinComb.from_word(BracketedWord((Letters(last.run + first.run),)))
        else:
            junction = LinComb.from_word(BracketedWord((last, first)))
    elif isinstance(first, Letters):
        junction = LinComb.from_word(BracketedWord((last, first)))
    else:
        left_alone = BracketedWord((last,))
        right_alone = BracketedWord((first,))
        junction = (
            operator_n(product_words(left_alone, first.inner))
            + operator_n(product_words(last.inner, right_alone))
            - operator_n(operator_n(product_words(last.inner, first.inner)))
        )

    prefix, suffix = u.factors[:-1], v.factors[1:]
    if prefix or suffix:
        # Junction words keep the junction end kinds, so reattaching the
        # untouched outer factors cannot break alternation.
        result = LinComb(
            {BracketedWord(prefix + w.factors + suffix): c for w, c in junction}
        )
    else:
        result = junction

    _PRODUCT_CACHE[key] = result
    return result


def product(a: LinComb, b: LinComb) -> LinComb:
    """Bilinear extension of the word product."""
    pairs = []
    for wu, cu in a:
        for wv, cv in b:
            scale = cu * cv
            for w, c in product_words(wu, wv):
                pairs.append((w, scale * c))
    return LinComb(pairs)


def operator_n(a: LinComb) -> LinComb:
    """Apply the distinguished operator: wrap each word in one bracket."""
    return LinComb(
        {BracketedWord((Bracket(w),)): c for w, c in a}
    )


def derived_op(op: OpSymbol, a: LinComb, b: LinComb) -> LinComb:
    """Apply one of the splitting operations, or their sum for STAR."""
    if op is OpSymbol.PREC:
        return product(a, operator_n(b))
    if op is OpSymbol.SUCC:
        return product(operator_n(a), b)
    if op is OpSymbol.BULLET:
        return -operator_n(product(a, b))
    if op is OpSymbol.STAR:
        return (
            product(a, operator_n(b))
            + product(operator_n(a), b)
            - operator_n(product(a, b))
        )
    raise ValueError(f"unknown operation: {op!r}")
