"""Exact rational noncommutative polynomials, tagged and untagged.

All terms of a polynomial share one tag status.  Coefficients are
:class:`fractions.Fraction` and zero coefficients are never stored.
Right-tagged polynomials are ordered through their mirror image (deglex of
the reversed word), which keeps them consistent with the reversal trick used
to compute left ideals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Optional

from .words import (
    EMPTY,
    Alphabet,
    Deglex,
    Tag,
    Word,
    format_tagged_word,
)


class TagMismatchError(ValueError):
    pass


class IllegalMultiplicationError(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    pass


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


class Polynomial:
    __slots__ = ("_terms", "tag", "_hash")

    def __init__(self, terms: Optional[Mapping] = None, tag: Tag = Tag.NONE):
        clean = {}
        if terms:
            for word, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[tuple(word)] = coeff
        self._terms = clean
        self.tag = tag
        self._hash = None

    @classmethod
    def zero(cls, tag: Tag = Tag.NONE) -> "Polynomial":
        return cls({}, tag)

    @classmethod
    def monomial(cls, word: Word, coeff=1, tag: Tag = Tag.NONE) -> "Polynomial":
        return cls({tuple(word): coeff}, tag)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    @property
    def is_tagged(self) -> bool:
        return self.tag is not Tag.NONE

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.tag is other.tag and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            tag = self.tag if self._terms else None
            self._hash = hash((tag, frozenset(self._terms.items())))
        return self._hash

    def _check_tags(self, other: "Polynomial") -> Tag:
        if not self._terms:
            return other.tag
        if not other._terms:
            return self.tag
        if self.tag is not other.tag:
            raise TagMismatchError(f"cannot add {self.tag.value}-tagged and {other.tag.value}-tagged polynomials")
        return self.tag

    def __add__(self, other: "Polynomial") -> "Polynomial":
        tag = self._check_tags(other)
        terms = dict(self._terms)
        for word, c in other._terms.items():
            terms[word] = terms.get(word, 0) + c
        return Polynomial(terms, tag)

    def __neg__(self) -> "Polynomial":
        return Polynomial({w: -c for w, c in self._terms.items()}, self.tag)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, k) -> "Polynomial":
        k = Fraction(k)
        return Polynomial({w: c * k for w, c in self._terms.items()}, self.tag)

    def mul(self, k=1, u: Word = EMPTY, v: Word = EMPTY, tag: Optional[Tag] = None) -> "Polynomial":
        """Return ``k * u * self * v``.

        ``tag`` marks the cofactor that carries a tag: ``Tag.LEFT`` means ``u``
        is a tagged prefix, ``Tag.RIGHT`` that ``v`` is a tagged suffix.  Only an
        untagged polynomial can receive a tagged cofactor.
        """
        return mul_scalar_and_words(k, u, self, v, tag)

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def sorted_terms(self, order: Deglex) -> list:
        """``(word, coeff)`` pairs in descending order."""
        key = order.key_for(self.tag)
        return sorted(self._terms.items(), key=lambda wc: key(wc[0]), reverse=True)

    def leading(self, order: Deglex) -> "LeadingData":
        return leading(self, order)

    def monic(self, order: Deglex) -> "Polynomial":
        return make_monic(self, order)

    def reversed(self) -> "Polynomial":
        """Mirror image: every word reversed and the tag moved to the other side."""
        return Polynomial({w[::-1]: c for w, c in self._terms.items()}, self.tag.mirror)

    def with_tag(self, tag: Tag) -> "Polynomial":
        return Polynomial(self._terms, tag)

    def without_zero_symbol(self, zero_symbol: Optional[str]) -> "Polynomial":
        if zero_symbol is None:
            return self
        return Polynomial({w: c for w, c in self._terms.items() if zero_symbol not in w}, self.tag)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class LeadingData:
    term: Word
    coefficient: Fraction
    tag: Tag


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul_scalar_and_words(k, u: Word, p: Polynomial, v: Word, tag: Optional[Tag] = None) -> Polynomial:
    u, v = tuple(u), tuple(v)
    if tag is Tag.NONE:
        tag = None
    if p.tag is Tag.LEFT and (u or tag is not None):
        raise IllegalMultiplicationError("a left tag blocks multiplication on the left")
    if p.tag is Tag.RIGHT and (v or tag is not None):
        raise IllegalMultiplicationError("a right tag blocks multiplication on the right")
    k = Fraction(k)
    if not k:
        return Polynomial.zero(tag or p.tag)
    result_tag = tag or p.tag
    return Polynomial({u + w + v: c * k for w, c in p._terms.items()}, result_tag)


def leading(p: Polynomial, order: Deglex) -> LeadingData:
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    key = order.key_for(p.tag)
    word = max(p._terms, key=key)
    return LeadingData(word, p._terms[word], p.tag)


def make_monic(p: Polynomial, order: Deglex) -> Polynomial:
    lc = leading(p, order).coefficient
    if lc == 1:
        return p
    return p.scale(1 / lc)


def is_monic(p: Polynomial, order: Deglex) -> bool:
    return bool(p) and leading(p, order).coefficient == 1


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial, order: Optional[Deglex] = None) -> str:
    """Canonical text; terms in descending order when ``order`` is given."""
    if not p:
        return "0"
    if order is not None:
        items = p.sorted_terms(order)
    else:
        # stable fallback: length then string, descending
        items = sorted(p._terms.items(), key=lambda wc: (len(wc[0]), wc[0]), reverse=True)
    parts = []
    for idx, (word, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not word and p.tag is Tag.NONE:
            body = _format_coeff(mag)
        else:
            body = format_tagged_word(word, p.tag)
            if mag != 1:
                body = f"{_format_coeff(mag)} {body}"
        if idx == 0:
            parts.append(body if sign == "+" else f"- {body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TOKEN = re.compile(r"\S+")
_COEFF = re.compile(r"^[+-]?\d+(/\d+)?$")
_SIGNS = ("+", "-")


def parse_poly(text: str, alphabet: Alphabet) -> Polynomial:
    """Parse the whitespace-separated polynomial grammar.

    Terms containing the alphabet's zero symbol are dropped.
    """
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    if len(tokens) == 1 and tokens[0][0] == "0":
        return Polynomial.zero()
    parser = _PolyParser(tokens, alphabet, len(text))
    return parser.run()


class _PolyParser:
    def __init__(self, tokens, alphabet: Alphabet, end: int):
        self.tokens = tokens
        self.alphabet = alphabet
        self.end = end
        self.pos = 0
        self.terms: dict = {}
        self.tag: Optional[Tag] = None

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def col(self) -> int:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else self.end

    def run(self) -> Polynomial:
        sign = 1
        if self.peek() in _SIGNS:
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            if self.peek() is None:
                raise PolyParseError("expected a term", self.col())
            self.term(sign)
            tok = self.peek()
            if tok is None:
                break
            if tok not in _SIGNS:
                raise PolyParseError(f"expected '+' or '-' before {tok!r}", self.col())
            sign = -1 if tok == "-" else 1
            self.pos += 1
        return Polynomial(self.terms, self.tag or Tag.NONE)

    def term(self, sign: int) -> None:
        col = self.col()
        coeff = Fraction(1)
        tok = self.peek()
        if _COEFF.match(tok):
            nxt = self.tokens[self.pos + 1][0] if self.pos + 1 < len(self.tokens) else None
            if not (tok == "1" and nxt == "|>"):
                try:
                    coeff = Fraction(tok)
                except ZeroDivisionError:
                    raise PolyParseError("zero denominator", col) from None
                self.pos += 1
                if nxt is None or nxt in _SIGNS:
                    # bare constant: a multiple of the empty word
                    self.add(Tag.NONE, (), sign * coeff, col)
                    return
        tag, word = self.tagged_word()
        self.add(tag, word, sign * coeff, col)

    def tagged_word(self):
        tag = Tag.NONE
        if self.peek() == "<|":
            tag = Tag.LEFT
            self.pos += 1
        letters = []
        empty = False
        while self.peek() is not None and self.peek() not in _SIGNS + ("|>", "<|"):
            tok = self.peek()
            if tok == "1":
                if letters:
                    raise PolyParseError("'1' cannot appear inside a word", self.col())
                empty = True
                self.pos += 1
                break
            if tok not in self.alphabet:
                if _COEFF.match(tok):
                    raise PolyParseError(f"unexpected coefficient {tok!r}", self.col())
                raise PolyParseError(f"unknown generator {tok!r}", self.col())
            letters.append(tok)
            self.pos += 1
        if not letters and not empty:
            raise PolyParseError("expected a word", self.col())
        if self.peek() == "|>":
            if tag is Tag.LEFT:
                raise PolyParseError("a term cannot carry both tags", self.col())
            tag = Tag.RIGHT
            self.pos += 1
        if self.peek() == "<|":
            raise PolyParseError("misplaced '<|'", self.col())
        return tag, tuple(letters)

    def add(self, tag: Tag, word: Word, coeff: Fraction, col: int) -> None:
        if self.tag is not None and self.tag is not tag:
            raise PolyParseError("mixed tags within one polynomial", col)
        self.tag = tag
        if not word and not self.alphabet.allows_empty_word:
            raise PolyParseError("the empty word '1' is not allowed in a semigroup", col)
        zero = self.alphabet.zero_symbol
        if zero is not None and zero in word:
            return
        self.terms[word] = self.terms.get(word, 0) + coeff
