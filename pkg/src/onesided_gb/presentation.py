"""Presentation files, relation-to-polynomial translation and element enumeration.

File format (``#`` starts a comment)::

    kind semigroup            # or monoid / algebra
    gens e s                  # listing order is deglex precedence
    zero o                    # optional
    rel e e = e               # words space separated, "1" is the empty word
    poly x x y - 3 y x        # algebra kind; tagged terms allowed here
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .poly import Polynomial, PolyParseError, format_poly, parse_poly
from .reduction import MixedSystem
from .words import Alphabet, AlphabetError, Deglex, Tag, Word, format_word, parse_word

log = logging.getLogger(__name__)

KINDS = ("semigroup", "monoid", "algebra")


class PresentationError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Presentation:
    kind: str
    alphabet: Alphabet
    relations: tuple = ()
    polynomials: tuple = ()

    @property
    def order(self) -> Deglex:
        return Deglex(self.alphabet)

    @property
    def untagged_polynomials(self) -> tuple:
        return tuple(p for p in self.polynomials if not p.is_tagged)

    @property
    def tagged_polynomials(self) -> tuple:
        return tuple(p for p in self.polynomials if p.is_tagged)

    def parse_word(self, text: str) -> Word:
        return parse_word(text, self.alphabet)


@dataclass(frozen=True)
class ElementEnumeration:
    elements: tuple
    truncated: bool
    length_bound: int

    def __len__(self):
        return len(self.elements)

    def index(self, word: Word) -> int:
        return self.elements.index(tuple(word))


def parse_presentation(text: str) -> Presentation:
    kind = None
    gens = None
    zero = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        head, _, rest = stripped.partition(" ")
        rest_col = body.index(stripped) + len(head) + 2
        if head == "kind":
            if kind is not None:
                raise PresentationError("duplicate 'kind' line", lineno)
            kind = rest.strip()
            if kind not in KINDS:
                raise PresentationError(f"unknown kind {kind!r}", lineno, rest_col)
        elif head == "gens":
            if kind is None:
                raise PresentationError("'gens' must follow 'kind'", lineno)
            if gens is not None:
                raise PresentationError("duplicate 'gens' line", lineno)
            gens = tuple(rest.split())
        elif head == "zero":
            if gens is None:
                raise PresentationError("'zero' must follow 'gens'", lineno)
            zero = rest.strip()
        elif head in ("rel", "poly"):
            if gens is None:
                raise PresentationError(f"'{head}' before 'gens'", lineno)
            raw.append((head, rest, lineno, rest_col))
        else:
            raise PresentationError(f"unknown directive {head!r}", lineno, 1)
    if kind is None or gens is None:
        raise PresentationError("missing 'kind' or 'gens' line")
    try:
        alphabet = Alphabet(gens, allows_empty_word=(kind != "semigroup"), zero_symbol=zero or None)
    except AlphabetError as exc:
        raise PresentationError(str(exc)) from None

    relations, polys = [], []
    for head, rest, lineno, col in raw:
        if head == "rel":
            if kind == "algebra":
                raise PresentationError("algebra presentations use 'poly' lines", lineno)
            lhs, eq, rhs = rest.partition("=")
            if not eq or "=" in rhs:
                raise PresentationError("a relation needs exactly one '='", lineno, col)
            try:
                relations.append((_rel_word(lhs, alphabet), _rel_word(rhs, alphabet)))
            except AlphabetError as exc:
                raise PresentationError(str(exc), lineno, col) from None
        else:
            if kind != "algebra":
                raise PresentationError("'poly' lines need kind algebra", lineno)
            try:
                polys.append(parse_poly(rest, alphabet))
            except PolyParseError as exc:
                raise PresentationError(str(exc), lineno, col + exc.position) from None
    return Presentation(kind, alphabet, tuple(relations), tuple(polys))


def _rel_word(text: str, alphabet: Alphabet) -> Word:
    tokens = text.split()
    if not tokens:
        raise AlphabetError("empty side in relation; use '1' for the empty word")
    if tokens == ["1"]:
        tokens = []
    elif "1" in tokens:
        raise AlphabetError("'1' cannot appear inside a word")
    return alphabet.check_word(tokens)


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def format_presentation(pres: Presentation) -> str:
    lines = [f"kind {pres.kind}", "gens " + " ".join(pres.alphabet.generators)]
    if pres.alphabet.zero_symbol:
        lines.append(f"zero {pres.alphabet.zero_symbol}")
    for lhs, rhs in pres.relations:
        lines.append(f"rel {format_word(lhs)} = {format_word(rhs)}")
    for p in pres.polynomials:
        lines.append("poly " + format_poly(p, pres.order))
    return "\n".join(lines) + "\n"


def relations_to_polynomials(pres: Presentation) -> list:
    """One monic polynomial ``l - r`` per nondegenerate relation, larger word leading."""
    if pres.kind == "algebra":
        return [p for p in pres.untagged_polynomials if p]
    order = pres.order
    zero = pres.alphabet.zero_symbol
    out = []
    for lhs, rhs in pres.relations:
        if order.key(lhs) < order.key(rhs):
            lhs, rhs = rhs, lhs
        p = (Polynomial.monomial(lhs) - Polynomial.monomial(rhs)).without_zero_symbol(zero)
        if not p:
            if lhs == rhs:
                log.warning("dropping degenerate relation %s = %s", format_word(lhs), format_word(rhs))
            continue
        out.append(p.monic(order))
    return out


def reversed_presentation(pres: Presentation) -> Presentation:
    return Presentation(
        pres.kind,
        pres.alphabet,
        tuple((lhs[::-1], rhs[::-1]) for lhs, rhs in pres.relations),
        tuple(p.reversed() for p in pres.polynomials),
    )


def untagged_system(pres: Presentation) -> MixedSystem:
    return MixedSystem.build(relations_to_polynomials(pres), pres.order, Tag.LEFT)


def _irreducible(word: Word, leading: list) -> bool:
    for lt in leading:
        m = len(lt)
        for k in range(len(word) - m + 1):
            if word[k:k + m] == lt:
                return False
    return True


def enumerate_elements(basis: MixedSystem, length_bound: int) -> ElementEnumeration:
    """Irreducible words of length at most ``length_bound`` in ascending deglex order.

    ``basis`` must be a completed untagged system.  The run is flagged as
    truncated when some irreducible word of maximal length still extends to an
    irreducible word one letter longer.
    """
    if basis.tagged:
        raise ValueError("element enumeration needs a purely untagged system")
    if length_bound < 1:
        raise ValueError("length_bound must be positive")
    if basis.tag_side is Tag.RIGHT:
        basis = basis.mirrored
    alphabet = basis.order.alphabet
    leading = [lt for lt in basis.leading_words]
    letters = alphabet.nonzero_generators
    found = []
    level = [()]
    if alphabet.allows_empty_word:
        if _irreducible((), leading):
            found.append(())
        else:
            level = []
    truncated = False
    for length in range(1, length_bound + 2):
        nxt = []
        for w in level:
            for g in letters:
                cand = w + (g,)
                # w is irreducible, so only suffixes of cand can match
                if all(cand[len(cand) - len(lt):] != lt for lt in leading if len(lt) <= len(cand)):
                    nxt.append(cand)
        if length > length_bound:
            truncated = bool(nxt)
            break
        nxt.sort(key=basis.order.key)
        found.extend(nxt)
        level = nxt
        if not level:
            break
    return ElementEnumeration(tuple(found), truncated, length_bound)


def word_normal_form(word: Word, basis: MixedSystem) -> Optional[Word]:
    """Normal form of a word under a completed semigroup system, ``None`` for zero.

    Raises ``ValueError`` when the normal form is not a single monomial, which
    only happens for genuine algebra presentations.
    """
    from .reduction import reduce_fully

    nf = reduce_fully(Polynomial.monomial(word), basis.replace(tagged=()))
    if not nf:
        return None
    if len(nf) != 1:
        raise ValueError(f"normal form of {format_word(word)} is not a word")
    (w, c), = nf.terms.items()
    if c != 1:
        raise ValueError(f"normal form of {format_word(word)} has coefficient {c}")
    return w
