"""Words over a finite alphabet, tags, and the deglex order.

A word is a plain tuple of generator names; the empty tuple is the
identity of the free monoid.  Tags are carried as a separate flag on
polynomials rather than as letters, so no word ever contains a tag.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

Word = tuple  # tuple[str, ...]

EMPTY: Word = ()

_RESERVED = ("<|", "|>", "+", "-", "*", "/", "=")
_NUMBER = re.compile(r"^\d+$")


class Tag(enum.Enum):
    """Tag status of a term or polynomial.

    ``LEFT`` models the tagged terms that block left multiplication (the
    setting for right ideals); ``RIGHT`` blocks right multiplication.
    """

    NONE = "none"
    LEFT = "left"
    RIGHT = "right"

    @property
    def mirror(self) -> "Tag":
        return {Tag.NONE: Tag.NONE, Tag.LEFT: Tag.RIGHT, Tag.RIGHT: Tag.LEFT}[self]


class AlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    generators: tuple
    allows_empty_word: bool = False
    zero_symbol: Optional[str] = None
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise AlphabetError("alphabet needs at least one generator")
        seen = set()
        for g in gens:
            if not isinstance(g, str) or not g or any(c.isspace() for c in g):
                raise AlphabetError(f"invalid generator name {g!r}")
            if g == "1" or _NUMBER.match(g) or any(r in g for r in _RESERVED):
                raise AlphabetError(f"generator name {g!r} uses a reserved token")
            if g in seen:
                raise AlphabetError(f"duplicate generator {g!r}")
            seen.add(g)
        if self.zero_symbol is not None and self.zero_symbol not in seen:
            raise AlphabetError(f"zero symbol {self.zero_symbol!r} is not a generator")
        object.__setattr__(self, "_rank", {g: i for i, g in enumerate(gens)})

    def rank(self, g: str) -> int:
        return self._rank[g]

    def __contains__(self, g) -> bool:
        return g in self._rank

    @property
    def nonzero_generators(self) -> tuple:
        return tuple(g for g in self.generators if g != self.zero_symbol)

    def check_word(self, word: Sequence[str]) -> Word:
        word = tuple(word)
        for g in word:
            if g not in self._rank:
                raise AlphabetError(f"unknown generator {g!r}")
        if not word and not self.allows_empty_word:
            raise AlphabetError("the empty word is not allowed in a semigroup")
        return word


class Deglex:
    """Length first, then lexicographic by generator listing order."""

    kind = "deglex"

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def key(self, word: Word) -> tuple:
        rank = self.alphabet._rank
        return (len(word), tuple(rank[g] for g in word))

    def mirror_key(self, word: Word) -> tuple:
        """Key of the reversed word; the order used for right-tagged data."""
        return self.key(word[::-1])

    def key_for(self, tag: Tag):
        return self.mirror_key if tag is Tag.RIGHT else self.key

    def __eq__(self, other):
        return isinstance(other, Deglex) and other.alphabet == self.alphabet

    def __hash__(self):
        return hash(("deglex", self.alphabet))

    def __repr__(self):
        return f"Deglex({' < '.join(self.alphabet.generators)})"


def compare(order: Deglex, a: Word, b: Word) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def find_subword_occurrences(pattern: Word, host: Word) -> list:
    """All ``(prefix, suffix)`` with ``host == prefix + pattern + suffix``, left to right."""
    n, m = len(host), len(pattern)
    out = []
    for k in range(n - m + 1):
        if host[k:k + m] == pattern:
            out.append((host[:k], host[k + m:]))
    return out


class Overlap(NamedTuple):
    """Descriptor returned by :func:`find_proper_overlaps`.

    For ``kind == "overlap"``: ``a == a[:offset] + shared`` and
    ``b == shared + b[len(shared):]``. For ``kind == "contains"``: ``b`` occurs
    in ``a`` starting at ``offset`` and ``shared == b``.
    """

    kind: str
    offset: int
    shared: Word


def find_proper_overlaps(a: Word, b: Word) -> list:
    out = []
    # nonempty proper suffix of a equal to a proper prefix of b
    for length in range(1, min(len(a), len(b))):
        if a[len(a) - length:] == b[:length]:
            out.append(Overlap("overlap", len(a) - length, b[:length]))
    for k in range(len(a) - len(b) + 1):
        if a[k:k + len(b)] == b:
            out.append(Overlap("contains", k, b))
    return out


def reverse(word: Word) -> Word:
    return tuple(reversed(word))


def format_word(word: Word) -> str:
    return " ".join(word) if word else "1"


def format_tagged_word(word: Word, tag: Tag) -> str:
    if tag is Tag.LEFT:
        return "<| " + format_word(word)
    if tag is Tag.RIGHT:
        return format_word(word) + " |>"
    return format_word(word)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    tokens = text.split()
    if tokens == ["1"]:
        return alphabet.check_word(())
    if not tokens:
        raise AlphabetError("empty word text; use '1' for the identity")
    return alphabet.check_word(tokens)
