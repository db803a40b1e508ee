"""Matches between leading terms and their S-polynomials.

Case labels by tag status of the two members:

  tagged x tagged      (i)   m1 v = m2          f1 v - f2
  tagged x untagged    (ii)  m1 v = u m2        f1 v - u f2
                       (iii) m1 = u m2 v        f1 - u f2 v
  untagged x untagged  (iv)  u m1 = m2 v        u f1 - f2 v
                       (v)   m1 = u m2 v        f1 - u f2 v

In the tagged cases ``u`` is a tagged prefix.  Only minimal matches with a
nonempty shared piece are produced; disjoint redexes always resolve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .poly import Polynomial
from .reduction import MixedSystem, system_key
from .words import EMPTY, Deglex, Tag, Word, find_proper_overlaps, find_subword_occurrences

CASES = ("i", "ii", "iii", "iv", "v")


@dataclass(frozen=True)
class Match:
    case: str
    i: int
    j: int
    u: Word
    v: Word
    first: Polynomial = field(repr=False, compare=False)
    second: Polynomial = field(repr=False, compare=False)
    tag: Tag = Tag.NONE

    def multiples(self):
        """``((u1, v1), (u2, v2))`` with ``u1 m1 v1 == u2 m2 v2``."""
        u, v = self.u, self.v
        if self.case == "i":
            return (EMPTY, v), (EMPTY, EMPTY)
        if self.case == "ii":
            return (EMPTY, v), (u, EMPTY)
        if self.case == "iv":
            return (u, EMPTY), (EMPTY, v)
        return (EMPTY, EMPTY), (u, v)

    def word(self, order: Deglex, side: Tag = Tag.LEFT) -> Word:
        """The matched word ``u1 m1 v1`` (without the tag)."""
        key = system_key(order, side)
        m1 = max(self.first.terms, key=key)
        (u1, v1), _ = self.multiples()
        return u1 + m1 + v1

    def to_json(self) -> dict:
        return {"case": self.case, "i": self.i, "j": self.j,
                "u": " ".join(self.u), "v": " ".join(self.v)}


def _part(p: Polynomial, u: Word, v: Word, tag: Tag) -> Polynomial:
    cofactor = tag if (tag is not Tag.NONE and not p.is_tagged) else None
    return p.mul(1, u, v, cofactor)


def s_polynomial(m: Match) -> Polynomial:
    """Difference of the two multiples; the matched word cancels."""
    (u1, v1), (u2, v2) = m.multiples()
    return _part(m.first, u1, v1, m.tag) - _part(m.second, u2, v2, m.tag)


def find_matches(f1: Polynomial, f2: Polynomial, order: Deglex, i: int = 0, j: int = 1,
                 same: Optional[bool] = None) -> list:
    """All minimal matches between two (left-tagged or untagged) monic polynomials.

    ``same`` marks a self-pairing; it defaults to ``f1 is f2``.  Results are
    labelled with member indices ``i`` (for ``f1``) and ``j`` (for ``f2``).
    """
    if same is None:
        same = f1 is f2
    if f1.tag is Tag.RIGHT or f2.tag is Tag.RIGHT:
        raise ValueError("find_matches works on left-tagged data; mirror right-tagged systems first")
    m1 = max(f1.terms, key=order.key)
    m2 = max(f2.terms, key=order.key)
    out = []
    if f1.is_tagged and f2.is_tagged:
        if same:
            return out
        if m2[:len(m1)] == m1:
            out.append(Match("i", i, j, EMPTY, m2[len(m1):], f1, f2, Tag.LEFT))
        elif m1[:len(m2)] == m2:
            out.append(Match("i", j, i, EMPTY, m1[len(m2):], f2, f1, Tag.LEFT))
        return out
    if f1.is_tagged or f2.is_tagged:
        if f2.is_tagged:
            f1, f2, m1, m2, i, j = f2, f1, m2, m1, j, i
        # case ii: a suffix of m1 (possibly all of it) is a proper prefix of m2
        for k in range(len(m1)):
            shared = len(m1) - k
            if shared < len(m2) and m2[:shared] == m1[k:]:
                out.append(Match("ii", i, j, m1[:k], m2[shared:], f1, f2, Tag.LEFT))
        for u, v in find_subword_occurrences(m2, m1):
            out.append(Match("iii", i, j, u, v, f1, f2, Tag.LEFT))
        return out
    if same:
        for ov in find_proper_overlaps(m1, m1):
            if ov.kind == "overlap":
                # u m = m v with u = m[:offset], v = m[len(shared):]
                out.append(Match("iv", i, i, m1[:ov.offset], m1[len(ov.shared):], f1, f1))
        return out
    for a, b, ia, ib, ma, mb in ((f1, f2, i, j, m1, m2), (f2, f1, j, i, m2, m1)):
        # u m_a = m_b v: a suffix of m_b is a prefix of m_a
        for ov in find_proper_overlaps(mb, ma):
            if ov.kind == "overlap":
                out.append(Match("iv", ia, ib, mb[:ov.offset], ma[len(ov.shared):], a, b))
    if len(m2) <= len(m1):
        for u, v in find_subword_occurrences(m2, m1):
            out.append(Match("v", i, j, u, v, f1, f2))
    if len(m1) < len(m2):
        for u, v in find_subword_occurrences(m1, m2):
            out.append(Match("v", j, i, u, v, f2, f1))
    return out


def _sort_key(m: Match):
    return (min(m.i, m.j), max(m.i, m.j), CASES.index(m.case), len(m.u) + len(m.v), m.u, m.v, m.i)


def all_matches(F: MixedSystem) -> list:
    """Every match among members of a left-tagged system, in processing order."""
    if F.tag_side is Tag.RIGHT:
        raise ValueError("all_matches expects a left-tagged system")
    members = F.members
    out = []
    for a in range(len(members)):
        for b in range(a, len(members)):
            out.extend(find_matches(members[a], members[b], F.order, a, b, same=(a == b)))
    out.sort(key=_sort_key)
    return out
