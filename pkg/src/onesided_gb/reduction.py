"""Mixed systems and the reduction relation they define.

Tagged rules apply only at the tagged end of a term; untagged rules apply
anywhere in the word.  The engine works on left-tagged data; a right-tagged
system is handled by mirroring inputs and rules, reducing, and mirroring back.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .poly import Polynomial, TagMismatchError, format_poly
from .words import Deglex, Tag, Word, format_tagged_word, format_word


class InvalidSystemError(ValueError):
    pass


class StepLimitExceeded(RuntimeError):
    pass


def system_key(order: Deglex, side: Tag):
    """Word order used inside a system whose tags sit on ``side``."""
    return order.mirror_key if side is Tag.RIGHT else order.key


@dataclass(frozen=True)
class MixedSystem:
    tagged: tuple
    untagged: tuple
    order: Deglex
    tag_side: Tag = Tag.LEFT

    def __post_init__(self):
        object.__setattr__(self, "tagged", tuple(self.tagged))
        object.__setattr__(self, "untagged", tuple(self.untagged))
        if self.tag_side is Tag.NONE:
            raise InvalidSystemError("tag_side must be LEFT or RIGHT")
        key = system_key(self.order, self.tag_side)
        seen = set()
        for p in self.tagged + self.untagged:
            if not isinstance(p, Polynomial) or not p:
                raise InvalidSystemError("system members must be nonzero polynomials")
            if p in seen:
                raise InvalidSystemError(f"duplicate member {format_poly(p)}")
            seen.add(p)
            if p.terms[max(p.terms, key=key)] != 1:
                raise InvalidSystemError(f"member {format_poly(p)} is not monic")
        for p in self.tagged:
            if p.tag is not self.tag_side:
                raise InvalidSystemError(f"tagged member {format_poly(p)} does not carry the system's tag")
        for p in self.untagged:
            if p.is_tagged:
                raise InvalidSystemError(f"untagged member {format_poly(p)} carries a tag")

    @classmethod
    def build(cls, polys: Iterable[Polynomial], order: Deglex, tag_side: Tag = Tag.LEFT) -> "MixedSystem":
        """Normalise: drop zeros, make monic, drop duplicates, split by tag."""
        key = system_key(order, tag_side)
        tagged, untagged, seen = [], [], set()
        for p in polys:
            if not p:
                continue
            lc = p.terms[max(p.terms, key=key)]
            if lc != 1:
                p = p.scale(1 / lc)
            if p in seen:
                continue
            seen.add(p)
            if p.is_tagged:
                if p.tag is not tag_side:
                    raise TagMismatchError(f"{format_poly(p)} is not {tag_side.value}-tagged")
                tagged.append(p)
            else:
                untagged.append(p)
        return cls(tuple(tagged), tuple(untagged), order, tag_side)

    @property
    def members(self) -> tuple:
        return self.tagged + self.untagged

    def __len__(self):
        return len(self.tagged) + len(self.untagged)

    @cached_property
    def leading_words(self) -> tuple:
        key = system_key(self.order, self.tag_side)
        return tuple(max(p.terms, key=key) for p in self.members)

    @cached_property
    def mirrored(self) -> "MixedSystem":
        return MixedSystem(
            tuple(p.reversed() for p in self.tagged),
            tuple(p.reversed() for p in self.untagged),
            self.order,
            self.tag_side.mirror,
        )

    def key(self, word: Word):
        return system_key(self.order, self.tag_side)(word)

    def leading_word(self, p: Polynomial) -> Word:
        return max(p.terms, key=system_key(self.order, self.tag_side))

    def replace(self, tagged=None, untagged=None) -> "MixedSystem":
        return MixedSystem(
            self.tagged if tagged is None else tuple(tagged),
            self.untagged if untagged is None else tuple(untagged),
            self.order,
            self.tag_side,
        )

    def format(self) -> list:
        return [format_poly(p, _display_order(self.order, p, self.tag_side)) for p in self.members]


class _MirrorOrder:
    # deglex applied to reversed words, used to print untagged members of
    # right-tagged systems in their system order
    def __init__(self, order: Deglex):
        self._order = order

    def key_for(self, tag):
        return self._order.mirror_key


def _display_order(order: Deglex, p: Polynomial, side: Tag):
    if side is Tag.RIGHT and not p.is_tagged:
        return _MirrorOrder(order)
    return order


def format_member(p: Polynomial, system: MixedSystem) -> str:
    return format_poly(p, _display_order(system.order, p, system.tag_side))


@dataclass(frozen=True)
class ReductionStep:
    """One step ``f -> f - k * u * rule * v``.

    ``cofactor_tag`` is LEFT when ``u`` is a tagged prefix, RIGHT when ``v`` is
    a tagged suffix, NONE otherwise.
    """

    rule: int
    k: Fraction
    u: Word
    v: Word
    cofactor_tag: Tag = Tag.NONE

    def mirrored(self) -> "ReductionStep":
        return ReductionStep(self.rule, self.k, self.v[::-1], self.u[::-1], self.cofactor_tag.mirror)

    def subtracted(self, system: MixedSystem) -> Polynomial:
        rule = system.members[self.rule]
        return rule.mul(self.k, self.u, self.v, self.cofactor_tag)

    def to_json(self) -> dict:
        k = self.k
        if self.cofactor_tag is Tag.LEFT:
            u = "<|" if not self.u else format_tagged_word(self.u, Tag.LEFT)
        else:
            u = format_word(self.u)
        if self.cofactor_tag is Tag.RIGHT:
            v = "|>" if not self.v else format_tagged_word(self.v, Tag.RIGHT)
        else:
            v = format_word(self.v)
        return {"rule": self.rule, "k": f"{k.numerator}/{k.denominator}", "u": u, "v": v}


def _check_input(f: Polynomial, F: MixedSystem) -> None:
    if f.is_tagged and f.tag is not F.tag_side:
        raise TagMismatchError(f"cannot reduce a {f.tag.value}-tagged polynomial by a {F.tag_side.value}-tagged system")


def _candidates(f: Polynomial, F: MixedSystem, rule: Optional[int], first_only: bool):
    """Yield ``(word, rule_index, offset)`` in deterministic strategy order (left engine)."""
    lts = F.leading_words
    n_tagged = len(F.tagged)
    for word, _ in f.sorted_terms(F.order):
        for idx, lt in enumerate(lts):
            if rule is not None and idx != rule:
                continue
            if idx < n_tagged:
                if not f.is_tagged:
                    continue
                if word[:len(lt)] == lt:
                    yield word, idx, 0
                    if first_only:
                        return
                continue
            m = len(lt)
            for k in range(len(word) - m + 1):
                if word[k:k + m] == lt:
                    yield word, idx, k
                    if first_only:
                        return


def _apply(f: Polynomial, F: MixedSystem, word: Word, idx: int, offset: int):
    lt = F.leading_words[idx]
    k = f.terms[word]
    u, v = word[:offset], word[offset + len(lt):]
    cofactor_tag = Tag.LEFT if (f.is_tagged and idx >= len(F.tagged)) else Tag.NONE
    step = ReductionStep(idx, k, u, v, cofactor_tag)
    return f - step.subtracted(F), step


def _reduce_once_left(f, F, rule, rng):
    if rng is None:
        for word, idx, offset in _candidates(f, F, rule, first_only=True):
            return _apply(f, F, word, idx, offset)
        return None
    cands = list(_candidates(f, F, rule, first_only=False))
    if not cands:
        return None
    return _apply(f, F, *rng.choice(cands))


def reduce_once(f: Polynomial, F: MixedSystem, *, rule: Optional[int] = None,
                rng: Optional[random.Random] = None):
    """One reduction step, or ``None`` if ``f`` is irreducible.

    ``rule`` restricts the step to one member (by index into ``F.members``);
    ``rng`` switches from the fixed strategy (highest term, lowest rule index,
    leftmost occurrence) to a uniformly random choice among all redexes.
    """
    _check_input(f, F)
    if F.tag_side is Tag.RIGHT:
        res = _reduce_once_left(f.reversed(), F.mirrored, rule, rng)
        if res is None:
            return None
        g, step = res
        return g.reversed(), step.mirrored()
    return _reduce_once_left(f, F, rule, rng)


def _first_redex(word: Word, F: MixedSystem, tagged_input: bool):
    n_tagged = len(F.tagged)
    for idx, lt in enumerate(F.leading_words):
        m = len(lt)
        if idx < n_tagged:
            if tagged_input and word[:m] == lt:
                return idx, 0
            continue
        for k in range(len(word) - m + 1):
            if word[k:k + m] == lt:
                return idx, k
    return None


def _neg_key(ranks):
    return lambda w: (-len(w), tuple(-ranks[g] for g in w))


def _sweep(f: Polynomial, F: MixedSystem, max_steps, trace):
    """Fixed-strategy normal form in one descending pass over the terms.

    Once the highest remaining term is irreducible it stays so (later steps
    only create smaller words), so it can be moved to the result directly.
    This performs exactly the steps of repeated :func:`reduce_once`.
    """
    ranks = {g: i for i, g in enumerate(F.order.alphabet.generators)}
    neg = _neg_key(ranks)
    terms = dict(f.terms)
    heap = [(neg(w), w) for w in terms]
    heapq.heapify(heap)
    queued = set(terms)
    done, steps, count = {}, [], 0
    tagged_input = f.is_tagged
    n_tagged = len(F.tagged)
    while heap:
        _, word = heapq.heappop(heap)
        queued.discard(word)
        c = terms.pop(word, None)
        if c is None:
            continue
        hit = _first_redex(word, F, tagged_input)
        if hit is None:
            done[word] = c
            continue
        idx, offset = hit
        count += 1
        if max_steps is not None and count > max_steps:
            raise StepLimitExceeded(f"no normal form within {max_steps} steps")
        lt = F.leading_words[idx]
        u, v = word[:offset], word[offset + len(lt):]
        for w2, c2 in F.members[idx].terms.items():
            if w2 == lt:
                continue
            nw = u + w2 + v
            val = terms.get(nw, 0) - c * c2
            if val:
                terms[nw] = val
                if nw not in queued:
                    queued.add(nw)
                    heapq.heappush(heap, (neg(nw), nw))
            else:
                terms.pop(nw, None)
        if trace:
            cofactor = Tag.LEFT if (tagged_input and idx >= n_tagged) else Tag.NONE
            steps.append(ReductionStep(idx, c, u, v, cofactor))
    return Polynomial(done, f.tag), steps


def normal_form(f: Polynomial, F: MixedSystem, *, rng: Optional[random.Random] = None,
                max_steps: Optional[int] = None, trace: bool = True):
    """Reduce ``f`` until irreducible; returns ``(normal_form, steps)``."""
    _check_input(f, F)
    mirror = F.tag_side is Tag.RIGHT
    if mirror:
        f, F = f.reversed(), F.mirrored
    if rng is None:
        f, steps = _sweep(f, F, max_steps, trace)
    else:
        steps = []
        count = 0
        while f:
            res = _reduce_once_left(f, F, None, rng)
            if res is None:
                break
            f, step = res
            count += 1
            if max_steps is not None and count > max_steps:
                raise StepLimitExceeded(f"no normal form within {max_steps} steps")
            if trace:
                steps.append(step)
    if mirror:
        f = f.reversed()
        steps = [s.mirrored() for s in steps]
    return f, steps


def reduce_fully(f: Polynomial, F: MixedSystem) -> Polynomial:
    return normal_form(f, F, trace=False)[0]


def reduces_to_zero(f: Polynomial, F: MixedSystem) -> bool:
    return not reduce_fully(f, F)


def untagged_only(F: MixedSystem) -> MixedSystem:
    return F.replace(tagged=())

