"""Brute-force checkers that avoid the tagged machinery.

Only untagged normal forms are used: finite multiplication tables give
Green's relations by literal ideal enumeration, and bounded one-sided ideal
membership is decided as an exact linear system over the rationals.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

import sympy

from .completion import check_local_confluence
from .poly import Polynomial
from .presentation import Presentation, enumerate_elements, word_normal_form
from .reduction import MixedSystem, reduce_fully
from .words import Word


class OracleError(RuntimeError):
    pass


class Membership(enum.Enum):
    YES = "yes"
    NO_WITHIN_BOUND = "no-within-bound"


@dataclass(frozen=True)
class FiniteSemigroupTable:
    elements: tuple
    product: dict
    zero_index: int = -1

    def __len__(self):
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.product[(i, j)]


@dataclass(frozen=True)
class OracleClasses:
    r_classes: list
    l_classes: list
    h_classes: list
    d_classes: list


def _require_complete(completed: MixedSystem) -> MixedSystem:
    if completed.tagged:
        raise OracleError("the oracle expects the completed defining relations only")
    if not check_local_confluence(completed)[0]:
        raise OracleError("the defining relations are not complete")
    return completed


def build_table(pres: Presentation, completed: MixedSystem, length_bound: int = 16) -> FiniteSemigroupTable:
    _require_complete(completed)
    enum_ = enumerate_elements(completed, length_bound)
    if enum_.truncated:
        raise OracleError(f"more elements than fit under length {length_bound}; not a finite table")
    elements = list(enum_.elements)
    zero_index = -1
    if pres.alphabet.zero_symbol:
        zero_index = len(elements)
        elements.append((pres.alphabet.zero_symbol,))
    index = {w: k for k, w in enumerate(elements)}
    product = {}
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i == zero_index or j == zero_index:
                product[(i, j)] = zero_index
                continue
            nf = word_normal_form(a + b, completed)
            product[(i, j)] = zero_index if nf is None else index[nf]
    return FiniteSemigroupTable(tuple(elements), product, zero_index)


def _classes_by(n: int, key) -> list:
    groups: dict = {}
    for i in range(n):
        groups.setdefault(key(i), []).append(i)
    return sorted(groups.values(), key=lambda c: c[0])


def green_by_enumeration(t: FiniteSemigroupTable) -> OracleClasses:
    n = len(t)
    right = [frozenset({x} | {t.mul(x, s) for s in range(n)}) for x in range(n)]
    left = [frozenset({x} | {t.mul(s, x) for s in range(n)}) for x in range(n)]
    r = _classes_by(n, lambda i: right[i])
    lc = _classes_by(n, lambda i: left[i])
    h = _classes_by(n, lambda i: (right[i], left[i]))
    # D as the join of R and L, by repeated merging
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for part in (r, lc):
            for cls in part:
                low = min(label[i] for i in cls)
                for i in cls:
                    if label[i] != low:
                        label[i] = low
                        changed = True
        for i in range(n):
            if label[label[i]] != label[i]:
                label[i] = label[label[i]]
                changed = True
    d = _classes_by(n, lambda i: label[i])
    return OracleClasses(r, lc, h, d)


def _words_up_to(letters: Sequence[str], length: int):
    for k in range(length + 1):
        yield from itertools.product(letters, repeat=k)


def member_by_linear_algebra(pres: Presentation, completed: MixedSystem, side: str,
                             generators: Sequence[Word], candidate: Polynomial,
                             degree_bound: int) -> Membership:
    """Is ``candidate`` a combination of ``NF(q v)`` (right) or ``NF(v q)`` (left)?"""
    _require_complete(completed)
    if side not in ("right", "left"):
        raise ValueError(f"bad side {side!r}")
    if candidate.is_tagged:
        raise ValueError("candidate must be untagged")
    if candidate.max_length() > degree_bound:
        raise ValueError("candidate degree exceeds the bound")
    target = reduce_fully(candidate, completed)
    if not target:
        return Membership.YES
    letters = pres.alphabet.nonzero_generators
    spanning = []
    for q in generators:
        q = tuple(q)
        for v in _words_up_to(letters, degree_bound - len(q)):
            word = q + v if side == "right" else v + q
            nf = reduce_fully(Polynomial.monomial(word), completed)
            if nf:
                spanning.append(nf)
    spanning = list(dict.fromkeys(spanning))
    if not spanning:
        return Membership.NO_WITHIN_BOUND
    monomials = sorted({w for p in spanning + [target] for w in p.terms})
    row = {w: k for k, w in enumerate(monomials)}
    a = sympy.zeros(len(monomials), len(spanning))
    for col, p in enumerate(spanning):
        for w, c in p.terms.items():
            a[row[w], col] = sympy.Rational(c.numerator, c.denominator)
    b = sympy.zeros(len(monomials), 1)
    for w, c in target.terms.items():
        b[row[w], 0] = sympy.Rational(c.numerator, c.denominator)
    if a.rank() == a.row_join(b).rank():
        return Membership.YES
    return Membership.NO_WITHIN_BOUND
