"""One-sided ideal bases per element and Green's relations.

The right ideal of ``x`` is described by completing ``({<| x}, P)``.  The left
ideal uses the mirror construction: the system ``({x |>}, P)`` is completed
with right tags, which the engine carries out on reversed words.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .completion import COMPLETE, CompletionLimits, complete
from .poly import Polynomial
from .presentation import (
    ElementEnumeration,
    Presentation,
    enumerate_elements,
    relations_to_polynomials,
)
from .reduction import MixedSystem, format_member, reduces_to_zero
from .words import Tag, Word, format_word

log = logging.getLogger(__name__)

RIGHT = "right"
LEFT = "left"
SIDES = (RIGHT, LEFT)

EQUAL = "equal"
DIFFERENT = "different"
UNKNOWN = "unknown"

_TAG_FOR_SIDE = {RIGHT: Tag.LEFT, LEFT: Tag.RIGHT}


class IncompletePresentationError(RuntimeError):
    """The defining relations did not complete within the limits."""


class SideMismatchError(ValueError):
    pass


def _check_side(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    return side


@dataclass(frozen=True)
class GreenContext:
    """Completed defining relations, once per side."""

    presentation: Presentation
    limits: CompletionLimits
    right_relations: MixedSystem
    left_relations: MixedSystem

    @classmethod
    def build(cls, pres: Presentation, limits: CompletionLimits = CompletionLimits()) -> "GreenContext":
        polys = relations_to_polynomials(pres)
        systems = {}
        for side, tag in _TAG_FOR_SIDE.items():
            res = complete(MixedSystem.build(polys, pres.order, tag), limits)
            if not res.complete:
                raise IncompletePresentationError(
                    f"the defining relations do not complete within the limits ({side} side, "
                    f"{res.passes_used} passes, {len(res.basis)} polynomials)"
                )
            systems[side] = res.basis
        return cls(pres, limits, systems[RIGHT], systems[LEFT])

    def relations(self, side: str) -> MixedSystem:
        return self.right_relations if _check_side(side) == RIGHT else self.left_relations


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple
    side: str
    tagged_part: tuple
    status: str
    system: MixedSystem = field(repr=False, compare=False)

    @property
    def element(self) -> Word:
        return self.generators[0]

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def contains(self, p: Polynomial) -> bool:
        """Membership of an untagged polynomial (read as an algebra element)."""
        tagged = p.with_tag(_TAG_FOR_SIDE[self.side])
        return reduces_to_zero(tagged, self.system)

    def contains_word(self, word: Word) -> bool:
        return self.contains(Polynomial.monomial(word))

    def format_tagged(self) -> list:
        return [format_member(p, self.system) for p in self.tagged_part]

    def to_json(self) -> dict:
        return {
            "generators": [format_word(w) for w in self.generators],
            "side": self.side,
            "tagged": self.format_tagged(),
            "untagged": [format_member(p, self.system) for p in self.system.untagged],
            "status": self.status,
        }


def ideal_basis(ctx: GreenContext, side: str, generators: Sequence[Word]) -> IdealBasis:
    """Basis of the one-sided ideal of the semigroup algebra generated by ``generators``."""
    side = _check_side(side)
    gens = tuple(tuple(w) for w in generators)
    if not gens:
        raise ValueError("at least one generator is required")
    rel = ctx.relations(side)
    tag = _TAG_FOR_SIDE[side]
    tagged = [Polynomial.monomial(w, 1, tag) for w in gens]
    start = MixedSystem.build(tagged + list(rel.untagged), rel.order, tag)
    res = complete(start, ctx.limits)
    return IdealBasis(gens, side, res.basis.tagged, res.status, res.basis)


def one_sided_basis(ctx: GreenContext, side: str, element: Word) -> IdealBasis:
    return ideal_basis(ctx, side, [element])


def ideals_equal(a: IdealBasis, b: IdealBasis) -> str:
    if a.side != b.side:
        raise SideMismatchError("cannot compare a right ideal with a left ideal")
    if not (a.complete and b.complete):
        return UNKNOWN
    for p in a.tagged_part:
        if not reduces_to_zero(p, b.system):
            return DIFFERENT
    for p in b.tagged_part:
        if not reduces_to_zero(p, a.system):
            return DIFFERENT
    return EQUAL


def _partition(n: int, same) -> list:
    """Classes of an equivalence given as a pairwise predicate, ordered by least member."""
    classes: list = []
    for idx in range(n):
        for cls in classes:
            if same(cls[0], idx):
                cls.append(idx)
                break
        else:
            classes.append([idx])
    return classes


def _canonical(classes) -> list:
    out = [sorted(c) for c in classes if c]
    out.sort(key=lambda c: c[0])
    return out


def _class_index(classes, n: int) -> list:
    owner = [0] * n
    for ci, cls in enumerate(classes):
        for idx in cls:
            owner[idx] = ci
    return owner


def meet(p1, p2, n: int) -> list:
    a, b = _class_index(p1, n), _class_index(p2, n)
    groups: dict = {}
    for idx in range(n):
        groups.setdefault((a[idx], b[idx]), []).append(idx)
    return _canonical(groups.values())


def join(p1, p2, n: int) -> list:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p1, p2):
        for cls in part:
            for idx in cls[1:]:
                ra, rb = find(cls[0]), find(idx)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for idx in range(n):
        groups.setdefault(find(idx), []).append(idx)
    return _canonical(groups.values())


@dataclass
class GreenClassification:
    elements: ElementEnumeration
    r_classes: list
    l_classes: list
    h_classes: list
    d_classes: list
    bases: dict = field(repr=False)
    reliable: bool = True
    zero: Optional[str] = None
    # D-class indices from the top of the ideal order down
    d_order: list = field(default_factory=list)
    order: object = field(default=None, repr=False)

    def words(self, cls) -> list:
        return [self.elements.elements[i] for i in cls]

    def to_json(self) -> dict:
        names = [format_word(w) for w in self.elements.elements]

        def named(part):
            return [[names[i] for i in cls] for cls in part]

        return {
            "elements": names,
            "r_classes": named(self.r_classes),
            "l_classes": named(self.l_classes),
            "h_classes": named(self.h_classes),
            "d_classes": named([self.d_classes[k] for k in self.d_order]),
            "bases": {
                names[i]: {side: self.bases[i][side].format_tagged() for side in SIDES}
                for i in range(len(names))
            },
            "zero": self.zero,
            "truncated": self.elements.truncated,
            "reliable": self.reliable,
        }


_WORKER_CTX: Optional[GreenContext] = None


def _init_worker(ctx: GreenContext) -> None:
    global _WORKER_CTX
    _WORKER_CTX = ctx


def _both_bases(word: Word):
    return {side: one_sided_basis(_WORKER_CTX, side, word) for side in SIDES}


def _compute_bases(ctx: GreenContext, words, workers: int) -> list:
    if workers <= 1 or len(words) < 2:
        return [{side: one_sided_basis(ctx, side, w) for side in SIDES} for w in words]
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(ctx,)) as pool:
        # map preserves input order, so the merge is deterministic
        return list(pool.map(_both_bases, words, chunksize=max(1, len(words) // (4 * workers))))


def _ideal_order(bases: list, words, d_classes: list) -> list:
    """Sort D-classes so that each comes after every class whose two-sided ideal contains it."""
    n = len(words)
    reps = [cls[0] for cls in d_classes]
    above = [set() for _ in d_classes]
    for ci, rep in enumerate(reps):
        right = bases[rep][RIGHT]
        # two-sided ideal of rep: left ideals of the enumerated members of its right ideal
        reach = set()
        for z in range(n):
            if right.contains_word(words[z]):
                left = bases[z][LEFT]
                for cj, other in enumerate(reps):
                    if cj != ci and left.contains_word(words[other]):
                        reach.add(cj)
        for cj in reach:
            above[cj].add(ci)
    return sorted(range(len(d_classes)), key=lambda c: (len(above[c]), d_classes[c][0]))


def classify(pres: Presentation, limits: CompletionLimits = CompletionLimits(),
             length_bound: int = 8, *, workers: int = 1,
             context: Optional[GreenContext] = None) -> GreenClassification:
    ctx = context or GreenContext.build(pres, limits)
    enum = enumerate_elements(ctx.right_relations, length_bound)
    words = list(enum.elements)
    n = len(words)
    bases = _compute_bases(ctx, words, workers)

    def related(side):
        return lambda a, b: ideals_equal(bases[a][side], bases[b][side]) == EQUAL

    r = _canonical(_partition(n, related(RIGHT)))
    lc = _canonical(_partition(n, related(LEFT)))
    h = meet(r, lc, n)
    d = join(r, lc, n)
    all_complete = all(b.complete for per in bases for b in per.values())
    if not all_complete:
        log.warning("some ideal completions hit the limits; classes are not reliable")
    return GreenClassification(
        elements=enum,
        r_classes=r,
        l_classes=lc,
        h_classes=h,
        d_classes=d,
        bases={i: bases[i] for i in range(n)},
        reliable=all_complete and not enum.truncated,
        zero=pres.alphabet.zero_symbol,
        d_order=_ideal_order(bases, words, d) if n else [],
        order=pres.order,
    )


_MAX_LISTED = 4


def _cell_text(words) -> str:
    if len(words) > _MAX_LISTED:
        return f"({len(words)} elements)"
    return ", ".join(format_word(w) for w in words)


def _block(rows) -> list:
    ncols = len(rows[0])
    widths = [max(len(row[c]) for row in rows) for c in range(ncols)]
    rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    out = [rule]
    for row in rows:
        out.append("|" + "|".join(f" {cell.ljust(w)} " for cell, w in zip(row, widths)) + "|")
        out.append(rule)
    return out


def render_eggbox(gc: GreenClassification) -> str:
    """ASCII eggbox: one block per D-class, R-classes as rows, L-classes as columns."""
    if not gc.elements.elements and not gc.zero:
        return ""
    words = gc.elements.elements
    in_h = {}
    for cls in gc.h_classes:
        for idx in cls:
            in_h[idx] = cls
    blocks = []
    for k in gc.d_order:
        members = set(gc.d_classes[k])
        rows = [c for c in gc.r_classes if c[0] in members]
        cols = [c for c in gc.l_classes if c[0] in members]
        grid = []
        for rc in rows:
            line = []
            rset = set(rc)
            for cc in cols:
                cell = sorted(rset.intersection(cc))
                line.append(_cell_text([words[i] for i in cell]))
            grid.append(line)
        blocks.append("\n".join(_block(grid)))
    if gc.zero:
        blocks.append("\n".join(_block([[gc.zero]])))
    text = "\n\n".join(blocks)
    if not gc.reliable:
        note = "note: "
        if gc.elements.truncated:
            note += f"element list truncated at length {gc.elements.length_bound}; "
        note += "classes are partial"
        text += "\n\n" + note
    return text + "\n"


def describe_classes(gc: GreenClassification) -> str:
    names = [format_word(w) for w in gc.elements.elements]

    def show(part):
        return ", ".join("{" + ", ".join(names[i] for i in cls) + "}" for cls in part)

    lines = [
        "elements: " + ", ".join(names),
        "R-classes: " + show(gc.r_classes),
        "L-classes: " + show(gc.l_classes),
        "H-classes: " + show(gc.h_classes),
        "D-classes: " + show([gc.d_classes[k] for k in gc.d_order]),
    ]
    return "\n".join(lines)


def format_basis_table(gc: GreenClassification) -> str:
    rows = [("element", "right ideal", "left ideal")]
    for i, w in enumerate(gc.elements.elements):
        b = gc.bases[i]
        rows.append((format_word(w), ", ".join(b[RIGHT].format_tagged()) or "0",
                     ", ".join(b[LEFT].format_tagged()) or "0"))
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    return "\n".join(" | ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip() for r in rows)

