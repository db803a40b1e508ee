"""Completion of mixed systems.

Each pass enumerates every match of the current basis (OLD), reduces the
S-polynomials, collects the nonzero remainders (SPOL), forms NEW = OLD + SPOL,
interreduces NEW and stops once NEW equals OLD.  Limits turn a diverging run
into a ``bound_exceeded`` result carrying the partial basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .overlap import Match, all_matches, s_polynomial
from .poly import format_poly
from .reduction import MixedSystem, reduce_fully, system_key
from .words import Tag

log = logging.getLogger(__name__)

COMPLETE = "complete"
BOUND_EXCEEDED = "bound_exceeded"


@dataclass(frozen=True)
class CompletionLimits:
    max_passes: int = 64
    max_term_length: int = 64
    max_basis_size: int = 4096

    def __post_init__(self):
        for name in ("max_passes", "max_term_length", "max_basis_size"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass
class CompletionResult:
    basis: MixedSystem
    status: str
    passes_used: int
    spolys_added: int
    log: Optional[list] = field(default=None, repr=False)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE


def _monic(p, F: MixedSystem):
    key = system_key(F.order, F.tag_side)
    lc = p.terms[max(p.terms, key=key)]
    return p if lc == 1 else p.scale(1 / lc)


def interreduce(F: MixedSystem) -> MixedSystem:
    """Remove members that reduce to zero by the rest; replace others by reduced monic forms.

    Passes repeat until no member changes, then members are sorted by leading
    word so equal systems have equal member lists.
    """
    if F.tag_side is Tag.RIGHT:
        return interreduce(F.mirrored).mirrored
    tagged, untagged = list(F.tagged), list(F.untagged)
    changed = True
    while changed:
        changed = False
        # untagged members are reduced by untagged members only
        for bucket in (untagged, tagged):
            idx = 0
            while idx < len(bucket):
                p = bucket[idx]
                rest = bucket[:idx] + bucket[idx + 1:]
                if bucket is untagged:
                    others = MixedSystem((), rest, F.order, F.tag_side)
                else:
                    others = MixedSystem(rest, untagged, F.order, F.tag_side)
                nf = reduce_fully(p, others)
                if not nf:
                    del bucket[idx]
                    changed = True
                    continue
                nf = _monic(nf, F)
                if nf != p:
                    bucket[idx] = nf
                    changed = True
                idx += 1
    key = F.order.key
    tagged.sort(key=lambda p: key(max(p.terms, key=key)))
    untagged.sort(key=lambda p: key(max(p.terms, key=key)))
    return MixedSystem(tuple(tagged), tuple(untagged), F.order, F.tag_side)


def check_local_confluence(F: MixedSystem):
    """``(all_resolve, failing_matches)``; matches of a right system come back mirrored-side."""
    G = F.mirrored if F.tag_side is Tag.RIGHT else F
    failing = [m for m in all_matches(G) if reduce_fully(s_polynomial(m), G)]
    return not failing, failing


def _exceeds(F: MixedSystem, limits: CompletionLimits) -> Optional[str]:
    if len(F) > limits.max_basis_size:
        return f"basis size {len(F)} exceeds {limits.max_basis_size}"
    longest = max((p.max_length() for p in F.members), default=0)
    if longest > limits.max_term_length:
        return f"term length {longest} exceeds {limits.max_term_length}"
    return None


def complete(F: MixedSystem, limits: CompletionLimits = CompletionLimits(), *,
             record: bool = False) -> CompletionResult:
    if not isinstance(F, MixedSystem):
        raise TypeError("complete() expects a MixedSystem")
    if F.tag_side is Tag.RIGHT:
        res = complete(F.mirrored, limits, record=record)
        return CompletionResult(res.basis.mirrored, res.status, res.passes_used, res.spolys_added, res.log)

    trace = [] if record else None
    old = interreduce(F)
    added = 0
    passes = 0
    while True:
        if passes >= limits.max_passes:
            log.info("completion stopped after %d passes", passes)
            return CompletionResult(old, BOUND_EXCEEDED, passes, added, trace)
        passes += 1
        spol_t, spol_u = [], []
        current = old
        for m in all_matches(old):
            s = s_polynomial(m)
            nf = reduce_fully(s, current)
            kept = bool(nf)
            if kept:
                nf = _monic(nf, old)
                (spol_t if nf.is_tagged else spol_u).append(nf)
                current = current.replace(
                    tagged=current.tagged + ((nf,) if nf.is_tagged else ()),
                    untagged=current.untagged + (() if nf.is_tagged else (nf,)),
                )
            if trace is not None:
                trace.append(_record(passes, m, s, nf, kept, old))
            if kept:
                # stop at the first breach; interreducing an oversized basis can be very slow
                problem = _exceeds(current, limits)
                if problem:
                    log.info("completion stopped: %s", problem)
                    added += len(spol_t) + len(spol_u)
                    return CompletionResult(current, BOUND_EXCEEDED, passes, added, trace)
        added += len(spol_t) + len(spol_u)
        new = interreduce(current)
        problem = _exceeds(new, limits)
        if problem:
            log.info("completion stopped: %s", problem)
            return CompletionResult(new, BOUND_EXCEEDED, passes, added, trace)
        if set(new.members) == set(old.members):
            return CompletionResult(new, COMPLETE, passes, added, trace)
        old = new


def _record(pass_no: int, m: Match, s, nf, kept: bool, F: MixedSystem) -> dict:
    return {
        "pass": pass_no,
        "case": m.case,
        "i": m.i,
        "j": m.j,
        "spoly_before": format_poly(s, F.order),
        "spoly_nf": format_poly(nf, F.order),
        "kept": kept,
    }
