"""Construction of the conjecture-derived related set and its membership test.

The related set collects terms derived from the negated-conjecture clauses
of a problem.  Four construction modes are supported:

* Ter: the literal atoms of the conjecture plus their immediate arguments,
* Sub: all subterms of the conjecture atoms,
* Top: Sub plus one-layer generalizations f(X1,...,Xn) of every
  non-variable member,
* Gen: Sub as stored members, with membership answered by one-sided
  matching (a query term is related if it generalizes some member).

All stored members are normalized (Alf or Uni); queries are expected to be
normalized the same way before the test.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .terms import (
    NEGATED_CONJECTURE,
    VARIABLE,
    Clause,
    Term,
    canonical_variable,
    normalize,
    subterm_occurrences,
    symbol_sequence,
)
from .unify import match

TER = "Ter"
SUB = "Sub"
TOP = "Top"
GEN = "Gen"
MODES = (TER, SUB, TOP, GEN)


@dataclass(frozen=True)
class RelatedSet:
    mode: str
    norm: str
    base: frozenset[Term]
    # Occurrence counts of normalized subterms across the conjecture atoms;
    # this is the term-frequency source for the tf-idf weight.
    occurrences: Mapping[Term, int] = field(default_factory=dict)
    # Non-variable symbol names occurring in the conjecture, used by the
    # reference conjecture-symbol weight.
    symbols: frozenset[str] = frozenset()
    origin: tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown related-set mode: {self.mode!r}")


def _one_layer_generalization(t: Term) -> Term:
    args = tuple(Term(canonical_variable(i + 1)) for i in range(t.head.arity))
    return Term(t.head, args)


def build_related(conjecture: list[Clause], mode: str, norm: str) -> RelatedSet:
    """Build the related set from negated-conjecture clauses.

    Clauses with other roles are ignored, so the full input clause list can
    be passed.  An empty conjecture yields an empty set.
    """
    if mode not in MODES:
        raise ValueError(f"unknown related-set mode: {mode!r}")
    goal_clauses = tuple(c for c in conjecture if c.role == NEGATED_CONJECTURE)
    atoms = [lit.atom for c in goal_clauses for lit in c.literals]

    occurrences: Counter[Term] = Counter()
    symbols: set[str] = set()
    for atom in atoms:
        for occ in subterm_occurrences(atom):
            occurrences[normalize(occ, norm)] += 1
        for sym in symbol_sequence(atom):
            if sym.kind != VARIABLE:
                symbols.add(sym.name)

    base: set[Term] = set()
    if mode == TER:
        for atom in atoms:
            base.add(normalize(atom, norm))
            for arg in atom.args:
                base.add(normalize(arg, norm))
    else:
        for atom in atoms:
            for occ in subterm_occurrences(atom):
                base.add(normalize(occ, norm))
        if mode == TOP:
            for member in list(base):
                if member.head.kind != VARIABLE and member.head.arity > 0:
                    base.add(normalize(_one_layer_generalization(member), norm))

    return RelatedSet(
        mode=mode,
        norm=norm,
        base=frozenset(base),
        occurrences=dict(occurrences),
        symbols=frozenset(symbols),
        origin=goal_clauses,
    )


def contains(related: RelatedSet, t: Term) -> bool:
    """Membership test; ``t`` must already be normalized under the set's norm.

    Under Ter/Sub/Top this is exact membership.  Under Gen, ``t`` is related
    when it is a generalization of some member, i.e. matches onto it.
    """
    if related.mode != GEN:
        return t in related.base
    if t in related.base:
        return True
    return any(match(t, member) is not None for member in related.base)
