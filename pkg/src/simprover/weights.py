"""Clause evaluation: weight functions, priority functions, and CEFs.

A clause evaluation function (CEF) pairs a priority function with a weight
function; clauses are ranked by the lexicographic (priority, weight) pair
and ties are broken by age downstream.

Weight kinds:

* FIFO: the clause age.
* Ref: the reference conjecture-symbol weight, summing per-occurrence
  symbol weights, discounted by c_conj for symbols that occur in the
  conjecture.
* Term, Tfidf, Pref, Lev, Ted, Struc: conjecture-similarity weights built
  from a per-term kernel, lifted over subterms by the extension argument
  (Sim/Sum/Max) and summed over literal atoms.

All similarity weights are exact rationals when their cost parameters
are; the tf-idf weight is a float because of the logarithm, a documented
exception.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable

from .distance import (
    LEV,
    STRUC,
    TED,
    EditCosts,
    StructCosts,
    longest_related_prefix,
    min_distance_to_related,
)
from .related import RelatedSet, contains
from .terms import (
    ALF,
    CONSTANT,
    FUNCTION,
    PREDICATE,
    VARIABLE,
    Clause,
    Term,
    normalize,
    subterm_occurrences,
    symbol_sequence,
)

Weight = int | Fraction | float

SIM = "Sim"
SUM = "Sum"
MAX = "Max"
EXTENSIONS = (SIM, SUM, MAX)

CONST_PRIO = "ConstPrio"
PREFER_GOALS = "PreferGoals"
PRIORITIES = (CONST_PRIO, PREFER_GOALS)

KIND_FIFO = "FIFO"
KIND_REF = "Ref"
KIND_TERM = "Term"
KIND_TFIDF = "Tfidf"
KIND_PREF = "Pref"
KIND_LEV = "Lev"
KIND_TED = "Ted"
KIND_STRUC = "Struc"
KINDS = (
    KIND_FIFO,
    KIND_REF,
    KIND_TERM,
    KIND_TFIDF,
    KIND_PREF,
    KIND_LEV,
    KIND_TED,
    KIND_STRUC,
)

DOC_AXIOMS = "ax"
DOC_PROCESSED = "pro"
DOC_MODES = (DOC_AXIOMS, DOC_PROCESSED)

_DISTANCE_KERNEL = {KIND_LEV: LEV, KIND_TED: TED, KIND_STRUC: STRUC}


@dataclass(frozen=True)
class SymbolWeights:
    """Per-kind symbol weights and the conjecture multiplier."""

    c_f: Fraction | int = 1
    c_c: Fraction | int = 1
    c_p: Fraction | int = 1
    c_v: Fraction | int = 1
    c_conj: Fraction | int = 1

    def __post_init__(self) -> None:
        for name in ("c_f", "c_c", "c_p", "c_v", "c_conj"):
            value = getattr(self, name)
            if not isinstance(value, Rational) or value <= 0:
                raise ValueError(f"{name} must be a positive rational, got {value!r}")

    def for_kind(self, kind: str) -> Fraction | int:
        if kind == FUNCTION:
            return self.c_f
        if kind == CONSTANT:
            return self.c_c
        if kind == PREDICATE:
            return self.c_p
        return self.c_v


@dataclass
class DocRegistry:
    """Document statistics for the tf-idf weight.

    A document is a registered clause instance; ``df`` maps a normalized
    term to the number of documents containing it.  ``norm`` fixes the
    variable normalization the registry is keyed under.
    """

    doc_mode: str
    norm: str = ALF
    doc_count: int = 0
    df: dict[Term, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.doc_mode not in DOC_MODES:
            raise ValueError(f"unknown document mode: {self.doc_mode!r}")


def register_document(docs: DocRegistry, c: Clause) -> DocRegistry:
    """Register one clause as a document: bump the count and, once per
    distinct normalized subterm in the clause, its document frequency."""
    docs.doc_count += 1
    seen: set[Term] = set()
    for lit in c.literals:
        for occ in subterm_occurrences(lit.atom):
            seen.add(normalize(occ, docs.norm))
    for t in seen:
        docs.df[t] = docs.df.get(t, 0) + 1
    return docs


@dataclass(frozen=True)
class WeightFnSpec:
    """A weight function with its arguments.

    ``v`` selects variable normalization (Alf/Uni), ``r`` the related-set
    mode (Ter/Sub/Top/Gen), ``e`` the subterm extension (Sim/Sum/Max).
    Exactly the cost block matching ``kind`` must be present.
    """

    kind: str
    v: str = ALF
    r: str = "Sub"
    e: str = SIM
    symbol_weights: SymbolWeights | None = None
    edit_costs: EditCosts | None = None
    struct_costs: StructCosts | None = None
    c_match: Fraction | int | None = None
    c_miss: Fraction | int | None = None
    doc_mode: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown weight kind: {self.kind!r}")
        if self.e not in EXTENSIONS:
            raise ValueError(f"unknown extension: {self.e!r}")
        needs = {
            KIND_REF: self.symbol_weights is not None,
            KIND_TERM: self.symbol_weights is not None,
            KIND_TFIDF: self.doc_mode in DOC_MODES,
            KIND_PREF: self.c_match is not None and self.c_miss is not None,
            KIND_LEV: self.edit_costs is not None,
            KIND_TED: self.edit_costs is not None,
            KIND_STRUC: self.struct_costs is not None,
            KIND_FIFO: True,
        }
        if not needs[self.kind]:
            raise ValueError(f"missing cost arguments for weight kind {self.kind}")


@dataclass(frozen=True)
class CEF:
    """Clause evaluation function: a priority function plus a weight function."""

    priority: str
    weight: WeightFnSpec

    def __post_init__(self) -> None:
        if self.priority not in PRIORITIES:
            raise ValueError(f"unknown priority function: {self.priority!r}")


@dataclass(frozen=True)
class Heuristic:
    """A round-robin schedule of CEFs: ((n1, cef1), ..., (nk, cefk))."""

    items: tuple[tuple[int, CEF], ...]

    def __post_init__(self) -> None:
        if not self.items:
            raise ValueError("a heuristic needs at least one CEF")
        for n, _ in self.items:
            if n < 1:
                raise ValueError(f"CEF repeat count must be >= 1, got {n}")

    def schedule(self) -> tuple[int, ...]:
        """CEF indices expanded to the cyclic selection schedule."""
        out: list[int] = []
        for index, (n, _) in enumerate(self.items):
            out.extend([index] * n)
        return tuple(out)

    @property
    def cefs(self) -> tuple[CEF, ...]:
        return tuple(cef for _, cef in self.items)


# ---------------------------------------------------------------------------
# weight-one kernels (per normalized term)


def weight_one_term(t: Term, related: RelatedSet, w: SymbolWeights) -> Weight:
    """Head-kind weight of ``t``, discounted by c_conj when related."""
    value = w.for_kind(t.head.kind)
    if contains(related, t):
        value = value * w.c_conj
    return value


def weight_one_tfidf(t: Term, related: RelatedSet, docs: DocRegistry) -> float:
    """1 / (1 + tf(t) * ln((1 + |D|) / (1 + df(t)))).

    tf counts occurrences of ``t`` across the conjecture atoms' subterm
    occurrences; df and |D| come from the document registry.
    """
    tf = related.occurrences.get(t, 0)
    if tf == 0:
        return 1.0
    df = docs.df.get(t, 0)
    tfidf = tf * math.log((1 + docs.doc_count) / (1 + df))
    return 1.0 / (1.0 + tfidf)


def weight_one_pref(
    t: Term,
    related: RelatedSet,
    c_match: Fraction | int,
    c_miss: Fraction | int,
) -> Weight:
    """c_match * |pref(t)| + c_miss * (|t| - |pref(t)|)."""
    p = longest_related_prefix(t, related)
    return c_match * p + c_miss * (t.size - p)


def weight_one_distance(
    t: Term,
    related: RelatedSet,
    kernel: str,
    costs: EditCosts | StructCosts,
) -> Weight:
    """Minimum kernel distance from ``t`` to the related set."""
    return min_distance_to_related(t, related, kernel, costs)


def extend(t: Term, omega: Callable[[Term], Weight], e: str) -> Weight:
    """Lift a per-term kernel over ``t``'s subterms.

    Sim applies the kernel to ``t`` itself; Sum totals it over all subterm
    occurrences (with multiplicity); Max takes the maximum over subterms.
    """
    if e == SIM:
        return omega(t)
    if e == SUM:
        total: Weight = 0
        for occ in subterm_occurrences(t):
            total += omega(occ)
        return total
    if e == MAX:
        return max(omega(occ) for occ in subterm_occurrences(t))
    raise ValueError(f"unknown extension: {e!r}")


def _ref_weight(c: Clause, w: SymbolWeights, conjecture_symbols: frozenset[str]) -> Weight:
    total: Weight = 0
    for lit in c.literals:
        for sym in symbol_sequence(lit.atom):
            value = w.for_kind(sym.kind)
            if sym.kind != VARIABLE and sym.name in conjecture_symbols:
                value = value * w.c_conj
            total += value
    return total


def _kernel_for(
    spec: WeightFnSpec,
    related: RelatedSet,
    docs: DocRegistry | None,
) -> Callable[[Term], Weight]:
    v = spec.v
    if spec.kind == KIND_TERM:
        w = spec.symbol_weights
        return lambda t: weight_one_term(normalize(t, v), related, w)
    if spec.kind == KIND_TFIDF:
        if docs is None:
            raise ValueError("tf-idf weight requires a document registry")
        return lambda t: weight_one_tfidf(normalize(t, v), related, docs)
    if spec.kind == KIND_PREF:
        return lambda t: weight_one_pref(normalize(t, v), related, spec.c_match, spec.c_miss)
    kernel = _DISTANCE_KERNEL[spec.kind]
    costs = spec.struct_costs if spec.kind == KIND_STRUC else spec.edit_costs
    return lambda t: weight_one_distance(normalize(t, v), related, kernel, costs)


def clause_weight(
    c: Clause,
    spec: WeightFnSpec,
    related: RelatedSet,
    docs: DocRegistry | None = None,
) -> Weight:
    """Weight of a clause under one weight function.

    Similarity kinds sum the extended kernel over the literal atoms, so
    the empty clause always weighs 0.  FIFO returns the age, Ref the
    conjecture-symbol weight.
    """
    if spec.kind == KIND_FIFO:
        return c.age
    if spec.kind == KIND_REF:
        return _ref_weight(c, spec.symbol_weights, related.symbols)
    omega = _kernel_for(spec, related, docs)
    total: Weight = 0
    for lit in c.literals:
        total += extend(lit.atom, omega, spec.e)
    return total


def priority(c: Clause, p: str) -> int:
    """ConstPrio is 0 for every clause; PreferGoals is 0 for clauses
    descending from the negated conjecture and 1 otherwise."""
    if p == CONST_PRIO:
        return 0
    if p == PREFER_GOALS:
        return 0 if c.from_goal else 1
    raise ValueError(f"unknown priority function: {p!r}")


def evaluate(
    c: Clause,
    cef: CEF,
    related: RelatedSet,
    docs: DocRegistry | None = None,
) -> tuple[int, Weight]:
    """The lexicographic (priority, weight) evaluation pair."""
    return priority(c, cef.priority), clause_weight(c, cef.weight, related, docs)
