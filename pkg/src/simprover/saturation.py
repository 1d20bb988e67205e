"""Given-clause saturation with binary resolution and factoring.

The loop keeps a processed set P and an unprocessed collection U.  Each
iteration selects a given clause from U under the round-robin heuristic,
discards it if it is a tautology or forward-subsumed by P, moves it to P,
and inserts all resolvents with P (including the clause itself) and all
factors back into U.  New clauses are evaluated once, at insertion, under
every CEF of the heuristic.

The calculus is binary resolution plus factoring, without equality rules
or literal selection; the point of the artifact is clause selection, and
this calculus keeps derivations small and replayable.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .related import RelatedSet, build_related
from .terms import Clause, Literal, clause_body_to_str, normalize_literals
from .unify import Subst, apply_subst, clause_variables, match, rename_apart, unify
from .weights import (
    CEF,
    DOC_AXIOMS,
    DOC_PROCESSED,
    DocRegistry,
    Heuristic,
    KIND_TFIDF,
    Weight,
    evaluate,
    register_document,
)

PROOF = "proof"
SATURATED = "saturated"
RESOURCE_OUT = "resource_out"

RULE_INPUT = "input"
RULE_RESOLUTION = "resolution"
RULE_FACTORING = "factoring"


@dataclass(frozen=True)
class Limits:
    """Resource limits for one saturation run; None disables a limit."""

    max_seconds: float | None = None
    max_processed: int | None = None
    max_generated: int | None = 1_000_000


@dataclass
class Stats:
    processed: int = 0
    generated: int = 0
    subsumed_given: int = 0
    tautologies_given: int = 0
    cef_selections: list[int] = field(default_factory=list)
    seconds: float = 0.0


@dataclass
class SaturationResult:
    outcome: str  # proof | saturated | resource_out
    stats: Stats
    # For a proof: the derivation DAG restricted to ancestors of the empty
    # clause, in age order (inputs first).  None otherwise.
    derivation: list[Clause] | None = None


# ---------------------------------------------------------------------------
# inference rules


def _derived(
    literals: Sequence[Literal],
    rule: str,
    parents: tuple[int, ...],
    from_goal: bool,
) -> Clause:
    # Canonical variable naming makes structurally equal conclusions
    # identical, which replay and duplicate detection both rely on.
    return Clause(
        normalize_literals(tuple(literals)),
        role="derived",
        age=-1,
        parents=parents,
        rule=rule,
        from_goal=from_goal,
    )


def resolve(c1: Clause, c2: Clause) -> list[Clause]:
    """All binary resolvents of two clauses.

    The second clause is renamed apart internally, so the inputs need not
    be variable-disjoint.
    """
    avoid = {s.name for s in clause_variables(c1)} | {
        s.name for s in clause_variables(c2)
    }
    lits2 = rename_apart(c2.literals, avoid)
    out: list[Clause] = []
    for i, l1 in enumerate(c1.literals):
        for j, l2 in enumerate(lits2):
            if l1.polarity == l2.polarity:
                continue
            sigma = unify(l1.atom, l2.atom)
            if sigma is None:
                continue
            rest = [
                Literal(lit.polarity, apply_subst(lit.atom, sigma))
                for k, lit in enumerate(c1.literals)
                if k != i
            ]
            rest.extend(
                Literal(lit.polarity, apply_subst(lit.atom, sigma))
                for k, lit in enumerate(lits2)
                if k != j
            )
            out.append(
                _derived(
                    rest,
                    RULE_RESOLUTION,
                    (c1.age, c2.age),
                    c1.from_goal or c2.from_goal,
                )
            )
    return out


def factor(c: Clause) -> list[Clause]:
    """All binary factors of a clause: merge each unifiable same-polarity
    literal pair under its most general unifier."""
    out: list[Clause] = []
    lits = c.literals
    for i in range(len(lits)):
        for j in range(i + 1, len(lits)):
            if lits[i].polarity != lits[j].polarity:
                continue
            sigma = unify(lits[i].atom, lits[j].atom)
            if sigma is None:
                continue
            merged = [
                Literal(lit.polarity, apply_subst(lit.atom, sigma)) for lit in lits
            ]
            out.append(_derived(merged, RULE_FACTORING, (c.age,), c.from_goal))
    return out


def is_tautology(c: Clause) -> bool:
    """True iff the clause contains a literal and its exact negation."""
    positive = {lit.atom for lit in c.literals if lit.polarity}
    return any(not lit.polarity and lit.atom in positive for lit in c.literals)


def subsumes(d: Clause, c: Clause) -> bool:
    """True iff one substitution maps d's literals injectively onto
    literals of c (multiset subsumption, so |d| <= |c| is required)."""
    if len(d.literals) > len(c.literals):
        return False

    def assign(i: int, sigma: Subst, used: int) -> bool:
        if i == len(d.literals):
            return True
        lit = d.literals[i]
        for k, target in enumerate(c.literals):
            if used & (1 << k) or target.polarity != lit.polarity:
                continue
            extended = match(lit.atom, target.atom, sigma)
            if extended is not None and assign(i + 1, extended, used | (1 << k)):
                return True
        return False

    return assign(0, {}, 0)


def forward_subsumed(c: Clause, processed: Iterable[Clause]) -> bool:
    """True iff some processed clause subsumes ``c``."""
    return any(subsumes(d, c) for d in processed)


class ProcessedIndex:
    """The processed set with cheap candidate filtering.

    Ground unit clauses live in a hash set so the common subsumption case
    is a lookup; non-ground units and multi-literal clauses are scanned
    with a polarity/predicate signature prefilter.  Resolution partners
    are indexed by complementary (predicate, polarity) literal keys.
    Results agree with the naive scans over ``clauses``.
    """

    def __init__(self) -> None:
        self.clauses: list[Clause] = []
        self._ground_unit_literals: set[Literal] = set()
        self._var_units: list[Clause] = []
        self._multi: list[Clause] = []
        self._by_literal_key: dict[tuple[str, bool], list[Clause]] = {}
        self._member_ages: set[int] = set()

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __contains__(self, c: Clause) -> bool:
        return c.age in self._member_ages

    def add(self, c: Clause) -> None:
        self.clauses.append(c)
        self._member_ages.add(c.age)
        for lit in c.literals:
            key = (lit.atom.head.name, lit.polarity)
            self._by_literal_key.setdefault(key, []).append(c)
        if len(c.literals) == 1:
            lit = c.literals[0]
            if clause_variables(c):
                self._var_units.append(c)
            else:
                self._ground_unit_literals.add(lit)
        elif len(c.literals) > 1:
            self._multi.append(c)

    def subsumed(self, c: Clause) -> bool:
        if any(lit in self._ground_unit_literals for lit in c.literals):
            return True
        for d in self._var_units:
            pattern = d.literals[0]
            for target in c.literals:
                if target.polarity == pattern.polarity and match(
                    pattern.atom, target.atom
                ) is not None:
                    return True
        if self._multi:
            keys = {(lit.atom.head.name, lit.polarity) for lit in c.literals}
            for d in self._multi:
                if len(d.literals) > len(c.literals):
                    continue
                if all(
                    (lit.atom.head.name, lit.polarity) in keys for lit in d.literals
                ):
                    if subsumes(d, c):
                        return True
        return False

    def resolution_partners(self, g: Clause) -> list[Clause]:
        """Clauses of P containing a literal complementary to one of g's,
        in ascending age order, deduplicated."""
        seen: set[int] = set()
        partners: list[Clause] = []
        for lit in g.literals:
            key = (lit.atom.head.name, not lit.polarity)
            for d in self._by_literal_key.get(key, ()):
                if d.age not in seen:
                    seen.add(d.age)
                    partners.append(d)
        partners.sort(key=lambda d: d.age)
        return partners


class UnprocessedQueue:
    """U as one heap per CEF over shared clause identities.

    Every inserted clause carries one (priority, weight) pair per CEF;
    removal is lazy, so selecting from one heap hides the clause from all
    others via the live table.  Ties break on age.
    """

    def __init__(self, n_cefs: int):
        self._heaps: list[list[tuple[int, Weight, int]]] = [[] for _ in range(n_cefs)]
        self._live: dict[int, Clause] = {}

    def __len__(self) -> int:
        return len(self._live)

    def __bool__(self) -> bool:
        return bool(self._live)

    def clauses(self) -> list[Clause]:
        return sorted(self._live.values(), key=lambda c: c.age)

    def insert(self, c: Clause, evaluations: Sequence[tuple[int, Weight]]) -> None:
        self._live[c.age] = c
        for heap, (prio, weight) in zip(self._heaps, evaluations):
            heapq.heappush(heap, (prio, weight, c.age))

    def pop_min(self, cef_index: int) -> Clause | None:
        heap = self._heaps[cef_index]
        while heap:
            _, _, age = heapq.heappop(heap)
            clause = self._live.pop(age, None)
            if clause is not None:
                return clause
        return None


# ---------------------------------------------------------------------------
# proof state


class ProofState:
    """Processed/unprocessed sets plus the evaluation context (related
    sets per (v, r), document registries per (mode, v)) for one run."""

    def __init__(self, clauses: Sequence[Clause], heuristic: Heuristic):
        self.heuristic = heuristic
        self.schedule = heuristic.schedule()
        self.schedule_pos = 0
        self.stats = Stats(cef_selections=[0] * len(heuristic.cefs))

        stamped: list[Clause] = []
        for i, c in enumerate(clauses):
            stamped.append(replace(c, age=i) if c.age != i else c)
        self.inputs = stamped
        self.next_age = len(stamped)
        self.registry: dict[int, Clause] = {c.age: c for c in stamped}

        self.related: dict[tuple[str, str], RelatedSet] = {}
        for cef in heuristic.cefs:
            key = (cef.weight.v, cef.weight.r)
            if key not in self.related:
                self.related[key] = build_related(stamped, key[1], key[0])

        self.registries: dict[tuple[str, str], DocRegistry] = {}
        for cef in heuristic.cefs:
            if cef.weight.kind != KIND_TFIDF:
                continue
            key = (cef.weight.doc_mode, cef.weight.v)
            if key not in self.registries:
                self.registries[key] = DocRegistry(doc_mode=key[0], norm=key[1])
        for (mode, _), registry in self.registries.items():
            if mode == DOC_AXIOMS:
                for c in stamped:
                    register_document(registry, c)

        self.P = ProcessedIndex()
        self.U = UnprocessedQueue(len(heuristic.cefs))
        for c in stamped:
            self.U.insert(c, self._evaluations(c))

    def _evaluations(self, c: Clause) -> list[tuple[int, Weight]]:
        out = []
        for cef in self.heuristic.cefs:
            related = self.related[(cef.weight.v, cef.weight.r)]
            docs = None
            if cef.weight.kind == KIND_TFIDF:
                docs = self.registries[(cef.weight.doc_mode, cef.weight.v)]
            out.append(evaluate(c, cef, related, docs))
        return out

    def stamp(self, c: Clause) -> Clause:
        stamped = replace(c, age=self.next_age)
        self.next_age += 1
        self.registry[stamped.age] = stamped
        return stamped

    def add_unprocessed(self, c: Clause) -> None:
        self.U.insert(c, self._evaluations(c))

    def move_to_processed(self, c: Clause) -> None:
        self.P.add(c)
        for (mode, _), registry in self.registries.items():
            if mode == DOC_PROCESSED:
                register_document(registry, c)


def select_given(state: ProofState, heuristic: Heuristic | None = None) -> Clause:
    """Remove and return the clause minimal under the CEF the round-robin
    cursor points at, advancing the cursor.  U must be non-empty."""
    h = heuristic if heuristic is not None else state.heuristic
    schedule = h.schedule()
    while True:
        cef_index = schedule[state.schedule_pos % len(schedule)]
        state.schedule_pos += 1
        clause = state.U.pop_min(cef_index)
        if clause is not None:
            state.stats.cef_selections[cef_index] += 1
            return clause
        if not state.U:
            raise ValueError("select_given on empty U")


def _extract_derivation(state: ProofState, empty: Clause) -> list[Clause]:
    needed: dict[int, Clause] = {}
    stack = [empty]
    while stack:
        c = stack.pop()
        if c.age in needed:
            continue
        needed[c.age] = c
        for parent_age in c.parents:
            stack.append(state.registry[parent_age])
    return [needed[a] for a in sorted(needed)]


def saturate(
    clauses: Sequence[Clause],
    heuristic: Heuristic,
    limits: Limits = Limits(),
) -> SaturationResult:
    """Run the given-clause loop to a proof, saturation, or a limit."""
    start = time.perf_counter()
    state = ProofState(clauses, heuristic)
    stats = state.stats

    def finish(outcome: str, derivation: list[Clause] | None = None) -> SaturationResult:
        stats.seconds = time.perf_counter() - start
        return SaturationResult(outcome=outcome, stats=stats, derivation=derivation)

    for c in state.inputs:
        if c.is_empty:
            return finish(PROOF, _extract_derivation(state, c))

    while True:
        if limits.max_seconds is not None and time.perf_counter() - start > limits.max_seconds:
            return finish(RESOURCE_OUT)
        if limits.max_processed is not None and stats.processed >= limits.max_processed:
            return finish(RESOURCE_OUT)
        if limits.max_generated is not None and stats.generated >= limits.max_generated:
            return finish(RESOURCE_OUT)
        if not state.U:
            return finish(SATURATED)

        given = select_given(state)
        if is_tautology(given):
            stats.tautologies_given += 1
            continue
        if state.P.subsumed(given):
            stats.subsumed_given += 1
            continue

        state.move_to_processed(given)
        stats.processed += 1

        new_clauses: list[Clause] = list(factor(given))
        for partner in state.P.resolution_partners(given):
            if partner.age != given.age:
                new_clauses.extend(resolve(given, partner))
        new_clauses.extend(resolve(given, given))

        for raw in new_clauses:
            stamped = state.stamp(raw)
            stats.generated += 1
            if stamped.is_empty:
                return finish(PROOF, _extract_derivation(state, stamped))
            state.add_unprocessed(stamped)


# ---------------------------------------------------------------------------
# derivations


def format_derivation(derivation: list[Clause]) -> str:
    """One line per clause: ``id. <disjunction> [rule, parent ids]``."""
    lines = []
    for c in derivation:
        if c.parents:
            provenance = f"[{c.rule}, {', '.join(str(p) for p in c.parents)}]"
        else:
            provenance = f"[{c.rule}]"
        lines.append(f"{c.age}. {clause_body_to_str(c)} {provenance}")
    return "\n".join(lines)


def verify_derivation(derivation: list[Clause]) -> bool:
    """Replay every inference step of a derivation.

    Each derived clause must be reproducible by re-running its rule on its
    recorded parents, and the derivation must end in the empty clause with
    input clauses as leaves.
    """
    if not derivation or not derivation[-1].is_empty:
        return False
    by_age = {c.age: c for c in derivation}
    for c in derivation:
        if c.rule == RULE_INPUT:
            if c.parents:
                return False
            continue
        if any(p not in by_age or p >= c.age for p in c.parents):
            return False
        if c.rule == RULE_RESOLUTION:
            candidates = resolve(by_age[c.parents[0]], by_age[c.parents[1]])
        elif c.rule == RULE_FACTORING:
            candidates = factor(by_age[c.parents[0]])
        else:
            return False
        if not any(cand.literals == c.literals for cand in candidates):
            return False
    return True
