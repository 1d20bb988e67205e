"""Independent oracles and random generators used by the tests.

Each oracle is a direct transcription of a definition, kept deliberately
separate from the production implementations it checks: the Levenshtein
oracle evaluates the definitional recurrence top-down, the tree-edit
oracle enumerates valid node mappings exhaustively, the structural
oracle re-transcribes the rule cases, and logical consequence is decided
by enumerating Herbrand interpretations of ground instances.
"""

from __future__ import annotations

import itertools
from random import Random

from simprover.terms import (
    PREDICATE,
    VARIABLE,
    Clause,
    Literal,
    Symbol,
    Term,
    const,
    func,
    pred,
    subterms,
    var,
)
from simprover.unify import apply_once


# ---------------------------------------------------------------------------
# sequence edit distance: definitional recurrence, evaluated top-down


def levenshtein_oracle(a, b, c_ins, c_del, c_ch):
    memo = {}

    def d(i, j):
        if (i, j) in memo:
            return memo[(i, j)]
        if i == 0:
            value = j * c_ins
        elif j == 0:
            value = i * c_del
        else:
            change = d(i - 1, j - 1) + (0 if a[i - 1] == b[j - 1] else c_ch)
            value = min(d(i - 1, j) + c_del, d(i, j - 1) + c_ins, change)
        memo[(i, j)] = value
        return value

    return d(len(a), len(b))


def levenshtein_oracle_nomemo(a, b, c_ins, c_del, c_ch):
    """Memoization-free variant, for small spot checks only."""
    if not a:
        return len(b) * c_ins
    if not b:
        return len(a) * c_del
    change = levenshtein_oracle_nomemo(a[:-1], b[:-1], c_ins, c_del, c_ch) + (
        0 if a[-1] == b[-1] else c_ch
    )
    return min(
        levenshtein_oracle_nomemo(a[:-1], b, c_ins, c_del, c_ch) + c_del,
        levenshtein_oracle_nomemo(a, b[:-1], c_ins, c_del, c_ch) + c_ins,
        change,
    )


# ---------------------------------------------------------------------------
# tree edit distance: exhaustive search over valid mappings
#
# An edit script between ordered trees induces a mapping between the
# surviving nodes, and the cheapest script for a given mapping deletes
# every unmapped source node, inserts every unmapped target node, and
# renames mapped pairs.  A mapping is valid when it is injective and
# preserves both postorder and ancestorship.  Minimizing over all valid
# mappings therefore enumerates all edit scripts up to equivalence.


def _ancestor_matrix(t: Term):
    """Postorder labels plus an ancestor matrix (anc[i][j]: i is a strict
    ancestor of j), indexed structurally so shared subterm objects are
    counted once per occurrence."""
    labels: list[Symbol] = []
    descendant_lists: list[list[int]] = []

    def walk(u: Term) -> tuple[int, list[int]]:
        descendants: list[int] = []
        for child in u.args:
            ci, cdesc = walk(child)
            descendants.extend(cdesc)
            descendants.append(ci)
        i = len(labels)
        labels.append(u.head)
        descendant_lists.append(descendants)
        return i, descendants

    walk(t)
    n = len(labels)
    anc = [[False] * n for _ in range(n)]
    for i, ds in enumerate(descendant_lists):
        for d in ds:
            anc[i][d] = True
    return labels, anc


def ted_mapping_oracle(a: Term, b: Term, c_ins, c_del, c_ch):
    a_labels, a_anc = _ancestor_matrix(a)
    b_labels, b_anc = _ancestor_matrix(b)
    na, nb = len(a_labels), len(b_labels)
    best = [c_del * na + c_ins * nb]  # empty mapping

    def rec(i, pairs, rename_cost):
        if i == na:
            cost = rename_cost + c_del * (na - len(pairs)) + c_ins * (nb - len(pairs))
            if cost < best[0]:
                best[0] = cost
            return
        rec(i + 1, pairs, rename_cost)  # leave node i unmapped
        j_floor = pairs[-1][1] if pairs else -1
        for j in range(j_floor + 1, nb):
            # postorder monotone by construction; check ancestorship both ways
            ok = True
            for (pi, pj) in pairs:
                if a_anc[i][pi] != b_anc[j][pj]:
                    ok = False
                    break
            if ok:
                extra = 0 if a_labels[i] == b_labels[j] else c_ch
                rec(i + 1, pairs + [(i, j)], rename_cost + extra)

    rec(0, [], 0)
    return best[0]


# ---------------------------------------------------------------------------
# structural distance: rule-by-rule transcription


def struct_oracle(a: Term, b: Term, c_miss, c_inst, c_gen):
    if a.is_variable and b.is_variable:
        return 0 if a.head == b.head else c_miss
    if a.is_variable:
        return c_inst * b.size
    if b.is_variable:
        return c_gen * a.size
    if a.head == b.head:
        return sum(
            struct_oracle(x, y, c_miss, c_inst, c_gen) for x, y in zip(a.args, b.args)
        )
    return c_gen * a.size + c_inst * b.size


# ---------------------------------------------------------------------------
# generalization: brute-force substitution enumeration


def generalizes_oracle(t: Term, s: Term) -> bool:
    """True iff some substitution of subterms of ``s`` for the variables
    of ``t`` makes ``t`` equal to ``s``."""
    vs = sorted({u.head for u in subterms(t) if u.is_variable}, key=lambda x: x.name)
    if not vs:
        return t == s
    candidates = sorted(subterms(s), key=repr)
    for values in itertools.product(candidates, repeat=len(vs)):
        sigma = dict(zip(vs, values))
        if apply_once(t, sigma) == s:
            return True
    return False


# ---------------------------------------------------------------------------
# logical consequence over a finite Herbrand base (function-free clauses)


def _ground_instances(c: Clause, constants: list[Term]):
    vs = sorted(
        {u.head for lit in c.literals for u in subterms(lit.atom) if u.is_variable},
        key=lambda x: x.name,
    )
    if not vs:
        yield c.literals
        return
    for values in itertools.product(constants, repeat=len(vs)):
        sigma = dict(zip(vs, values))
        yield tuple(
            Literal(lit.polarity, apply_once(lit.atom, sigma)) for lit in c.literals
        )


def is_consequence(premises: list[Clause], conclusion: Clause, constants: list[Term]) -> bool:
    """Premises entail the conclusion over the given Herbrand universe:
    every interpretation satisfying all premise instances satisfies all
    conclusion instances."""
    premise_instances = [
        inst for p in premises for inst in _ground_instances(p, constants)
    ]
    conclusion_instances = list(_ground_instances(conclusion, constants))
    atoms = sorted(
        {lit.atom for inst in premise_instances + conclusion_instances for lit in inst},
        key=repr,
    )
    assert len(atoms) <= 20, "Herbrand base too large for enumeration"
    for bits in itertools.product((False, True), repeat=len(atoms)):
        valuation = dict(zip(atoms, bits))
        holds = lambda inst: any(valuation[l.atom] == l.polarity for l in inst)
        if all(holds(inst) for inst in premise_instances):
            if not all(holds(inst) for inst in conclusion_instances):
                return False
    return True


# ---------------------------------------------------------------------------
# random generators (seeded by the caller)


def random_term(rng: Random, max_depth: int = 3) -> Term:
    """Random term over f/2, g/1, a, b and variables X, Y, Z."""
    if max_depth == 0 or rng.random() < 0.35:
        return rng.choice(
            [const("a"), const("b"), var("X"), var("Y"), var("Z")]
        )
    if rng.random() < 0.5:
        return func("g", random_term(rng, max_depth - 1))
    return func(
        "f", random_term(rng, max_depth - 1), random_term(rng, max_depth - 1)
    )


def random_atom(rng: Random, max_depth: int = 2) -> Term:
    name = rng.choice(["p", "q"])
    arity = rng.choice([1, 2])
    head = Symbol(name + str(arity), PREDICATE, arity)
    return Term(head, tuple(random_term(rng, max_depth) for _ in range(arity)))


def random_clause(rng: Random, max_literals: int = 3, role: str = "axiom") -> Clause:
    n = rng.randint(1, max_literals)
    lits = tuple(
        Literal(rng.random() < 0.5, random_atom(rng)) for _ in range(n)
    )
    return Clause(lits, role=role)


def enumerate_terms(max_size: int) -> list[Term]:
    """All terms up to ``max_size`` symbols over f/2, g/1, a, and X."""
    by_size: dict[int, list[Term]] = {1: [const("a"), var("X")]}
    for size in range(2, max_size + 1):
        terms = [func("g", t) for t in by_size.get(size - 1, [])]
        for left_size in range(1, size - 1):
            right_size = size - 1 - left_size
            for left in by_size.get(left_size, []):
                for right in by_size.get(right_size, []):
                    terms.append(func("f", left, right))
        by_size[size] = terms
    return [t for size in range(1, max_size + 1) for t in by_size[size]]
