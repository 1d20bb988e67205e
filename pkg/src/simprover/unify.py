"""Substitutions, most-general unification, and one-sided matching."""

from __future__ import annotations

from typing import Iterable

from .terms import VARIABLE, Clause, Literal, Symbol, Term, variables

Subst = dict[Symbol, Term]


def apply_subst(t: Term, subst: Subst) -> Term:
    """Apply a triangular substitution, chasing bound-variable chains.

    Safe for substitutions produced by :func:`unify` (the occurs check
    rules out cycles).
    """
    if not subst:
        return t
    if t.head.kind == VARIABLE:
        bound = subst.get(t.head)
        return t if bound is None else apply_subst(bound, subst)
    if not t.args:
        return t
    return Term(t.head, tuple(apply_subst(a, subst) for a in t.args))


def apply_once(t: Term, subst: Subst) -> Term:
    """Apply a substitution simultaneously, without re-applying to results.

    This is the one-shot semantics required when pattern and subject share
    variable names, as with substitutions produced by :func:`match`.
    """
    if t.head.kind == VARIABLE:
        return subst.get(t.head, t)
    if not t.args:
        return t
    return Term(t.head, tuple(apply_once(a, subst) for a in t.args))


def _deref(t: Term, subst: Subst) -> Term:
    while t.head.kind == VARIABLE:
        bound = subst.get(t.head)
        if bound is None:
            return t
        t = bound
    return t


def _occurs(v: Symbol, t: Term, subst: Subst) -> bool:
    stack = [t]
    while stack:
        u = _deref(stack.pop(), subst)
        if u.head == v:
            return True
        stack.extend(u.args)
    return False


def unify(a: Term, b: Term, subst: Subst | None = None) -> Subst | None:
    """Most general unifier of ``a`` and ``b``, or None.

    Robinson's algorithm with occurs check; the result is triangular and
    meant to be applied with :func:`apply_subst`.
    """
    subst = dict(subst) if subst else {}
    stack = [(a, b)]
    while stack:
        s, t = stack.pop()
        s = _deref(s, subst)
        t = _deref(t, subst)
        if s is t or s == t:
            continue
        if s.head.kind == VARIABLE:
            if _occurs(s.head, t, subst):
                return None
            subst[s.head] = t
        elif t.head.kind == VARIABLE:
            if _occurs(t.head, s, subst):
                return None
            subst[t.head] = s
        elif s.head != t.head:
            return None
        else:
            stack.extend(zip(s.args, t.args))
    return subst


def match(pattern: Term, subject: Term, subst: Subst | None = None) -> Subst | None:
    """One-sided matching: a substitution s with pattern*s == subject, or None.

    Subject variables are treated as constants; the returned substitution
    has one-shot semantics (see :func:`apply_once`).
    """
    subst = dict(subst) if subst else {}
    stack = [(pattern, subject)]
    while stack:
        p, s = stack.pop()
        if p.head.kind == VARIABLE:
            bound = subst.get(p.head)
            if bound is None:
                subst[p.head] = s
            elif bound != s:
                return None
            continue
        if p.head != s.head:
            return None
        stack.extend(zip(p.args, s.args))
    return subst


def clause_variables(c: Clause) -> set[Symbol]:
    out: set[Symbol] = set()
    for lit in c.literals:
        out |= variables(lit.atom)
    return out


def rename_apart(literals: Iterable[Literal], avoid: set[str]) -> tuple[Literal, ...]:
    """Rename the variables of ``literals`` to fresh names outside ``avoid``."""
    mapping: dict[Symbol, Symbol] = {}
    counter = 0

    def fresh() -> Symbol:
        nonlocal counter
        while True:
            counter += 1
            name = f"V{counter}"
            if name not in avoid:
                return Symbol(name, VARIABLE)

    def walk(t: Term) -> Term:
        if t.head.kind == VARIABLE:
            s = mapping.get(t.head)
            if s is None:
                s = fresh()
                mapping[t.head] = s
            return Term(s)
        if not t.args:
            return t
        return Term(t.head, tuple(walk(a) for a in t.args))

    return tuple(Literal(lit.polarity, walk(lit.atom)) for lit in literals)
