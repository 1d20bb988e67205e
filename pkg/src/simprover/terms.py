"""Terms, literals, and clauses for clausal first-order logic.

Terms are immutable trees of symbols; atoms are terms whose head is a
predicate symbol, so every weight kernel can treat atoms and terms
uniformly.  Clauses carry the bookkeeping the saturation loop needs
(role, age, parents, inference rule).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

FUNCTION = "function"
CONSTANT = "constant"
PREDICATE = "predicate"
VARIABLE = "variable"

ALF = "Alf"
UNI = "Uni"
NORMS = (ALF, UNI)

AXIOM = "axiom"
NEGATED_CONJECTURE = "negated_conjecture"
DERIVED = "derived"
ROLES = (AXIOM, NEGATED_CONJECTURE, DERIVED)


@dataclass(frozen=True)
class Symbol:
    """A function, constant, predicate, or variable symbol."""

    name: str
    kind: str
    arity: int = 0

    def __post_init__(self) -> None:
        if self.kind not in (FUNCTION, CONSTANT, PREDICATE, VARIABLE):
            raise ValueError(f"unknown symbol kind: {self.kind!r}")
        if self.kind in (CONSTANT, VARIABLE) and self.arity != 0:
            raise ValueError(f"{self.kind} {self.name!r} must have arity 0")
        if self.arity < 0:
            raise ValueError(f"negative arity for {self.name!r}")

    def __repr__(self) -> str:
        return self.name


class Term:
    """A head symbol applied to argument terms.

    Instances are immutable by convention and hashable; ``size`` is the
    number of symbol occurrences (variables included) and is precomputed,
    as is the hash, since terms are used heavily as dictionary keys.
    """

    __slots__ = ("head", "args", "size", "_hash")

    def __init__(self, head: Symbol, args: tuple[Term, ...] = ()):
        args = tuple(args)
        if len(args) != head.arity:
            raise ValueError(
                f"{head.name!r} has arity {head.arity}, got {len(args)} arguments"
            )
        self.head = head
        self.args = args
        self.size = 1 + sum(a.size for a in args)
        self._hash = hash((head, args))

    @property
    def is_variable(self) -> bool:
        return self.head.kind == VARIABLE

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        if self._hash != other._hash or self.size != other.size:
            return False
        return self.head == other.head and self.args == other.args

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return term_to_str(self)


def var(name: str) -> Term:
    return Term(Symbol(name, VARIABLE))


def const(name: str) -> Term:
    return Term(Symbol(name, CONSTANT))


def func(name: str, *args: Term) -> Term:
    return Term(Symbol(name, FUNCTION, len(args)), args)


def pred(name: str, *args: Term) -> Term:
    return Term(Symbol(name, PREDICATE, len(args)), args)


@dataclass(frozen=True)
class Literal:
    """A signed atom; ``polarity`` is True for positive literals."""

    polarity: bool
    atom: Term

    def __post_init__(self) -> None:
        if self.atom.head.kind != PREDICATE:
            raise ValueError(f"literal atom must have a predicate head: {self.atom!r}")

    def negated(self) -> Literal:
        return Literal(not self.polarity, self.atom)

    def __repr__(self) -> str:
        return literal_to_str(self)


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals.

    ``age`` is the unique creation stamp within a proof run (-1 until the
    saturation loop assigns one), ``parents`` holds the ages of the premise
    clauses, and ``from_goal`` records whether the clause descends from a
    negated conjecture.  Duplicate literals are collapsed on construction.
    """

    literals: tuple[Literal, ...]
    role: str = DERIVED
    age: int = -1
    parents: tuple[int, ...] = ()
    rule: str = "input"
    from_goal: bool | None = None

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"unknown clause role: {self.role!r}")
        deduped = tuple(dict.fromkeys(self.literals))
        object.__setattr__(self, "literals", deduped)
        if self.from_goal is None:
            object.__setattr__(self, "from_goal", self.role == NEGATED_CONJECTURE)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def __len__(self) -> int:
        return len(self.literals)

    def __repr__(self) -> str:
        return clause_body_to_str(self)


# ---------------------------------------------------------------------------
# term utilities


def term_size(t: Term) -> int:
    """Number of symbol occurrences in ``t``, variables included."""
    return t.size


def subterm_occurrences(t: Term) -> Iterator[Term]:
    """Every subterm occurrence of ``t`` (including ``t``), pre-order."""
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(u.args))


def subterms(t: Term) -> set[Term]:
    """The set of subterms of ``t`` (including ``t``), duplicates collapsed."""
    return set(subterm_occurrences(t))


def symbol_sequence(t: Term) -> list[Symbol]:
    """Pre-order flattening of ``t``; its length equals ``term_size(t)``."""
    return [u.head for u in subterm_occurrences(t)]


def variables(t: Term) -> set[Symbol]:
    return {s for s in symbol_sequence(t) if s.kind == VARIABLE}


def canonical_variable(index: int) -> Symbol:
    """The canonical variable X1, X2, ... used by normalization."""
    return Symbol(f"X{index}", VARIABLE)


@lru_cache(maxsize=262144)
def normalize(t: Term, v: str = ALF) -> Term:
    """Rename the variables of ``t`` canonically.

    Alf renames variables to X1, X2, ... in order of first left-to-right
    occurrence; Uni replaces every variable by the single variable X1.
    Non-variable structure is unchanged.
    """
    if v not in NORMS:
        raise ValueError(f"unknown normalization: {v!r}")
    mapping: dict[Symbol, Symbol] = {}

    def walk(u: Term) -> Term:
        if u.head.kind == VARIABLE:
            if v == UNI:
                return Term(canonical_variable(1))
            s = mapping.get(u.head)
            if s is None:
                s = canonical_variable(len(mapping) + 1)
                mapping[u.head] = s
            return Term(s)
        if not u.args:
            return u
        return Term(u.head, tuple(walk(a) for a in u.args))

    return walk(t)


def normalize_literals(literals: tuple[Literal, ...], v: str = ALF) -> tuple[Literal, ...]:
    """Normalize variables jointly across a literal sequence."""
    if v not in NORMS:
        raise ValueError(f"unknown normalization: {v!r}")
    mapping: dict[Symbol, Symbol] = {}

    def walk(u: Term) -> Term:
        if u.head.kind == VARIABLE:
            if v == UNI:
                return Term(canonical_variable(1))
            s = mapping.get(u.head)
            if s is None:
                s = canonical_variable(len(mapping) + 1)
                mapping[u.head] = s
            return Term(s)
        if not u.args:
            return u
        return Term(u.head, tuple(walk(a) for a in u.args))

    return tuple(Literal(lit.polarity, walk(lit.atom)) for lit in literals)


def canonical_literals(c: Clause) -> tuple[Literal, ...]:
    """Alpha-normalized literal tuple, for renaming-insensitive comparison."""
    return normalize_literals(c.literals, ALF)


# ---------------------------------------------------------------------------
# rendering


def term_to_str(t: Term) -> str:
    if not t.args:
        return t.head.name
    return f"{t.head.name}({','.join(term_to_str(a) for a in t.args)})"


def literal_to_str(lit: Literal) -> str:
    body = term_to_str(lit.atom)
    return body if lit.polarity else f"~{body}"


def clause_body_to_str(c: Clause) -> str:
    """TPTP disjunction for a clause; the empty clause prints as $false."""
    if c.is_empty:
        return "$false"
    return " | ".join(literal_to_str(lit) for lit in c.literals)
