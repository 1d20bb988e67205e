"""Parser and printer for the cnf fragment of TPTP.

Supported input is a sequence of statements of the form
``cnf(<name>, <role>, <disjunction>).`` with roles axiom, hypothesis,
or negated_conjecture, ``%`` line comments, and ``$false`` for the
empty disjunction.  Tokens starting with an uppercase letter are
variables, scoped per clause.  Symbol kinds and arities must be
consistent across the whole problem.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .terms import (
    AXIOM,
    CONSTANT,
    FUNCTION,
    NEGATED_CONJECTURE,
    PREDICATE,
    VARIABLE,
    Clause,
    Literal,
    Symbol,
    Term,
    clause_body_to_str,
)

_ROLE_MAP = {
    "axiom": AXIOM,
    "hypothesis": AXIOM,
    "negated_conjecture": NEGATED_CONJECTURE,
}


class ParseError(ValueError):
    """Syntax or signature error, with 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # lower | upper | punct | dollar | end
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>%[^\n]*)
      | (?P<lower>[a-z][A-Za-z0-9_]*)
      | (?P<upper>[A-Z][A-Za-z0-9_]*)
      | (?P<dollar>\$[a-z]+)
      | (?P<punct>[(),.|~])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Signature:
    """Tracks kind and arity per symbol name, rejecting inconsistent use."""

    def __init__(self) -> None:
        self._table: dict[str, Symbol] = {}

    def resolve(self, name: str, kind: str, arity: int, tok: _Token) -> Symbol:
        sym = self._table.get(name)
        if sym is None:
            sym = Symbol(name, kind, arity)
            self._table[name] = sym
            return sym
        if sym.arity != arity:
            raise ParseError(
                f"symbol {name!r} used with arity {arity}, previously {sym.arity}",
                tok.line,
                tok.column,
            )
        if sym.kind != kind:
            raise ParseError(
                f"symbol {name!r} used as {kind}, previously {sym.kind}",
                tok.line,
                tok.column,
            )
        return sym


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.signature = _Signature()

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> "ParseError":
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    def expect_punct(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            raise self.fail(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def parse_problem(self) -> list[Clause]:
        clauses = []
        while self.peek().kind != "end":
            clauses.append(self.parse_statement(len(clauses)))
        return clauses

    def parse_statement(self, age: int) -> Clause:
        tok = self.peek()
        if tok.kind != "lower" or tok.text != "cnf":
            raise self.fail(f"expected 'cnf', found {tok.text or 'end of input'!r}")
        self.advance()
        self.expect_punct("(")
        name_tok = self.peek()
        if name_tok.kind not in ("lower", "upper"):
            raise self.fail("expected a formula name")
        self.advance()
        self.expect_punct(",")
        role_tok = self.peek()
        if role_tok.kind != "lower" or role_tok.text not in _ROLE_MAP:
            raise self.fail(f"unknown role {role_tok.text!r}")
        self.advance()
        self.expect_punct(",")
        literals = self.parse_disjunction()
        self.expect_punct(")")
        self.expect_punct(".")
        return Clause(tuple(literals), role=_ROLE_MAP[role_tok.text], age=age)

    def parse_disjunction(self) -> list[Literal]:
        scope: dict[str, Symbol] = {}
        literals = []
        while True:
            lit = self.parse_literal(scope)
            if lit is not None:
                literals.append(lit)
            if self.peek().kind == "punct" and self.peek().text == "|":
                self.advance()
                continue
            return literals

    def parse_literal(self, scope: dict[str, Symbol]) -> Literal | None:
        tok = self.peek()
        if tok.kind == "dollar":
            if tok.text != "$false":
                raise self.fail(f"unsupported defined atom {tok.text!r}")
            self.advance()
            return None
        polarity = True
        if tok.kind == "punct" and tok.text == "~":
            polarity = False
            self.advance()
            tok = self.peek()
        if tok.kind != "lower":
            raise self.fail(f"expected a predicate, found {tok.text or 'end of input'!r}")
        atom = self.parse_application(scope, PREDICATE)
        return Literal(polarity, atom)

    def parse_application(self, scope: dict[str, Symbol], head_kind: str) -> Term:
        tok = self.advance()
        args: list[Term] = []
        if self.peek().kind == "punct" and self.peek().text == "(":
            self.advance()
            args.append(self.parse_term(scope))
            while self.peek().kind == "punct" and self.peek().text == ",":
                self.advance()
                args.append(self.parse_term(scope))
            self.expect_punct(")")
        if head_kind != PREDICATE:
            head_kind = FUNCTION if args else CONSTANT
        sym = self.signature.resolve(tok.text, head_kind, len(args), tok)
        return Term(sym, tuple(args))

    def parse_term(self, scope: dict[str, Symbol]) -> Term:
        tok = self.peek()
        if tok.kind == "upper":
            self.advance()
            sym = scope.get(tok.text)
            if sym is None:
                sym = Symbol(tok.text, VARIABLE)
                scope[tok.text] = sym
            return Term(sym)
        if tok.kind == "lower":
            return self.parse_application(scope, FUNCTION)
        raise self.fail(f"expected a term, found {tok.text or 'end of input'!r}")


def parse_problem(text: str) -> list[Clause]:
    """Parse TPTP cnf statements into clauses, ages in statement order."""
    return _Parser(text).parse_problem()


def clause_to_cnf(c: Clause, name: str | None = None) -> str:
    """Render a clause as a parseable cnf statement.

    Derived clauses are emitted with role axiom, which is sound: a derived
    clause is a consequence of the input.
    """
    role = c.role if c.role in (AXIOM, NEGATED_CONJECTURE) else AXIOM
    if name is None:
        name = f"c{c.age}" if c.age >= 0 else "c"
    return f"cnf({name}, {role}, {clause_body_to_str(c)})."


def problem_to_tptp(clauses: list[Clause]) -> str:
    """Render a clause list as a parseable TPTP problem."""
    return "\n".join(clause_to_cnf(c, name=f"c{i}") for i, c in enumerate(clauses)) + "\n"
