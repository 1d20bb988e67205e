"""The command-line heuristic grammar and cost-code decoding.

A heuristic is written ``(n1*CEF1,...,nk*CEFk)`` where each CEF is
``Name(Priority, args...)``.  The common argument triple v, r, e follows
the priority for the conjecture-similarity weights, then kind-specific
numeric arguments positionally:

    FIFOWeight(prio)
    Ref(prio, c_conj, c_f, c_c, c_p, c_v)
    ConjectureTermWeight(prio, v, r, e, c_conj, c_f, c_c, c_p, c_v)
    ConjectureTfIdfWeight(prio, v, r, e, doc)        doc in {ax, pro}
    ConjecturePrefixWeight(prio, v, r, e, c_match, c_miss)
    ConjectureLevWeight(prio, v, r, e, c_ins, c_del, c_ch)
    ConjectureTedWeight(prio, v, r, e, c_ins, c_del, c_ch)
    ConjectureStrucWeight(prio, v, r, e, c_miss, c_inst, c_gen)

Numbers may be integers, decimals, or rationals like 1/2; they are parsed
exactly.  ``print_heuristic`` emits the canonical form, and parsing it
back yields an equal heuristic.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .distance import EditCosts, StructCosts
from .related import MODES
from .terms import NORMS
from .weights import (
    CEF,
    DOC_MODES,
    EXTENSIONS,
    Heuristic,
    KIND_FIFO,
    KIND_LEV,
    KIND_PREF,
    KIND_REF,
    KIND_STRUC,
    KIND_TED,
    KIND_TERM,
    KIND_TFIDF,
    PRIORITIES,
    SymbolWeights,
    WeightFnSpec,
)

NAME_BY_KIND = {
    KIND_FIFO: "FIFOWeight",
    KIND_REF: "Ref",
    KIND_TERM: "ConjectureTermWeight",
    KIND_TFIDF: "ConjectureTfIdfWeight",
    KIND_PREF: "ConjecturePrefixWeight",
    KIND_LEV: "ConjectureLevWeight",
    KIND_TED: "ConjectureTedWeight",
    KIND_STRUC: "ConjectureStrucWeight",
}
KIND_BY_NAME = {name: kind for kind, name in NAME_BY_KIND.items()}


class HeuristicError(ValueError):
    """Malformed heuristic specification, with character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<number>\d+(?:\.\d+)?(?:/\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<punct>[(),*])
    """,
    re.VERBOSE,
)


def _number(text: str) -> int | Fraction:
    if "/" in text:
        num, den = text.split("/")
        value = Fraction(int(num), int(den))
    elif "." in text:
        value = Fraction(text)
    else:
        return int(text)
    return int(value) if value.denominator == 1 else value


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise HeuristicError(f"unexpected character {text[pos]!r}", pos)
            if m.lastgroup != "ws":
                self.tokens.append((m.lastgroup, m.group(), pos))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, text: str) -> None:
        kind, lexeme, pos = self.next()
        if lexeme != text:
            raise HeuristicError(f"expected {text!r}, found {lexeme or 'end'!r}", pos)


def _parse_args(scanner: _Scanner) -> list[tuple[str, str, int]]:
    scanner.expect("(")
    args = [scanner.next()]
    while scanner.peek()[1] == ",":
        scanner.next()
        args.append(scanner.next())
    scanner.expect(")")
    return args


def _take_name(args: list[tuple[str, str, int]], what: str, allowed) -> str:
    if not args:
        raise HeuristicError(f"missing {what} argument", 0)
    kind, text, pos = args.pop(0)
    if kind != "name" or text not in allowed:
        raise HeuristicError(
            f"expected {what} in {{{', '.join(allowed)}}}, found {text!r}", pos
        )
    return text


def _take_number(args: list[tuple[str, str, int]], what: str) -> int | Fraction:
    if not args:
        raise HeuristicError(f"missing numeric argument {what}", 0)
    kind, text, pos = args.pop(0)
    if kind != "number":
        raise HeuristicError(f"expected a number for {what}, found {text!r}", pos)
    return _number(text)


def _parse_cef(scanner: _Scanner) -> CEF:
    kind_tok, name, pos = scanner.next()
    if kind_tok != "name" or name not in KIND_BY_NAME:
        raise HeuristicError(f"unknown weight function {name!r}", pos)
    kind = KIND_BY_NAME[name]
    args = _parse_args(scanner)
    prio = _take_name(args, "priority function", PRIORITIES)

    if kind == KIND_FIFO:
        spec = WeightFnSpec(kind=kind)
    elif kind == KIND_REF:
        c_conj = _take_number(args, "c_conj")
        spec = WeightFnSpec(
            kind=kind,
            symbol_weights=SymbolWeights(
                c_f=_take_number(args, "c_f"),
                c_c=_take_number(args, "c_c"),
                c_p=_take_number(args, "c_p"),
                c_v=_take_number(args, "c_v"),
                c_conj=c_conj,
            ),
        )
    else:
        v = _take_name(args, "normalization", NORMS)
        r = _take_name(args, "related-set mode", MODES)
        e = _take_name(args, "extension", EXTENSIONS)
        if kind == KIND_TERM:
            c_conj = _take_number(args, "c_conj")
            spec = WeightFnSpec(
                kind=kind,
                v=v,
                r=r,
                e=e,
                symbol_weights=SymbolWeights(
                    c_f=_take_number(args, "c_f"),
                    c_c=_take_number(args, "c_c"),
                    c_p=_take_number(args, "c_p"),
                    c_v=_take_number(args, "c_v"),
                    c_conj=c_conj,
                ),
            )
        elif kind == KIND_TFIDF:
            doc = _take_name(args, "document mode", DOC_MODES)
            spec = WeightFnSpec(kind=kind, v=v, r=r, e=e, doc_mode=doc)
        elif kind == KIND_PREF:
            spec = WeightFnSpec(
                kind=kind,
                v=v,
                r=r,
                e=e,
                c_match=_take_number(args, "c_match"),
                c_miss=_take_number(args, "c_miss"),
            )
        elif kind in (KIND_LEV, KIND_TED):
            spec = WeightFnSpec(
                kind=kind,
                v=v,
                r=r,
                e=e,
                edit_costs=EditCosts(
                    c_ins=_take_number(args, "c_ins"),
                    c_del=_take_number(args, "c_del"),
                    c_ch=_take_number(args, "c_ch"),
                ),
            )
        else:
            spec = WeightFnSpec(
                kind=kind,
                v=v,
                r=r,
                e=e,
                struct_costs=StructCosts(
                    c_miss=_take_number(args, "c_miss"),
                    c_inst=_take_number(args, "c_inst"),
                    c_gen=_take_number(args, "c_gen"),
                ),
            )
    if args:
        _, text, pos = args[0]
        raise HeuristicError(f"unexpected extra argument {text!r}", pos)
    return CEF(priority=prio, weight=spec)


def parse_heuristic(text: str) -> Heuristic:
    """Parse a heuristic specification string."""
    scanner = _Scanner(text)
    scanner.expect("(")
    items: list[tuple[int, CEF]] = []
    while True:
        kind, lexeme, pos = scanner.next()
        if kind != "number" or "." in lexeme or "/" in lexeme:
            raise HeuristicError(f"expected a repeat count, found {lexeme!r}", pos)
        count = int(lexeme)
        if count < 1:
            raise HeuristicError(f"repeat count must be >= 1, got {count}", pos)
        scanner.expect("*")
        items.append((count, _parse_cef(scanner)))
        kind, lexeme, pos = scanner.next()
        if lexeme == ",":
            continue
        if lexeme == ")":
            break
        raise HeuristicError(f"expected ',' or ')', found {lexeme or 'end'!r}", pos)
    kind, lexeme, pos = scanner.peek()
    if kind != "end":
        raise HeuristicError(f"trailing input {lexeme!r}", pos)
    return Heuristic(tuple(items))


def _format_number(value: int | Fraction) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _format_cef(cef: CEF) -> str:
    spec = cef.weight
    parts = [cef.priority]
    if spec.kind not in (KIND_FIFO, KIND_REF):
        parts.extend([spec.v, spec.r, spec.e])
    if spec.kind in (KIND_REF, KIND_TERM):
        w = spec.symbol_weights
        parts.extend(_format_number(x) for x in (w.c_conj, w.c_f, w.c_c, w.c_p, w.c_v))
    elif spec.kind == KIND_TFIDF:
        parts.append(spec.doc_mode)
    elif spec.kind == KIND_PREF:
        parts.extend(_format_number(x) for x in (spec.c_match, spec.c_miss))
    elif spec.kind in (KIND_LEV, KIND_TED):
        c = spec.edit_costs
        parts.extend(_format_number(x) for x in (c.c_ins, c.c_del, c.c_ch))
    elif spec.kind == KIND_STRUC:
        c = spec.struct_costs
        parts.extend(_format_number(x) for x in (c.c_miss, c.c_inst, c.c_gen))
    return f"{NAME_BY_KIND[spec.kind]}({','.join(parts)})"


def print_heuristic(h: Heuristic) -> str:
    """Canonical specification string; parse_heuristic round-trips it."""
    return "(" + ",".join(f"{n}*{_format_cef(cef)}" for n, cef in h.items) + ")"


def decode_cost_code(code: str, kind: str) -> EditCosts | StructCosts:
    """Decode a three-digit cost code.

    For Lev/Ted the digits are (c_ins, c_del, c_ch); for Struc they are
    (c_miss, c_inst, c_gen).  Each digit must be 1..9.
    """
    if not re.fullmatch(r"[1-9]{3}", code):
        raise ValueError(f"cost code must be three digits 1-9, got {code!r}")
    a, b, c = (int(ch) for ch in code)
    if kind in (KIND_LEV, KIND_TED):
        return EditCosts(c_ins=a, c_del=b, c_ch=c)
    if kind == KIND_STRUC:
        return StructCosts(c_miss=a, c_inst=b, c_gen=c)
    raise ValueError(f"cost codes apply to Lev, Ted, or Struc, not {kind!r}")
