"""Recursive-descent parser for the concrete formula/term syntax.

Grammar (whitespace-insensitive)::

    formula := "~" formula | formula "&" formula | formula "|" formula
             | formula "->" formula | pred "(" terms ")" | term "=" term
             | ("exists"|"forall") ident "." formula | "false" | "(" formula ")"
    term    := ident | ident "(" terms ")" | ("eps"|"tau") ident "." formula
             | "(" term ")"

Precedence ``~`` > ``&`` > ``|`` > ``->``; ``->`` is right-associative; binder
bodies extend maximally to the right.  ``exists``, ``forall``, ``eps``,
``tau`` and ``false`` are reserved words.  Bare identifiers become
:class:`~aieo.syntax.Variable` unless the supplied signature declares them as
constants.
"""

from __future__ import annotations

import re

from .syntax import (
    And,
    Constant,
    Epsilon,
    Equals,
    Exists,
    Falsum,
    Forall,
    FunApp,
    Implies,
    Not,
    Or,
    PredApp,
    Signature,
    Tau,
    Term,
    Variable,
    validate,
)


class ParseError(Exception):
    pass


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>->|[()=~&|.,]))"
)

RESERVED = {"exists", "forall", "eps", "tau", "false"}


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r} at offset {pos}")
        if m.group("ident"):
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Signature | None, constants=()):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.sig = sig
        self.constants = frozenset(sig.constants if sig is not None else constants)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            raise ParseError(f"expected {value!r} but found {tok[1]!r} at offset {tok[2]}")

    def at_op(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] == value

    def at_word(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "ident" and tok[1] == value

    # formulas, lowest precedence first

    def formula(self):
        left = self.disjunction()
        if self.at_op("->"):
            self.next()
            return Implies(left, self.formula())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.at_op("|"):
            self.next()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while self.at_op("&"):
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.at_op("~"):
            self.next()
            return Not(self.unary())
        if self.at_word("exists") or self.at_word("forall"):
            word = self.next()[1]
            var = self.ident()
            self.expect(".")
            body = self.formula()
            return (Exists if word == "exists" else Forall)(var, body)
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if self.at_word("false"):
            self.next()
            return Falsum()
        if self.at_op("("):
            # "(" opens a formula, unless the group turns out to be the term
            # on the left of an equation; backtrack in that case.
            start = self.pos
            try:
                self.next()
                inner = self.formula()
                self.expect(")")
                if self.at_op("="):
                    raise ParseError("parenthesized group is a term")
                return inner
            except ParseError:
                self.pos = start
            lhs = self.term()
            self.expect("=")
            return Equals(lhs, self.term())
        if self.at_word("eps") or self.at_word("tau"):
            lhs = self.term()
            self.expect("=")
            return Equals(lhs, self.term())
        if tok[0] == "ident":
            name = self.next()[1]
            if self.at_op("("):
                args = self.arguments()
                if self.at_op("="):
                    self.next()
                    return Equals(FunApp(name, args), self.term())
                return PredApp(name, args)
            if self.at_op("="):
                self.next()
                return Equals(self.name_term(name), self.term())
            raise ParseError(
                f"bare identifier {name!r} is not a formula (offset {tok[2]})"
            )
        raise ParseError(f"unexpected token {tok[1]!r} at offset {tok[2]}")

    # terms

    def term(self) -> Term:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input, expected a term")
        if self.at_op("("):
            self.next()
            inner = self.term()
            self.expect(")")
            return inner
        if self.at_word("eps") or self.at_word("tau"):
            word = self.next()[1]
            var = self.ident()
            self.expect(".")
            body = self.formula()
            return (Epsilon if word == "eps" else Tau)(var, body)
        if tok[0] == "ident":
            name = self.next()[1]
            if self.at_op("("):
                return FunApp(name, self.arguments())
            return self.name_term(name)
        raise ParseError(f"unexpected token {tok[1]!r} at offset {tok[2]}, expected a term")

    def arguments(self) -> tuple[Term, ...]:
        self.expect("(")
        args: list[Term] = []
        if not self.at_op(")"):
            args.append(self.term())
            while self.at_op(","):
                self.next()
                args.append(self.term())
        self.expect(")")
        return tuple(args)

    def ident(self) -> str:
        tok = self.next()
        if tok[0] != "ident" or tok[1] in RESERVED:
            raise ParseError(f"expected identifier, found {tok[1]!r} at offset {tok[2]}")
        return tok[1]

    def name_term(self, name: str) -> Term:
        if name in RESERVED:
            raise ParseError(f"reserved word {name!r} cannot be a term")
        if name in self.constants:
            return Constant(name)
        return Variable(name)

    def finish(self, node):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing input {tok[1]!r} at offset {tok[2]}")
        if self.sig is not None:
            validate(node, self.sig)
        return node


def parse_formula(text: str, sig: Signature | None = None, constants=()):
    p = _Parser(text, sig, constants)
    return p.finish(p.formula())


def parse_term(text: str, sig: Signature | None = None, constants=()) -> Term:
    p = _Parser(text, sig, constants)
    return p.finish(p.term())


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside parentheses; used for comma-joined formula lists."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]
