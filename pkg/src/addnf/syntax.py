"""Formula ASTs, connective signatures, and the s-expression front-end.

Surface grammar (UTF-8 text)::

    formula := prop | (not f) | (and f f) | (or f f) | (<conn> f ... f)

Guarded quantifiers are spelled ``(ex (<vars>) <guard-atom> <body>)``.
``(imp f g)`` and ``(iff f g)`` are accepted as sugar and expanded at parse
time (``imp`` to ``(or (not f) g)``); the AST never stores them.

Everything here is an immutable value: formulas, signatures and logic
definitions can be shared freely across threads once constructed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from .errors import DomainViolation, ParseError, UnknownSymbolError

PROPOSITIONAL = "propositional"
NON_PROPOSITIONAL = "non-propositional"

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_'.-]*")


@dataclass(frozen=True)
class GuardPayload:
    """Payload of a guarded quantifier: bound variables plus the guard atom.

    ``guard`` is the proposition id of the guard atom (its canonical
    rendering, e.g. ``(R u v)``); ``bound`` is the sorted tuple of bound
    variables.
    """

    bound: tuple[str, ...]
    guard: str


@dataclass(frozen=True)
class ConnectiveSig:
    """Signature of a connective: spelling, rank, and optional payload."""

    name: str
    rank: int
    kind: str = NON_PROPOSITIONAL
    payload: GuardPayload | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"connective {self.name!r} must have rank >= 1")

    @property
    def key(self) -> str:
        """Canonical identifier; also the key used in JSON maps and CLI flags."""
        if self.payload is not None:
            bound = " ".join(self.payload.bound)
            return f"({self.name} ({bound}) {self.payload.guard})"
        return self.name

    @property
    def carried_props(self) -> frozenset[str]:
        """Propositions mentioned by the connective itself (guard atoms)."""
        if self.payload is not None:
            return frozenset((self.payload.guard,))
        return frozenset()


NOT_SIG = ConnectiveSig("not", 1, kind=PROPOSITIONAL)
AND_SIG = ConnectiveSig("and", 2, kind=PROPOSITIONAL)
OR_SIG = ConnectiveSig("or", 2, kind=PROPOSITIONAL)


class Formula:
    """Base class for AST nodes."""


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class App(Formula):
    """Application of a non-propositional connective to ``rank`` arguments."""

    conn: ConnectiveSig
    args: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.conn.kind != NON_PROPOSITIONAL:
            raise ValueError("App nodes are reserved for non-propositional connectives")
        if len(self.args) != self.conn.rank:
            raise ValueError(
                f"{self.conn.key} has rank {self.conn.rank}, got {len(self.args)} arguments"
            )


def depth(f: Formula) -> int:
    """Nesting depth of non-propositional connectives in ``f``."""
    if isinstance(f, Prop):
        return 0
    if isinstance(f, Not):
        return depth(f.child)
    if isinstance(f, (And, Or)):
        return max(depth(f.left), depth(f.right))
    if isinstance(f, App):
        return 1 + max(depth(a) for a in f.args)
    raise TypeError(f"not a formula: {f!r}")


def vocabulary(f: Formula) -> tuple[frozenset[str], frozenset[ConnectiveSig]]:
    """The propositions and non-propositional connectives occurring in ``f``.

    Guard atoms carried by quantifier payloads count as occurring
    propositions: they are part of the written formula.
    """
    props: set[str] = set()
    conns: set[ConnectiveSig] = set()

    def walk(g: Formula) -> None:
        if isinstance(g, Prop):
            props.add(g.name)
        elif isinstance(g, Not):
            walk(g.child)
        elif isinstance(g, (And, Or)):
            walk(g.left)
            walk(g.right)
        elif isinstance(g, App):
            conns.add(g.conn)
            props.update(g.conn.carried_props)
            for a in g.args:
                walk(a)
        else:
            raise TypeError(f"not a formula: {g!r}")

    walk(f)
    return frozenset(props), frozenset(conns)


def conj_all(items) -> Formula:
    """Conjunction of a non-empty sequence, in the given order.

    Folded as a balanced tree so very long conjunctions stay shallow.
    """
    return _fold(And, list(items))


def disj_all(items) -> Formula:
    """Disjunction of a non-empty sequence, in the given order."""
    return _fold(Or, list(items))


def _fold(node, items):
    if not items:
        raise ValueError("cannot fold an empty sequence of formulas")
    if len(items) == 1:
        return items[0]
    mid = (len(items) + 1) // 2
    return node(_fold(node, items[:mid]), _fold(node, items[mid:]))


@dataclass
class LogicDef:
    """One logic instance: signature, spellings, domain system and oracle.

    ``propositions`` controls which bare tokens parse as propositions:
    ``None`` accepts any identifier (an intensionally infinite universe),
    a frozenset restricts to the given ids, a callable is used as a
    predicate.  ``special_forms`` maps reserved heads (``ex``) to parse
    hooks; ``compound_form`` handles otherwise-unknown heads (relational
    atoms); ``token_form`` may rewrite bare tokens before proposition
    lookup (algebraic ``0``/``1``).
    """

    name: str
    domain: object
    connectives: dict[str, ConnectiveSig] = field(default_factory=dict)
    oracle: object | None = None
    propositions: object | None = None
    spell_not: str = "not"
    spell_and: str = "and"
    spell_or: str = "or"
    sugar: bool = True
    special_forms: dict[str, Callable] = field(default_factory=dict)
    compound_form: Callable | None = None
    token_form: Callable | None = None

    def accepts_prop(self, token: str) -> bool:
        if self.propositions is None:
            return bool(IDENT_RE.fullmatch(token))
        if callable(self.propositions):
            return bool(self.propositions(token))
        return token in self.propositions

    def non_propositional(self) -> list[ConnectiveSig]:
        return sorted(self.connectives.values(), key=lambda c: c.key)


# ---------------------------------------------------------------------------
# Parsing


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"[()]|[^()\s]+")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, start = 1, 0
    for m in _TOKEN_RE.finditer(text):
        nl = text.count("\n", start, m.start())
        if nl:
            line += nl
            start = text.rfind("\n", start, m.start()) + 1
        tokens.append(_Token(m.group(), line, m.start() - start + 1))
    return tokens


class _Reader:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def eof(self) -> bool:
        return self.pos >= len(self.tokens)

    def read(self):
        """Read one node: a _Token or a list whose first element is '(' token."""
        if self.eof():
            raise ParseError("unexpected end of input")
        tok = self.tokens[self.pos]
        self.pos += 1
        if tok.text == ")":
            raise ParseError("unexpected ')'", tok.line, tok.col)
        if tok.text != "(":
            return tok
        items = [tok]
        while True:
            if self.eof():
                raise ParseError("missing ')'", tok.line, tok.col)
            if self.tokens[self.pos].text == ")":
                self.pos += 1
                return items
            items.append(self.read())


def _node_pos(node):
    tok = node[0] if isinstance(node, list) else node
    return tok.line, tok.col


def parse_formula(text: str, logic: LogicDef) -> Formula:
    """Parse s-expression ``text`` into a validated formula of ``logic``."""
    reader = _Reader(text)
    node = reader.read()
    if not reader.eof():
        extra = reader.tokens[reader.pos]
        raise ParseError("unexpected trailing input", extra.line, extra.col)
    return _interpret(node, logic)


def _interpret(node, logic: LogicDef) -> Formula:
    if isinstance(node, _Token):
        return _interpret_token(node, logic)
    items = node[1:]
    if not items:
        raise ParseError("empty expression", *_node_pos(node))
    head = items[0]
    if isinstance(head, list):
        raise ParseError("expected a connective name", *_node_pos(head))
    h = head.text
    args = items[1:]
    if h == logic.spell_not:
        _expect_arity(h, args, 1, head)
        return Not(_interpret(args[0], logic))
    if h == logic.spell_and:
        _expect_arity(h, args, 2, head)
        return And(_interpret(args[0], logic), _interpret(args[1], logic))
    if h == logic.spell_or:
        _expect_arity(h, args, 2, head)
        return Or(_interpret(args[0], logic), _interpret(args[1], logic))
    if logic.sugar and h == "imp":
        _expect_arity(h, args, 2, head)
        a, b = (_interpret(x, logic) for x in args)
        return Or(Not(a), b)
    if logic.sugar and h == "iff":
        _expect_arity(h, args, 2, head)
        a, b = (_interpret(x, logic) for x in args)
        return And(Or(Not(a), b), Or(Not(b), a))
    if h in logic.special_forms:
        return logic.special_forms[h](args, lambda n: _interpret(n, logic), head)
    sig = logic.connectives.get(h)
    if sig is not None:
        _expect_arity(h, args, sig.rank, head)
        parsed = tuple(_interpret(a, logic) for a in args)
        _check_domain(sig, parsed, logic, head)
        return App(sig, parsed)
    if logic.compound_form is not None:
        result = logic.compound_form(h, args, head)
        if result is not None:
            return result
    raise UnknownSymbolError(f"unknown connective {h!r}", head.line, head.col)


def _interpret_token(tok: _Token, logic: LogicDef) -> Formula:
    if logic.token_form is not None:
        result = logic.token_form(tok.text)
        if result is not None:
            return result
    if logic.accepts_prop(tok.text):
        return Prop(tok.text)
    raise UnknownSymbolError(f"unknown proposition {tok.text!r}", tok.line, tok.col)


def _expect_arity(head, args, rank, tok):
    if len(args) != rank:
        raise ParseError(f"{head!r} takes {rank} argument(s), got {len(args)}", tok.line, tok.col)


def _check_domain(sig: ConnectiveSig, args, logic: LogicDef, tok) -> None:
    ds = logic.domain
    if ds is None:
        return
    failures = ds.domain_failures(sig, args)
    if failures:
        i, it, border = failures[0]
        raise DomainViolation(
            f"argument {i} of {sig.key} is outside its domain: "
            f"iota={sorted(it)} is not a subset of j2={sorted(border)}"
        )


def validate_domains(f: Formula, ds) -> None:
    """Re-check every App node of ``f`` against the domain predicate."""
    if isinstance(f, Not):
        validate_domains(f.child, ds)
    elif isinstance(f, (And, Or)):
        validate_domains(f.left, ds)
        validate_domains(f.right, ds)
    elif isinstance(f, App):
        failures = ds.domain_failures(f.conn, f.args)
        if failures:
            i, it, border = failures[0]
            raise DomainViolation(
                f"argument {i} of {f.conn.key} is outside its domain: "
                f"iota={sorted(it)} is not a subset of j2={sorted(border)}"
            )
        for a in f.args:
            validate_domains(a, ds)


# ---------------------------------------------------------------------------
# Printing


def render_formula(f: Formula, logic: LogicDef | None = None) -> str:
    """Deterministic rendering; ``parse_formula(render_formula(f)) == f``."""
    sn = logic.spell_not if logic else "not"
    sa = logic.spell_and if logic else "and"
    so = logic.spell_or if logic else "or"

    def r(g: Formula) -> str:
        if isinstance(g, Prop):
            return g.name
        if isinstance(g, Not):
            return f"({sn} {r(g.child)})"
        if isinstance(g, And):
            return f"({sa} {r(g.left)} {r(g.right)})"
        if isinstance(g, Or):
            return f"({so} {r(g.left)} {r(g.right)})"
        if isinstance(g, App):
            if g.conn.payload is not None:
                bound = " ".join(g.conn.payload.bound)
                inner = " ".join(r(a) for a in g.args)
                return f"({g.conn.name} ({bound}) {g.conn.payload.guard} {inner})"
            inner = " ".join(r(a) for a in g.args)
            return f"({g.conn.name} {inner})"
        raise TypeError(f"not a formula: {g!r}")

    return r(f)
