"""Parser and evaluator for ideal-definition files.

Statement grammar (UTF-8 text, ``;``-terminated, ``#`` comments):

    ring <Name> = [v1, v2, ...];
    tensor <Name> = <RingName> (*) <RingName>;
    <Name> = ideal(<RingName>; m1, m2, ...);
    <Name> = maxideal(<RingName or BlockName>);
    <Name> = <expression>;

Expressions combine named ideals with ``+`` (sum), ``*`` (product),
``^ k`` (power), ``&`` (intersection), ``A : B`` (quotient, loosest
binding), the calls ``fiber(A, B)``, ``dstar(A)``, ``component(A, d)``,
``ideal(R; ...)`` and ``maxideal(R)``, and parentheses.  Bare variable
names act as principal ideals.  Binary operations between ideals over two
factor rings are lifted into a declared tensor ring containing both as
blocks, when there is exactly one such ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import Monomial, Ring, parse_monomial, tensor_ring
from .errors import GrammarError, RingMismatchError
from .fiber import fiber_product
from .ideals import MonomialIdeal, component_ideal, maxideal_power, star_derivative, tensor_embed

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<int>\d+)|(?P<tensorop>\(\*\))|"
    r"(?P<sym>[=\[\],;()+*^:&])|(?P<bad>\S))"
)


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    # strip comments line by line, preserving offsets via padding
    cleaned = []
    for line in text.split("\n"):
        cut = line.find("#")
        cleaned.append(line if cut < 0 else line[:cut] + " " * (len(line) - cut))
    src = "\n".join(cleaned)
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            break
        if m.group("bad"):
            raise GrammarError(f"unexpected character {m.group('bad')!r}", position=m.start("bad"))
        for kind in ("name", "int", "tensorop", "sym"):
            if m.group(kind):
                tokens.append(_Token(kind, m.group(kind), m.start(kind)))
                break
        pos = m.end()
    return tokens


@dataclass
class Environment:
    """Named rings and ideals built up by a definition file."""

    rings: dict[str, Ring] = field(default_factory=dict)
    ideals: dict[str, MonomialIdeal] = field(default_factory=dict)
    characteristic: int = 0

    def ring(self, name: str) -> Ring:
        if name not in self.rings:
            raise GrammarError(f"unknown ring {name!r}")
        return self.rings[name]

    def ideal(self, name: str) -> MonomialIdeal:
        if name not in self.ideals:
            raise GrammarError(f"unknown ideal {name!r}")
        return self.ideals[name]


class _Parser:
    def __init__(self, tokens: list[_Token], env: Environment):
        self.tokens = tokens
        self.env = env
        self.i = 0

    # -- token plumbing -----------------------------------------------

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise GrammarError("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise GrammarError(f"expected {text!r}, found {tok.text!r}", position=tok.pos)
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.text == text

    # -- statements ----------------------------------------------------

    def statements(self) -> None:
        while self.peek() is not None:
            self.statement()

    def statement(self) -> None:
        tok = self.peek()
        if tok.kind != "name":
            raise GrammarError(f"expected a statement, found {tok.text!r}", position=tok.pos)
        if tok.text == "ring":
            self.ring_statement()
        elif tok.text == "tensor":
            self.tensor_statement()
        else:
            self.assignment()

    def ring_statement(self) -> None:
        self.expect("ring")
        name = self.next()
        if name.kind != "name":
            raise GrammarError("expected a ring name", position=name.pos)
        self.expect("=")
        self.expect("[")
        variables = []
        while True:
            v = self.next()
            if v.kind != "name":
                raise GrammarError("expected a variable name", position=v.pos)
            variables.append(v.text)
            if self.at("]"):
                self.next()
                break
            self.expect(",")
        self.expect(";")
        if name.text in self.env.rings or name.text in self.env.ideals:
            raise GrammarError(f"name {name.text!r} is already bound", position=name.pos)
        self.env.rings[name.text] = Ring(
            name.text, tuple(variables), characteristic=self.env.characteristic
        )

    def tensor_statement(self) -> None:
        self.expect("tensor")
        name = self.next()
        self.expect("=")
        left = self.next()
        op = self.next()
        if op.kind != "tensorop":
            raise GrammarError("expected '(*)' in tensor declaration", position=op.pos)
        right = self.next()
        self.expect(";")
        if name.text in self.env.rings or name.text in self.env.ideals:
            raise GrammarError(f"name {name.text!r} is already bound", position=name.pos)
        self.env.rings[name.text] = tensor_ring(
            name.text, self.env.ring(left.text), self.env.ring(right.text)
        )

    def assignment(self) -> None:
        name = self.next()
        self.expect("=")
        value = self.expression()
        self.expect(";")
        if name.text in self.env.rings or name.text in self.env.ideals:
            raise GrammarError(f"name {name.text!r} is already bound", position=name.pos)
        self.env.ideals[name.text] = value

    # -- expressions -----------------------------------------------------
    # precedence: ':' < '+' < '&' < '*' < '^' < atoms

    def expression(self) -> MonomialIdeal:
        left = self.sum_expr()
        while self.at(":"):
            self.next()
            right = self.sum_expr()
            left, right = self.align(left, right)
            left = left.colon(right)
        return left

    def sum_expr(self) -> MonomialIdeal:
        left = self.meet_expr()
        while self.at("+"):
            self.next()
            right = self.meet_expr()
            left, right = self.align(left, right)
            left = left + right
        return left

    def meet_expr(self) -> MonomialIdeal:
        left = self.product_expr()
        while self.at("&"):
            self.next()
            right = self.product_expr()
            left, right = self.align(left, right)
            left = left & right
        return left

    def product_expr(self) -> MonomialIdeal:
        left = self.power_expr()
        while self.at("*"):
            self.next()
            right = self.power_expr()
            left, right = self.align(left, right)
            left = left * right
        return left

    def power_expr(self) -> MonomialIdeal:
        base = self.atom()
        while self.at("^"):
            self.next()
            exp = self.next()
            if exp.kind != "int":
                raise GrammarError("expected an integer exponent", position=exp.pos)
            base = base ** int(exp.text)
        return base

    def atom(self) -> MonomialIdeal:
        tok = self.next()
        if tok.text == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        if tok.kind == "int":
            if tok.text == "0":
                raise GrammarError(
                    "a bare 0 has no ring; use ideal(R;) for the zero ideal", position=tok.pos
                )
            raise GrammarError(f"unexpected number {tok.text!r}", position=tok.pos)
        if tok.kind != "name":
            raise GrammarError(f"unexpected token {tok.text!r}", position=tok.pos)
        if tok.text == "ideal":
            return self.ideal_call()
        if tok.text == "maxideal":
            return self.maxideal_call()
        if tok.text == "fiber":
            return self.fiber_call()
        if tok.text == "dstar":
            self.expect("(")
            arg = self.expression()
            self.expect(")")
            return star_derivative(arg)
        if tok.text == "component":
            self.expect("(")
            arg = self.expression()
            self.expect(",")
            deg = self.next()
            if deg.kind != "int":
                raise GrammarError("expected an integer degree", position=deg.pos)
            self.expect(")")
            return component_ideal(arg, int(deg.text))
        if tok.text in self.env.ideals:
            return self.env.ideals[tok.text]
        # bare variable of a unique ring: a principal ideal
        owners = [
            ring for ring in self.env.rings.values() if tok.text in ring.variables
        ]
        base_owners = [r for r in owners if len(r.blocks) == 1]
        pick = base_owners[0] if len(base_owners) == 1 else (
            owners[0] if len(owners) == 1 else None
        )
        if pick is not None:
            mono = parse_monomial(pick, tok.text)
            return MonomialIdeal(pick, (mono.exponents,))
        raise GrammarError(f"unknown name {tok.text!r}", position=tok.pos)

    def ideal_call(self) -> MonomialIdeal:
        self.expect("(")
        rname = self.next()
        ring = self.env.ring(rname.text)
        self.expect(";")
        gens: list[Monomial] = []
        if self.at(")"):
            self.next()
            return MonomialIdeal.zero(ring)
        while True:
            gens.append(self.monomial_literal(ring))
            if self.at(")"):
                self.next()
                break
            self.expect(",")
        return MonomialIdeal.from_monomials(gens)

    def monomial_literal(self, ring: Ring) -> Monomial:
        parts = []
        while True:
            tok = self.next()
            if tok.kind == "int" and tok.text == "1" and not parts:
                parts.append("1")
            elif tok.kind == "name":
                parts.append(tok.text)
            else:
                raise GrammarError(f"bad monomial term {tok.text!r}", position=tok.pos)
            if self.at("^"):
                self.next()
                e = self.next()
                if e.kind != "int":
                    raise GrammarError("expected an integer exponent", position=e.pos)
                parts.append(f"^{e.text}")
            if self.at("*"):
                self.next()
                parts.append("*")
                continue
            break
        return parse_monomial(ring, "".join(parts))

    def maxideal_call(self) -> MonomialIdeal:
        self.expect("(")
        rname = self.next()
        self.expect(")")
        if rname.text in self.env.rings:
            return maxideal_power(self.env.ring(rname.text), None, 1)
        # a block of some declared tensor ring
        hosts = [
            ring
            for ring in self.env.rings.values()
            if len(ring.blocks) > 1 and rname.text in ring.block_names()
        ]
        if len(hosts) == 1:
            return maxideal_power(hosts[0], rname.text, 1)
        raise GrammarError(f"unknown ring or block {rname.text!r}", position=rname.pos)

    def fiber_call(self) -> MonomialIdeal:
        self.expect("(")
        a = self.expression()
        self.expect(",")
        b = self.expression()
        self.expect(")")
        setup = fiber_product(a, b)
        # reuse a declared tensor ring when one matches, so the result
        # combines with other ideals of that ring
        for ring in self.env.rings.values():
            if (
                len(ring.blocks) == 2
                and ring.variables == setup.T.variables
                and ring.block_names() == (a.ring.name, b.ring.name)
            ):
                return MonomialIdeal(ring, setup.F.gens)
        return setup.F

    # -- ring alignment ---------------------------------------------------

    def align(
        self, left: MonomialIdeal, right: MonomialIdeal
    ) -> tuple[MonomialIdeal, MonomialIdeal]:
        """Lift operands into a common declared tensor ring when needed."""
        if left.ring == right.ring:
            return left, right

        def lift(ideal: MonomialIdeal, ring: Ring) -> MonomialIdeal:
            return ideal if ideal.ring == ring else tensor_embed(ideal, ring)

        candidates = []
        for ring in self.env.rings.values():
            try:
                lifted = (lift(left, ring), lift(right, ring))
            except Exception:
                continue
            candidates.append(lifted)
        if len(candidates) == 1:
            return candidates[0]
        if not candidates:
            raise RingMismatchError(
                f"operands live in {left.ring.name!r} and {right.ring.name!r} "
                "with no declared tensor ring containing both"
            )
        raise RingMismatchError(
            f"operands live in {left.ring.name!r} and {right.ring.name!r}; "
            "several declared tensor rings contain both, lift explicitly"
        )


def load_definitions(text: str, characteristic: int = 0) -> Environment:
    env = Environment(characteristic=characteristic)
    parser = _Parser(_tokenize(text), env)
    parser.statements()
    return env


def load_file(path: str, characteristic: int = 0) -> Environment:
    with open(path, "r", encoding="utf-8") as fh:
        return load_definitions(fh.read(), characteristic)


def eval_expression(env: Environment, text: str) -> MonomialIdeal:
    parser = _Parser(_tokenize(text), env)
    value = parser.expression()
    if parser.peek() is not None:
        tok = parser.peek()
        raise GrammarError(f"trailing input {tok.text!r}", position=tok.pos)
    return value
