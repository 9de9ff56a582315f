"""Polynomial ring descriptors, exponent vectors, and the monomial grammar.

Everything downstream works with a ``Ring`` (named variables partitioned
into contiguous blocks, plus a coefficient characteristic) and plain
integer exponent vectors.  A ``Monomial`` is an exponent vector bound to
its ring; coefficients are never tracked.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, GrammarError, RingMismatchError

Exponents = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Block:
    """A contiguous, named slice of a ring's variables."""

    name: str
    start: int
    stop: int

    def __post_init__(self):
        if self.stop <= self.start:
            raise DomainError(f"block {self.name!r} has no variables")

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class Ring:
    """An ambient polynomial ring k[variables] with named variable blocks.

    A plain ring has a single block covering all variables.  A tensor ring
    concatenates the blocks of its factors, so block-restricted operations
    (maximal ideal of one factor, embeddings) stay well-defined.
    """

    name: str
    variables: tuple[str, ...]
    blocks: tuple[Block, ...] = ()
    characteristic: int = 0

    def __post_init__(self):
        if not self.variables:
            raise DomainError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            dup = next(v for i, v in enumerate(self.variables) if v in self.variables[:i])
            raise GrammarError(f"duplicate variable name {dup!r}")
        if not self.blocks:
            object.__setattr__(self, "blocks", (Block(self.name, 0, len(self.variables)),))
        names = [b.name for b in self.blocks]
        if len(set(names)) != len(names):
            raise DomainError("duplicate block names")
        pos = 0
        for b in self.blocks:
            if b.start != pos:
                raise DomainError("blocks must tile the variables contiguously")
            pos = b.stop
        if pos != len(self.variables):
            raise DomainError("blocks must cover all variables")
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise DomainError(f"characteristic must be 0 or prime, got {self.characteristic}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def block(self, name: str) -> Block:
        for b in self.blocks:
            if b.name == name:
                return b
        raise DomainError(f"ring {self.name!r} has no block {name!r}")

    def block_names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.blocks)

    def variable_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise GrammarError(f"unknown variable {name!r} in ring {self.name!r}") from None

    def zero_exponents(self) -> Exponents:
        return (0,) * self.nvars

    def __str__(self) -> str:
        return f"{self.name} = k[{', '.join(self.variables)}]"


def tensor_ring(name: str, left: Ring, right: Ring, characteristic: int | None = None) -> Ring:
    """Concatenate two rings into their tensor product, keeping both block lists."""
    if characteristic is None:
        if left.characteristic != right.characteristic:
            raise RingMismatchError(
                f"cannot tensor rings of characteristic {left.characteristic} and "
                f"{right.characteristic}"
            )
        characteristic = left.characteristic
    clash = set(left.variables) & set(right.variables)
    if clash:
        raise GrammarError(f"tensor factors share variable names {sorted(clash)}")
    shift = left.nvars
    blocks = left.blocks + tuple(Block(b.name, b.start + shift, b.stop + shift) for b in right.blocks)
    bnames = [b.name for b in blocks]
    if len(set(bnames)) != len(bnames):
        dup = sorted({n for n in bnames if bnames.count(n) > 1})
        raise GrammarError(f"tensor factors share block names {dup}")
    return Ring(name, left.variables + right.variables, blocks, characteristic)


def sort_key(exponents: Exponents) -> tuple[int, Exponents]:
    """Canonical comparison key: total degree first, then lex on exponents.

    Listings sort descending on this key, so x^2 precedes x*y precedes y^2.
    """
    return (sum(exponents), exponents)


def canonical_order(vectors) -> list[Exponents]:
    return sorted(vectors, key=sort_key, reverse=True)


@dataclass(frozen=True, order=False)
class Monomial:
    """A monomial identified with its exponent vector in a fixed ring."""

    ring: Ring
    exponents: Exponents

    def __post_init__(self):
        if len(self.exponents) != self.ring.nvars:
            raise DomainError(
                f"exponent vector of length {len(self.exponents)} in a "
                f"{self.ring.nvars}-variable ring"
            )
        if any(e < 0 for e in self.exponents):
            raise DomainError("negative exponent")

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> tuple[str, ...]:
        return tuple(v for v, e in zip(self.ring.variables, self.exponents) if e > 0)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def _check_ring(self, other: "Monomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("monomials live in different rings")

    def divides(self, other: "Monomial") -> bool:
        self._check_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for v, e in zip(self.ring.variables, self.exponents):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)


def monomial_divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    return u.lcm(v)


_RING_RE = re.compile(
    r"^\s*ring\s+(?P<name>[A-Za-z_]\w*)\s*=\s*\[(?P<vars>[^\]]*)\]\s*;?\s*$"
)
_NAME_RE = re.compile(r"^[A-Za-z_]\w*$")


def parse_ring(text: str, characteristic: int = 0) -> Ring:
    """Parse a single ``ring Name = [v1, v2, ...];`` declaration."""
    m = _RING_RE.match(text)
    if m is None:
        raise GrammarError(f"malformed ring declaration: {text.strip()!r}")
    names = [v.strip() for v in m.group("vars").split(",") if v.strip()]
    if not names:
        raise GrammarError("ring declaration lists no variables")
    for v in names:
        if not _NAME_RE.match(v):
            raise GrammarError(f"bad variable name {v!r}")
    return Ring(m.group("name"), tuple(names), characteristic=characteristic)


_MONO_TOKEN = re.compile(r"\s*([A-Za-z_]\w*|\^|\*|\d+)\s*")


def parse_monomial(ring: Ring, text: str) -> Monomial:
    """Parse ``a^2*b`` style monomial text; ``1`` denotes the unit monomial."""
    exps = [0] * ring.nvars
    pos = 0
    expect_factor = True
    saw_factor = False
    while pos < len(text):
        m = _MONO_TOKEN.match(text, pos)
        if m is None:
            raise GrammarError(f"bad monomial syntax in {text!r}", position=pos)
        tok = m.group(1)
        pos = m.end()
        if tok == "*":
            if expect_factor:
                raise GrammarError(f"misplaced '*' in {text!r}", position=pos)
            expect_factor = True
            continue
        if tok == "^":
            raise GrammarError(f"misplaced '^' in {text!r}", position=pos)
        if not expect_factor:
            raise GrammarError(f"missing '*' before {tok!r} in {text!r}", position=pos)
        if tok.isdigit():
            if tok != "1":
                raise GrammarError(f"numeric factor {tok!r} is not a monomial", position=pos)
            # the unit factor contributes nothing
        else:
            idx = ring.variable_index(tok)
            power = 1
            m2 = _MONO_TOKEN.match(text, pos)
            if m2 is not None and m2.group(1) == "^":
                pos = m2.end()
                m3 = _MONO_TOKEN.match(text, pos)
                if m3 is None or not m3.group(1).isdigit():
                    raise GrammarError(f"expected integer exponent in {text!r}", position=pos)
                power = int(m3.group(1))
                if power < 0:
                    raise GrammarError("negative exponent", position=pos)
                pos = m3.end()
            exps[idx] += power
        expect_factor = False
        saw_factor = True
    if expect_factor or not saw_factor:
        raise GrammarError(f"empty or dangling monomial in {text!r}")
    return Monomial(ring, tuple(exps))
