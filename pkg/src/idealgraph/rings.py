"""Finite commutative rings as products of local blocks, and their ideal lattices.

A ring is an ordered product of local blocks drawn from a small catalog:

* ``Field(q)`` -- the field GF(q); ideals ``0`` and ``F``.
* ``Chain(q, k)`` -- a chain ring with residue field GF(q) and ``m^k = 0``
  (``Z_{p^k}`` is the prototype); ideals ``R = m^0 > m > ... > m^k = 0``.
* ``VSLocal(q, d)`` -- a local ring with ``m^2 = 0`` and ``m`` a
  ``d``-dimensional vector space over GF(q), ``q`` prime; the ideals below
  ``m`` are exactly the subspaces of GF(q)^d.

Block ideals of ``Field`` and ``Chain`` blocks are stored as the exponent
``e`` of ``m^e`` (a field is a chain of length one).  ``VSLocal`` block
ideals are either :data:`VS_FULL` or a subspace in RREF form.

Ring specs are written in a small grammar::

    spec := term ("x" term)*
    term := "GF(" int ")" | "Z" int | "chain(" int "," int ")" | "vs(" int "," int ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import product
from typing import Iterator, Sequence

from . import linalg
from .caps import IDEAL_CAP, INDEPENDENCE_CAP, check_cap

FIELD = "Field"
CHAIN = "Chain"
VSLOCAL = "VSLocal"

VS_FULL = "R"


class RingSpecError(ValueError):
    """Malformed ring spec string."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` as ``[(p, k), ...]`` with ``p`` increasing."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


@dataclass(frozen=True)
class BlockSpec:
    """One local summand of a ring.

    ``k`` is the nilpotency index of a chain block (1 for a field) and ``d``
    the dimension of the maximal ideal of a ``VSLocal`` block.
    """

    kind: str
    q: int
    k: int = 1
    d: int = 0

    @classmethod
    def field(cls, q: int) -> BlockSpec:
        return cls(FIELD, q)

    @classmethod
    def chain(cls, q: int, k: int) -> BlockSpec:
        return cls.field(q) if k == 1 else cls(CHAIN, q, k)

    @classmethod
    def vs(cls, q: int, d: int) -> BlockSpec:
        return cls.chain(q, 2) if d == 1 else cls(VSLOCAL, q, 1, d)

    def __post_init__(self):
        if self.kind not in (FIELD, CHAIN, VSLOCAL):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind == VSLOCAL:
            if not is_prime(self.q):
                raise ValueError(f"vs block needs a prime q, got {self.q}")
            if self.d < 2:
                raise ValueError("VSLocal blocks need d >= 2 (vs(q,1) is Chain(q,2))")
        else:
            if not is_prime_power(self.q):
                raise ValueError(f"q must be a prime power >= 2, got {self.q}")
            if self.kind == FIELD and (self.k, self.d) != (1, 0):
                raise ValueError("Field blocks carry only q")
            if self.kind == CHAIN and self.k < 2:
                raise ValueError("Chain blocks need k >= 2 (chain(q,1) is Field(q))")

    @property
    def is_field(self) -> bool:
        return self.kind == FIELD

    @property
    def is_chain_like(self) -> bool:
        """Field or Chain: the ideal lattice is a chain."""
        return self.kind != VSLOCAL

    def sort_key(self) -> tuple:
        return ({FIELD: 0, CHAIN: 1, VSLOCAL: 2}[self.kind], self.q, self.k, self.d)

    @cached_property
    def ideals(self) -> tuple:
        """Block ideals from the whole block down to zero."""
        if self.is_chain_like:
            return tuple(range(self.k + 1))
        subs = [s for r in range(self.d, -1, -1) for s in linalg.iter_subspaces(self.q, self.d, r)]
        return (VS_FULL, *subs)

    @property
    def ideal_count(self) -> int:
        if self.is_chain_like:
            return self.k + 1
        return linalg.subspace_count(self.d, self.q) + 1

    @property
    def zero(self):
        return self.k if self.is_chain_like else ()

    @property
    def full(self):
        return 0 if self.is_chain_like else VS_FULL

    def meet(self, x, y):
        if self.is_chain_like:
            return max(x, y)
        if x == VS_FULL:
            return y
        if y == VS_FULL:
            return x
        return linalg.intersect(x, y, self.q, self.d)

    def join(self, x, y):
        if self.is_chain_like:
            return min(x, y)
        if x == VS_FULL or y == VS_FULL:
            return VS_FULL
        return linalg.span_sum(x, y, self.q)

    def product(self, x, y):
        if self.is_chain_like:
            return min(x + y, self.k)
        if x == VS_FULL:
            return y
        if y == VS_FULL:
            return x
        return ()

    def le(self, x, y) -> bool:
        """Containment ``x ⊆ y`` of block ideals."""
        if self.is_chain_like:
            return x >= y
        if y == VS_FULL:
            return True
        if x == VS_FULL:
            return False
        return linalg.contains(y, x, self.q)

    def label(self, x) -> str:
        if self.is_chain_like:
            if x == self.k:
                return "0"
            if x == 0:
                return "F" if self.is_field else "R"
            return f"m^{x}"
        if x == VS_FULL:
            return "R"
        if x == ():
            return "0"
        if len(x) == self.d:
            return "m"
        return "<" + ";".join("".join(map(str, r)) for r in x) + ">"

    def __str__(self) -> str:
        if self.kind == FIELD:
            return f"GF({self.q})"
        if self.kind == CHAIN:
            return f"chain({self.q},{self.k})"
        return f"vs({self.q},{self.d})"


@dataclass(frozen=True)
class RingSpec:
    blocks: tuple[BlockSpec, ...]
    source_text: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a ring needs at least one block")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @classmethod
    def of(cls, *blocks: BlockSpec) -> RingSpec:
        spec = cls(tuple(blocks))
        object.__setattr__(spec, "source_text", spec.canonical_text())
        return spec

    def canonical_text(self) -> str:
        return " x ".join(str(b) for b in self.blocks)

    def __str__(self) -> str:
        return self.source_text or self.canonical_text()

    @property
    def ideal_count(self) -> int:
        return reduce(lambda a, b: a * b.ideal_count, self.blocks, 1)

    @property
    def nontrivial_count(self) -> int:
        return self.ideal_count - 2

    def zero(self) -> Ideal:
        return Ideal(self, tuple(b.zero for b in self.blocks))

    def unit(self) -> Ideal:
        return Ideal(self, tuple(b.full for b in self.blocks))

    def sub(self, indices: Sequence[int]) -> RingSpec:
        """The product of the blocks at ``indices`` (a direct factor)."""
        return RingSpec.of(*(self.blocks[i] for i in indices))

    def axis(self, i: int, coord=None) -> Ideal:
        """The ideal that is ``coord`` (default: the whole block) on block ``i`` and zero elsewhere."""
        b = self.blocks[i]
        coords = [blk.zero for blk in self.blocks]
        coords[i] = b.full if coord is None else coord
        return Ideal(self, tuple(coords))


@dataclass(frozen=True)
class Ideal:
    ring: RingSpec
    coords: tuple

    @property
    def is_zero(self) -> bool:
        return all(c == b.zero for b, c in zip(self.ring.blocks, self.coords))

    @property
    def is_unit(self) -> bool:
        return all(c == b.full for b, c in zip(self.ring.blocks, self.coords))

    @property
    def is_nontrivial(self) -> bool:
        return not (self.is_zero or self.is_unit)

    def label(self) -> str:
        return "(" + ", ".join(b.label(c) for b, c in zip(self.ring.blocks, self.coords)) + ")"

    def project(self, indices: Sequence[int], onto: RingSpec | None = None) -> Ideal:
        onto = onto or self.ring.sub(indices)
        return Ideal(onto, tuple(self.coords[i] for i in indices))

    def __str__(self) -> str:
        return self.label()


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"(GF|chain|vs|Z|x)|(\d+)|([(),])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    pos, out = 0, []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            return out
        m = _TOKEN.match(text, pos)
        if not m:
            raise RingSpecError(f"unexpected character {text[pos]!r}", pos)
        kind = ("word", "int", "punct")[m.lastindex - 1]
        out.append((kind, m.group(), pos))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", len(self.text))

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise RingSpecError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def integer(self, minimum: int, what: str) -> tuple[int, int]:
        _, raw, pos = self.take(kind="int")
        value = int(raw)
        if value < minimum:
            raise RingSpecError(f"{what} must be >= {minimum}, got {value}", pos)
        return value, pos

    def spec(self) -> list[BlockSpec]:
        blocks = self.term()
        while self.peek()[1] == "x":
            self.take("x")
            blocks += self.term()
        tok = self.peek()
        if tok[0] != "eof":
            raise RingSpecError(f"unexpected {tok[1]!r}", tok[2])
        return blocks

    def term(self) -> list[BlockSpec]:
        kind, word, pos = self.peek()
        if kind != "word" or word == "x":
            got = "end of input" if kind == "eof" else repr(word)
            raise RingSpecError(f"expected a ring term, got {got}", pos)
        self.take()
        if word == "Z":
            n, npos = self.integer(2, "n in Zn")
            return [BlockSpec.chain(p, k) for p, k in factorize(n)]
        self.take("(")
        if word == "GF":
            q, qpos = self.integer(2, "q")
            self.take(")")
            if not is_prime_power(q):
                raise RingSpecError(f"GF(q) needs a prime power, got {q}", qpos)
            return [BlockSpec.field(q)]
        q, qpos = self.integer(2, "q")
        self.take(",")
        second, spos = self.integer(1, "k" if word == "chain" else "d")
        self.take(")")
        if word == "chain":
            if not is_prime_power(q):
                raise RingSpecError(f"chain(q,k) needs a prime power q, got {q}", qpos)
            return [BlockSpec.chain(q, second)]
        if not is_prime(q):
            raise RingSpecError(f"vs(q,d) needs a prime q, got {q}", qpos)
        return [BlockSpec.vs(q, second)]


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a ring spec such as ``"Z12"`` or ``"GF(4) x vs(3,2)"`` into canonical form."""
    blocks = _Parser(text).spec()
    return RingSpec(tuple(blocks), source_text=text.strip())


def as_ring(spec: RingSpec | str) -> RingSpec:
    return parse_ring_spec(spec) if isinstance(spec, str) else spec


# ---------------------------------------------------------------- lattice

def enumerate_ideals(spec: RingSpec | str, cap: int = IDEAL_CAP) -> list[Ideal]:
    """All ideals of ``spec``, block-lexicographic from the unit ideal down to zero."""
    spec = as_ring(spec)
    check_cap("ideal count", spec.ideal_count, cap)
    return [Ideal(spec, coords) for coords in product(*(b.ideals for b in spec.blocks))]


def nontrivial_ideals(spec: RingSpec | str, cap: int = IDEAL_CAP) -> list[Ideal]:
    return [a for a in enumerate_ideals(spec, cap) if a.is_nontrivial]


def _same_ring(a: Ideal, b: Ideal) -> RingSpec:
    if a.ring != b.ring:
        raise ValueError(f"ideals of different rings: {a.ring} and {b.ring}")
    return a.ring


def meet(a: Ideal, b: Ideal) -> Ideal:
    """Intersection of two ideals."""
    ring = _same_ring(a, b)
    return Ideal(ring, tuple(blk.meet(x, y) for blk, x, y in zip(ring.blocks, a.coords, b.coords)))


def join(a: Ideal, b: Ideal) -> Ideal:
    """Sum of two ideals."""
    ring = _same_ring(a, b)
    return Ideal(ring, tuple(blk.join(x, y) for blk, x, y in zip(ring.blocks, a.coords, b.coords)))


def product_ideal(a: Ideal, b: Ideal) -> Ideal:
    ring = _same_ring(a, b)
    return Ideal(ring, tuple(blk.product(x, y) for blk, x, y in zip(ring.blocks, a.coords, b.coords)))


def le(a: Ideal, b: Ideal) -> bool:
    """``a ⊆ b``."""
    ring = _same_ring(a, b)
    return all(blk.le(x, y) for blk, x, y in zip(ring.blocks, a.coords, b.coords))


def join_all(members: Sequence[Ideal], ring: RingSpec) -> Ideal:
    return reduce(join, members, ring.zero())


def is_reduced(spec: RingSpec | str) -> bool:
    """True iff the ring has no non-zero nilpotents, i.e. is a product of fields."""
    return all(b.is_field for b in as_ring(spec).blocks)


# ---------------------------------------------------------------- independence

@dataclass(frozen=True)
class IndependentFamily:
    members: tuple[Ideal, ...]
    witness_checked: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def join(self) -> Ideal:
        return join_all(self.members, self.members[0].ring)


def is_independent_family(members: Sequence[Ideal]) -> bool:
    """Each member meets the sum of the others in zero."""
    members = list(members)
    if not members:
        raise ValueError("empty family")
    ring = members[0].ring
    for a in members:
        if a.ring != ring:
            raise ValueError("family mixes ideals of different rings")
        if not a.is_nontrivial:
            raise ValueError(f"family member {a.label()} is not a nontrivial ideal")
    for i, a in enumerate(members):
        rest = join_all(members[:i] + members[i + 1:], ring)
        if not meet(a, rest).is_zero:
            return False
    return True


def join_irreducible(ideals: Sequence[Ideal], spec: RingSpec) -> list[Ideal]:
    """Nontrivial ideals with exactly one lower cover in the full ideal lattice."""
    everything = enumerate_ideals(spec)
    out = []
    for a in ideals:
        below = [b for b in everything if b != a and le(b, a)]
        covers = [b for b in below if not any(c != b and le(b, c) for c in below)]
        if len(covers) == 1:
            out.append(a)
    return out


def iter_independent_families(candidates: Sequence[Ideal], size: int) -> Iterator[IndependentFamily]:
    """Every independent family of ``size`` candidates (as index-increasing tuples).

    A partial family is extended only by ideals meeting its sum in zero; this
    is necessary for independence in any lattice, and each complete family is
    re-checked against the definition before it is yielded.
    """
    if size < 1 or not candidates:
        return
    ring = candidates[0].ring
    zero = ring.zero()

    def extend(start: int, chosen: list[Ideal], total: Ideal):
        if len(chosen) == size:
            if is_independent_family(chosen):
                yield IndependentFamily(tuple(chosen), witness_checked=True)
            return
        for i in range(start, len(candidates) - (size - len(chosen)) + 1):
            c = candidates[i]
            if meet(c, total) == zero:
                chosen.append(c)
                yield from extend(i + 1, chosen, join(total, c))
                chosen.pop()

    yield from extend(0, [], zero)


def find_independent_family(candidates: Sequence[Ideal], size: int) -> IndependentFamily | None:
    return next(iter_independent_families(candidates, size), None)


def max_independent_family(
    spec: RingSpec | str, limit: int, cap: int = INDEPENDENCE_CAP
) -> tuple[int, IndependentFamily]:
    """Largest ``t <= limit`` with ``t`` independent nontrivial ideals, plus a witness.

    Join-irreducible ideals are searched first; when they fall short the
    search is repeated over every nontrivial ideal before concluding.
    """
    spec = as_ring(spec)
    if limit < 1:
        raise ValueError("limit must be >= 1")
    check_cap("nontrivial ideal count", spec.nontrivial_count, cap)
    vertices = nontrivial_ideals(spec)
    if not vertices:
        raise ValueError(f"{spec} has no nontrivial ideals")
    preferred = join_irreducible(vertices, spec)
    best = IndependentFamily((vertices[0],), witness_checked=True)
    for size in range(2, limit + 1):
        found = find_independent_family(preferred, size) or find_independent_family(vertices, size)
        if found is None:
            break
        best = found
    return len(best), best
