"""Sparse multivariate polynomials over the integers with graded generators.

A :class:`Ring` is an ordered declaration of generators, each carrying a
non-negative grading weight.  A :class:`Poly` stores its terms as a dict
from dense exponent tuples (aligned with the ring's generator order) to
nonzero Python ints, so coefficients are arbitrary precision.

Terms print in graded-lex order: higher weighted degree first, ties broken
lexicographically on the exponent tuple with generators in declaration
order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

__all__ = [
    "ANY",
    "INHOMOGENEOUS",
    "Generator",
    "Ring",
    "Poly",
    "PolyParseError",
    "RingMismatchError",
    "graded_degree",
    "poly_mul",
    "poly_parse",
    "parse_ring",
]

ANY = "any"
INHOMOGENEOUS = "inhomogeneous"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    pass


class PolyParseError(ValueError):
    """Raised by :func:`poly_parse`; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int = 1

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 0:
            raise ValueError(f"generator {self.name} needs a non-negative integer degree")


@dataclass(frozen=True)
class Ring:
    gens: tuple[Generator, ...] = ()

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        object.__setattr__(self, "_names", tuple(names))
        object.__setattr__(self, "_degrees", tuple(g.degree for g in gens))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def of(cls, *specs: Union[Generator, tuple[str, int], str]) -> "Ring":
        """Build a ring from generators, ``(name, degree)`` pairs or bare names (degree 1)."""
        gens = []
        for s in specs:
            if isinstance(s, Generator):
                gens.append(s)
            elif isinstance(s, str):
                gens.append(Generator(s, 1))
            else:
                gens.append(Generator(*s))
        return cls(tuple(gens))

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def __len__(self):
        return len(self.gens)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        return self._index[name]

    def extend(self, other: Iterable[Generator]) -> "Ring":
        return Ring(self.gens + tuple(other))

    def __str__(self):
        return ",".join(f"{g.name}:{g.degree}" for g in self.gens)


def parse_ring(src: str) -> Ring:
    """Parse ``"name:degree,name:degree"``; a missing degree means 1."""
    gens = []
    for chunk in src.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, deg = chunk.partition(":")
        name = name.strip()
        try:
            degree = int(deg) if deg.strip() else 1
        except ValueError:
            raise ValueError(f"bad degree in generator declaration {chunk!r}") from None
        gens.append(Generator(name, degree))
    return Ring(tuple(gens))


Coefficient = Union[int, "Poly"]


class Poly:
    """Immutable sparse polynomial with integer coefficients over ``ring``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], int] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            width = len(ring)
            for exps, c in terms.items():
                if len(exps) != width:
                    raise ValueError("exponent tuple does not match ring width")
                if c:
                    clean[tuple(exps)] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        # trusted constructor: terms already canonical (no zeros, right width)
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls._raw(ring, {})

    @classmethod
    def const(cls, ring: Ring, c: int) -> "Poly":
        return cls._raw(ring, {(0,) * len(ring): int(c)} if c else {})

    @classmethod
    def gen(cls, ring: Ring, name: str, power: int = 1) -> "Poly":
        exps = [0] * len(ring)
        exps[ring.index(name)] = power
        return cls._raw(ring, {tuple(exps): 1})

    @classmethod
    def monomial(cls, ring: Ring, powers: Mapping[str, int], coeff: int = 1) -> "Poly":
        exps = [0] * len(ring)
        for name, e in powers.items():
            if e < 0:
                raise ValueError("negative exponent")
            exps[ring.index(name)] = e
        return cls._raw(ring, {tuple(exps): coeff} if coeff else {})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.ring), 0)

    def monomials(self) -> list[tuple[dict[str, int], int]]:
        """Terms in canonical order as (name -> exponent map, coefficient)."""
        names = self.ring.names
        return [
            ({names[i]: e for i, e in enumerate(exps) if e}, c)
            for exps, c in self._sorted_terms()
        ]

    def variables(self) -> set[str]:
        names = self.ring.names
        return {names[i] for exps in self.terms for i, e in enumerate(exps) if e}

    def _sorted_terms(self):
        degs = self.ring.degrees
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(d * e for d, e in zip(degs, item[0])), item[0]),
            reverse=True,
        )

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(
                    f"ring mismatch: [{self.ring}] vs [{other.ring}]"
                )
            return other
        if isinstance(other, int):
            return Poly.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                del out[exps]
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.ring)
            return Poly._raw(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(self.ring, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == (Poly.const(self.ring, other).terms)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- ring changes ------------------------------------------------------

    def lift(self, ring: Ring) -> "Poly":
        """Embed into ``ring``, matching generators by name."""
        if ring is self.ring or ring == self.ring:
            return self
        positions = []
        for i, name in enumerate(self.ring.names):
            used = any(exps[i] for exps in self.terms)
            if name in ring:
                positions.append((i, ring.index(name)))
            elif used:
                raise RingMismatchError(f"generator {name} is not in [{ring}]")
        width = len(ring)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * width
            for i, j in positions:
                new[j] = exps[i]
            out[tuple(new)] = c
        return Poly._raw(ring, out)

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        """Same polynomial over a ring whose generators are renamed."""
        ring = Ring(tuple(Generator(mapping.get(g.name, g.name), g.degree) for g in self.ring.gens))
        return Poly._raw(ring, dict(self.terms))

    def substitute(self, values: Mapping[str, Coefficient]) -> "Poly":
        """Replace generators by integers or polynomials over the same ring."""
        idx = {self.ring.index(n): v for n, v in values.items()}
        result = Poly.zero(self.ring)
        for exps, c in self.terms.items():
            keep = list(exps)
            term = Poly.const(self.ring, c)
            for i, v in idx.items():
                e = exps[i]
                if e:
                    keep[i] = 0
                    term = term * v ** e
            if term:
                term = term * Poly._raw(self.ring, {tuple(keep): 1})
            result = result + term
        return result

    def split(self, names: Iterable[str], rest: Ring) -> dict[tuple[int, ...], "Poly"]:
        """Collect by the exponents of ``names``.

        Returns a map from exponent tuples (ordered as ``names``) to the
        cofactor polynomial, lifted into ``rest``.
        """
        names = tuple(names)
        sel = [self.ring.index(n) for n in names]
        others = [(i, n) for i, n in enumerate(self.ring.names) if n not in names]
        rest_pos = []
        for i, n in others:
            if n in rest:
                rest_pos.append((i, rest.index(n)))
            elif any(exps[i] for exps in self.terms):
                raise RingMismatchError(f"generator {n} is not in [{rest}]")
        width = len(rest)
        groups: dict[tuple[int, ...], dict] = {}
        for exps, c in self.terms.items():
            key = tuple(exps[i] for i in sel)
            sub = [0] * width
            for i, j in rest_pos:
                sub[j] = exps[i]
            bucket = groups.setdefault(key, {})
            bucket[tuple(sub)] = bucket.get(tuple(sub), 0) + c
        out = {}
        for key, bucket in groups.items():
            p = Poly(rest, bucket)
            if p:
                out[key] = p
        return out

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for exps, c in self._sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r})"


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def graded_degree(a: Poly) -> Union[int, str]:
    """Common weighted degree of the terms of ``a``.

    Returns :data:`ANY` for the zero polynomial and :data:`INHOMOGENEOUS`
    when terms disagree.
    """
    if not a.terms:
        return ANY
    degs = a.ring.degrees
    seen = {sum(d * e for d, e in zip(degs, exps)) for exps in a.terms}
    if len(seen) > 1:
        return INHOMOGENEOUS
    return seen.pop()


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(src: str):
    pos = 0
    tokens = []
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            break  # trailing whitespace
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise PolyParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: Ring):
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolyParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise PolyParseError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name", "("):
                raise PolyParseError("implicit multiplication is not allowed; use '*'", tok[2])
            raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "+":
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise PolyParseError("exponent must be a positive integer", tok[2])
            tok = self.take("int")
            e = int(tok[1])
            if e <= 0:
                raise PolyParseError("exponent must be a positive integer", tok[2])
            base = base ** e
        return base

    def atom(self) -> Poly:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Poly.const(self.ring, int(tok[1]))
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.ring:
                raise PolyParseError(f"{tok[1]} is not a ring generator", tok[2])
            return Poly.gen(self.ring, tok[1])
        if tok[0] == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise PolyParseError(f"unexpected {what}", tok[2])


def poly_parse(src: str, ring: Ring | Iterable[Generator]) -> Poly:
    """Parse ``src`` into a canonical :class:`Poly` over ``ring``.

    Grammar: integer literals, declared generator names, ``+ - * ^`` and
    parentheses.  Exponents are positive integer literals and every product
    needs an explicit ``*``.
    """
    if not isinstance(ring, Ring):
        ring = Ring(tuple(ring))
    return _Parser(src, ring).parse()
