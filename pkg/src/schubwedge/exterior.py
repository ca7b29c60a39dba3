"""The module M(p) = XA[X]/pA[X] and its exterior powers.

``ε^i`` is the class of ``X^i``; ``ε^1, ..., ε^n`` form a basis when p is
monic of degree n.  Out-of-range indices are rewritten with the relation
``ε^m = -(c_1 ε^{m-1} + ... + c_n ε^{m-n})`` for ``p = X^n + c_1 X^{n-1} + ... + c_n``.

A free module (p = 0) is modelled with a caller-supplied truncation bound;
anything that would land past the bound raises :class:`TruncationError`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .coeff import Generator, Poly, Ring, poly_parse

__all__ = [
    "IndexTuple",
    "ModuleSpec",
    "MultiVector",
    "TruncationError",
    "basis_tuples",
    "check_index_tuple",
    "normalize_wedge",
    "reduce_index",
    "sort_with_sign",
    "tuples_of_weight",
    "weight",
]

IndexTuple = tuple[int, ...]

_RESERVED = re.compile(r"(X|[TD]\d+)\Z")


class TruncationError(ArithmeticError):
    """An index exceeded the truncation bound of a free module."""


@dataclass(frozen=True)
class ModuleSpec:
    """Rank and defining polynomial of M(p), plus the coefficient ring.

    ``coeffs`` holds ``(c_1, ..., c_n)`` for ``p = X^n + c_1 X^{n-1} + ... + c_n``.
    For the free module ``n`` is None, ``coeffs`` is empty and ``bound``
    is the truncation bound N.
    """

    ring: Ring
    n: int | None
    coeffs: tuple[Poly, ...] = ()
    bound: int | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name in self.ring.names:
            if _RESERVED.match(name):
                raise ValueError(f"{name} is reserved and cannot be a ring generator")
        if self.n is None:
            if self.coeffs:
                raise ValueError("the free module takes no coefficients")
            if not isinstance(self.bound, int) or self.bound < 1:
                raise ValueError("the free module needs a truncation bound N >= 1")
        else:
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError("n must be a positive integer")
            coeffs = tuple(
                c if isinstance(c, Poly) else Poly.const(self.ring, c) for c in self.coeffs
            )
            if len(coeffs) != self.n:
                raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
            for c in coeffs:
                if c.ring != self.ring:
                    raise ValueError("coefficient is not over the declared ring")
            object.__setattr__(self, "coeffs", coeffs)
            object.__setattr__(self, "bound", None)

    # -- constructors --------------------------------------------------------

    @classmethod
    def classical(cls, n: int) -> "ModuleSpec":
        """p = X^n over the integers."""
        ring = Ring()
        return cls(ring, n, tuple(Poly.zero(ring) for _ in range(n)))

    @classmethod
    def quantum(cls, n: int, name: str = "q") -> "ModuleSpec":
        """p = X^n + q, with q of degree n."""
        ring = Ring((Generator(name, n),))
        coeffs = [Poly.zero(ring)] * (n - 1) + [Poly.gen(ring, name)]
        return cls(ring, n, tuple(coeffs))

    @classmethod
    def generic(cls, n: int, prefix: str = "c") -> "ModuleSpec":
        """p = X^n + c1 X^{n-1} + ... + cn with symbolic ci of degree i."""
        ring = Ring(tuple(Generator(f"{prefix}{i}", i) for i in range(1, n + 1)))
        return cls(ring, n, tuple(Poly.gen(ring, f"{prefix}{i}") for i in range(1, n + 1)))

    @classmethod
    def free(cls, bound: int, ring: Ring | None = None) -> "ModuleSpec":
        return cls(ring if ring is not None else Ring(), None, (), bound)

    @classmethod
    def from_polynomial(cls, src: str, ring: Ring | None = None, n: int | None = None) -> "ModuleSpec":
        """Parse ``src`` as a polynomial in X over ``ring``.

        The result must be monic; if ``n`` is given the degree must match.
        """
        ring = ring if ring is not None else Ring()
        if "X" in ring:
            raise ValueError("X is reserved and cannot be a ring generator")
        xring = Ring((Generator("X", 1),) + ring.gens)
        p = poly_parse(src, xring)
        return cls.from_x_poly(p, ring, n)

    @classmethod
    def from_x_poly(cls, p: Poly, ring: Ring, n: int | None = None) -> "ModuleSpec":
        by_power = p.split(("X",), ring)
        if not by_power:
            raise ValueError("p = 0 describes the free module; use ModuleSpec.free")
        deg = max(e[0] for e in by_power)
        if n is not None and deg != n:
            raise ValueError(f"p has degree {deg}, expected {n}")
        if deg < 1:
            raise ValueError("p must have positive degree")
        lead = by_power[(deg,)]
        if lead != Poly.const(ring, 1):
            raise ValueError(f"p is not monic: leading coefficient is {lead}")
        coeffs = tuple(by_power.get((deg - i,), Poly.zero(ring)) for i in range(1, deg + 1))
        return cls(ring, deg, coeffs)

    @classmethod
    def equivariant(cls, n: int, quantum: bool = True) -> "ModuleSpec":
        """p = prod_i (X - y_i + y_1) (+ q), with y_i of degree 1 and q of degree n."""
        gens = [Generator(f"y{i}", 1) for i in range(1, n + 1)]
        if quantum:
            gens.append(Generator("q", n))
        ring = Ring(tuple(gens))
        xring = Ring((Generator("X", 1),) + ring.gens)
        p = Poly.const(xring, 1)
        for i in range(1, n + 1):
            p = p * (Poly.gen(xring, "X") - Poly.gen(xring, f"y{i}") + Poly.gen(xring, "y1"))
        if quantum:
            p = p + Poly.gen(xring, "q")
        return cls.from_x_poly(p, ring, n)

    # -- queries -------------------------------------------------------------

    @property
    def is_free(self) -> bool:
        return self.n is None

    @property
    def top(self) -> int:
        """Largest index allowed in a basis wedge: n, or N for the free module."""
        return self.bound if self.n is None else self.n

    def one(self) -> Poly:
        return Poly.const(self.ring, 1)

    def coeff(self, c: Union[int, Poly]) -> Poly:
        if isinstance(c, Poly):
            return c.lift(self.ring)
        return Poly.const(self.ring, c)

    def x_polynomial(self) -> Poly:
        """p as a polynomial over the ring with X prepended (zero for the free module)."""
        xring = Ring((Generator("X", 1),) + self.ring.gens)
        if self.n is None:
            return Poly.zero(xring)
        p = Poly.gen(xring, "X", self.n)
        for i, c in enumerate(self.coeffs, start=1):
            p = p + c.lift(xring) * Poly.gen(xring, "X", self.n - i)
        return p

    def p_string(self) -> str:
        return str(self.x_polynomial())

    def reduction(self, m: int) -> dict[int, Poly]:
        """Coordinates of ε^m on ε^1..ε^n (cached)."""
        if m < 1:
            raise ValueError("indices start at 1")
        if m <= self.top:
            return {m: self.one()}
        if self.n is None:
            raise TruncationError(f"index {m} exceeds truncation bound N={self.bound}")
        cache = self._cache.setdefault("reduction", {})
        hit = cache.get(m)
        if hit is not None:
            return hit
        # ε^m = -Σ c_i ε^{m-i}
        out: dict[int, Poly] = {}
        for i, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            for j, a in self.reduction(m - i).items():
                _acc(out, j, -(c * a))
        out = {j: a for j, a in out.items() if a}
        cache[m] = out
        return out


def _acc(out: dict, key, value: Poly) -> None:
    cur = out.get(key)
    out[key] = value if cur is None else cur + value


def check_index_tuple(I: Sequence[int]) -> IndexTuple:
    I = tuple(int(i) for i in I)
    if any(i < 1 for i in I):
        raise ValueError(f"indices must be positive: {I}")
    if any(a >= b for a, b in zip(I, I[1:])):
        raise ValueError(f"indices must be strictly increasing: {I}")
    return I


def weight(I: Sequence[int]) -> int:
    return sum(i - j for j, i in enumerate(I, start=1))


def basis_tuples(k: int, n: int) -> Iterator[IndexTuple]:
    return combinations(range(1, n + 1), k)


def tuples_of_weight(k: int, w: int) -> list[IndexTuple]:
    """All strictly increasing k-tuples of weight w."""
    out = []
    for I in combinations(range(1, k + w + 1), k):
        if weight(I) == w:
            out.append(I)
    return out


def sort_with_sign(raw: Sequence[int]) -> tuple[int, IndexTuple]:
    """Sort ``raw`` returning (sign of the permutation, sorted tuple); sign 0 on repeats."""
    arr = list(raw)
    sign = 1
    for a in range(1, len(arr)):
        x = arr[a]
        b = a
        while b > 0 and arr[b - 1] > x:
            arr[b] = arr[b - 1]
            b -= 1
            sign = -sign
        arr[b] = x
    for a in range(1, len(arr)):
        if arr[a] == arr[a - 1]:
            return 0, ()
    return sign, tuple(arr)


def _wedge_into(out: dict, raw: Sequence[int], coeff: Poly, spec: ModuleSpec) -> None:
    sign, idx = sort_with_sign(raw)
    if not sign:
        return
    if not idx or idx[-1] <= spec.top:
        _acc(out, idx, coeff if sign > 0 else -coeff)
        return
    if spec.is_free:
        raise TruncationError(f"index {idx[-1]} exceeds truncation bound N={spec.bound}")
    n = spec.n
    choices = [[(i, None)] if i <= n else list(spec.reduction(i).items()) for i in idx]
    for combo in product(*choices):
        s2, idx2 = sort_with_sign([i for i, _ in combo])
        if not s2:
            continue
        c = coeff
        for _, a in combo:
            if a is not None:
                c = c * a
        if sign * s2 < 0:
            c = -c
        _acc(out, idx2, c)


def _clean(terms: dict) -> dict:
    return {I: c for I, c in terms.items() if c}


class MultiVector:
    """An element of the k-th exterior power of M(p), in the wedge basis."""

    __slots__ = ("spec", "k", "terms")

    def __init__(self, spec: ModuleSpec, k: int, terms: Mapping[IndexTuple, Union[int, Poly]] | None = None):
        self.spec = spec
        self.k = k
        clean = {}
        for I, c in (terms or {}).items():
            I = check_index_tuple(I)
            if len(I) != k:
                raise ValueError(f"wedge {I} does not have length {k}")
            if I and I[-1] > spec.top:
                raise ValueError(f"wedge {I} is outside the basis range 1..{spec.top}")
            c = spec.coeff(c)
            if c:
                clean[I] = c
        self.terms = clean

    @classmethod
    def _raw(cls, spec: ModuleSpec, k: int, terms: dict) -> "MultiVector":
        obj = cls.__new__(cls)
        obj.spec = spec
        obj.k = k
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, spec: ModuleSpec, k: int) -> "MultiVector":
        return cls._raw(spec, k, {})

    @classmethod
    def basis(cls, spec: ModuleSpec, I: Sequence[int], coeff: Union[int, Poly] = 1) -> "MultiVector":
        I = tuple(I)
        return cls(spec, len(I), {I: coeff})

    @classmethod
    def lowest(cls, spec: ModuleSpec, k: int) -> "MultiVector":
        """ε^1 ∧ ... ∧ ε^k."""
        return cls.basis(spec, range(1, k + 1))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, I: Sequence[int]) -> Poly:
        return self.terms.get(tuple(I), Poly.zero(self.spec.ring))

    def _check(self, other: "MultiVector") -> None:
        if not isinstance(other, MultiVector):
            raise TypeError("expected a MultiVector")
        if other.spec != self.spec:
            raise ValueError("vectors live in different modules")
        if other.k != self.k and self.terms and other.terms:
            raise ValueError(f"cannot add degree {self.k} and degree {other.k} vectors")

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._check(other)
        out = dict(self.terms)
        for I, c in other.terms.items():
            _acc(out, I, c)
        return MultiVector._raw(self.spec, self.k if self.terms else other.k, _clean(out))

    def __neg__(self):
        return MultiVector._raw(self.spec, self.k, {I: -c for I, c in self.terms.items()})

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + (-other)

    def scale(self, c: Union[int, Poly]) -> "MultiVector":
        c = self.spec.coeff(c)
        if not c:
            return MultiVector.zero(self.spec, self.k)
        return MultiVector._raw(self.spec, self.k, _clean({I: a * c for I, a in self.terms.items()}))

    def __mul__(self, c):
        if isinstance(c, (int, Poly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def wedge(self, other: "MultiVector") -> "MultiVector":
        if other.spec != self.spec:
            raise ValueError("vectors live in different modules")
        out: dict = {}
        for I, a in self.terms.items():
            for J, b in other.terms.items():
                _wedge_into(out, I + J, a * b, self.spec)
        return MultiVector._raw(self.spec, self.k + other.k, _clean(out))

    def __xor__(self, other):
        return self.wedge(other)

    def __eq__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        if self.spec != other.spec:
            return False
        if self.terms or other.terms:
            return self.k == other.k and self.terms == other.terms
        return True

    __hash__ = None

    def to_json(self) -> list[dict]:
        return [{"indices": list(I), "coeff": str(c)} for I, c in self.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for I, c in self.items():
            label = "e(" + ",".join(map(str, I)) + ")"
            parts.append(_scaled(c, label, first=not parts))
        return " ".join(parts)

    def __repr__(self):
        return f"MultiVector(k={self.k}, {self})"


def _scaled(c: Poly, label: str, first: bool) -> str:
    """Render ``c * label`` as one signed summand of a sum."""
    if len(c.terms) == 1:
        s = str(c)
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        body = label if mag == "1" else f"{mag}*{label}"
    else:
        neg = False
        body = f"({c})*{label}"
    if first:
        return f"-{body}" if neg else body
    return f"- {body}" if neg else f"+ {body}"


def normalize_wedge(raw: Sequence[int], coeff: Union[int, Poly], spec: ModuleSpec) -> MultiVector:
    """Coordinates of ``coeff · ε^{raw_1} ∧ ... ∧ ε^{raw_k}`` in the basis of the k-th power.

    Sorts with sign, kills repeated indices, then rewrites indices past n
    modulo p.
    """
    raw = tuple(raw)
    if any(i < 1 for i in raw):
        raise ValueError("indices start at 1")
    out: dict = {}
    _wedge_into(out, raw, spec.coeff(coeff), spec)
    return MultiVector._raw(spec, len(raw), _clean(out))


def reduce_index(m: int, spec: ModuleSpec) -> MultiVector:
    """ε^m expanded on ε^1..ε^n, i.e. X^m mod p in ε-coordinates."""
    return MultiVector._raw(spec, 1, {(j,): a for j, a in spec.reduction(m).items()})
