"""Products of Schubert classes through the evaluation at ε^1 ∧ ... ∧ ε^k.

A class ``σ_λ`` is identified with the wedge ``∧^{I(λ)} ε``.  To multiply
``σ_λ · x`` the Schur determinant of λ is applied, as an operator
polynomial in the D_i, to the wedge of x and the result is read back in
partition labels.  Quantum and equivariant corrections come only from
rewriting indices past n modulo p.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .coeff import Poly
from .derivation import engine_for, operator_ring
from .exterior import ModuleSpec, MultiVector, _scaled
from .schur import (
    Partition,
    format_partition,
    index_to_partition,
    partition_to_index,
    partitions_in_box,
    schur_delta,
)

__all__ = [
    "ClassCombination",
    "SchubertClass",
    "class_to_vector",
    "multiply",
    "multiply_classes",
    "pieri_on_class",
    "structure_constants",
    "table_to_json",
    "vector_to_classes",
]


def _fits(lam: Partition, k: int, spec: ModuleSpec) -> bool:
    return len(lam) <= k and (not lam or lam[0] <= spec.top - k)


@dataclass(frozen=True)
class SchubertClass:
    partition: Partition
    k: int
    spec: ModuleSpec

    def __post_init__(self):
        lam = tuple(x for x in self.partition if x)
        object.__setattr__(self, "partition", lam)
        if not _fits(lam, self.k, self.spec):
            raise ValueError(
                f"partition ({format_partition(lam)}) does not fit the {self.k}x{self.spec.top - self.k} box"
            )

    def as_combination(self) -> "ClassCombination":
        return ClassCombination(self.k, self.spec, {self.partition: 1})

    def __str__(self):
        return f"σ({format_partition(self.partition)})"


def _order(lam: Partition):
    return (-sum(lam), tuple(-x for x in lam))


class ClassCombination:
    """A finite A-linear combination of Schubert classes σ_λ."""

    __slots__ = ("k", "spec", "terms")

    def __init__(self, k: int, spec: ModuleSpec, terms: Mapping[Partition, Union[int, Poly]] | None = None):
        self.k = k
        self.spec = spec
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(x for x in lam if x)
            if not _fits(lam, k, spec):
                raise ValueError(f"partition ({format_partition(lam)}) does not fit the box")
            c = spec.coeff(c)
            if c:
                clean[lam] = clean[lam] + c if lam in clean else c
        self.terms = {lam: c for lam, c in clean.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> Poly:
        return self.terms.get(tuple(x for x in lam if x), Poly.zero(self.spec.ring))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _order(kv[0]))

    def _check(self, other: "ClassCombination"):
        if other.k != self.k or other.spec != self.spec:
            raise ValueError("classes live in different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return ClassCombination(self.k, self.spec, out)

    def __neg__(self):
        return ClassCombination(self.k, self.spec, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ClassCombination":
        c = self.spec.coeff(c)
        return ClassCombination(self.k, self.spec, {lam: a * c for lam, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (ClassCombination, SchubertClass)):
            return multiply(self, other)
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, SchubertClass):
            other = other.as_combination()
        if not isinstance(other, ClassCombination):
            return NotImplemented
        return self.k == other.k and self.spec == other.spec and self.terms == other.terms

    __hash__ = None

    def substitute(self, values) -> "ClassCombination":
        """Specialize coefficient generators, e.g. ``{"q": 0}``."""
        return ClassCombination(
            self.k, self.spec, {lam: c.substitute(values) for lam, c in self.terms.items()}
        )

    def to_json(self) -> list[dict]:
        return [{"partition": format_partition(lam), "coeff": str(c)} for lam, c in self.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.items():
            parts.append(_scaled(c, f"σ({format_partition(lam)})", first=not parts))
        return " ".join(parts)

    def __repr__(self):
        return f"ClassCombination({self})"


def _as_combination(x) -> ClassCombination:
    return x.as_combination() if isinstance(x, SchubertClass) else x


def class_to_vector(c: Union[ClassCombination, SchubertClass]) -> MultiVector:
    c = _as_combination(c)
    return MultiVector(
        c.spec, c.k, {partition_to_index(lam, c.k): a for lam, a in c.terms.items()}
    )


def vector_to_classes(v: MultiVector) -> ClassCombination:
    terms = {}
    for I, a in v.terms.items():
        lam = index_to_partition(I)
        if not _fits(lam, v.k, v.spec):
            raise AssertionError(f"internal error: wedge {I} escapes the box")
        terms[lam] = a
    return ClassCombination(v.k, v.spec, terms)


def _operator(c: ClassCombination) -> Poly:
    """Σ a_λ Δ_λ(T) over one shared operator ring."""
    ring = operator_ring(c.spec.top, c.spec.ring)
    total = Poly.zero(ring)
    for lam, a in c.terms.items():
        total = total + schur_delta(partition_to_index(lam, c.k), ring) * a.lift(ring)
    return total


def multiply(a, b, operator: str = "left") -> ClassCombination:
    """Product of two class combinations; ``operator`` picks which factor acts."""
    a, b = _as_combination(a), _as_combination(b)
    a._check(b)
    if operator == "right":
        a, b = b, a
    elif operator != "left":
        raise ValueError("operator must be 'left' or 'right'")
    v = engine_for(b.spec).evaluate(_operator(a), class_to_vector(b))
    return vector_to_classes(v)


def multiply_classes(a: SchubertClass, b: SchubertClass, operator: str = "left") -> ClassCombination:
    if a.k != b.k or a.spec != b.spec:
        raise ValueError("classes live in different rings")
    return multiply(a, b, operator)


def pieri_on_class(h: int, b: Union[SchubertClass, ClassCombination]) -> ClassCombination:
    """D_h acting on a class: the product with the one-row class σ_(h)."""
    b = _as_combination(b)
    return vector_to_classes(engine_for(b.spec).D(h, class_to_vector(b)))


def structure_constants(spec: ModuleSpec, k: int, max_weight: int) -> dict[tuple[Partition, Partition], ClassCombination]:
    """σ_λ · σ_μ for every ordered pair of box partitions with |λ| + |μ| <= max_weight."""
    if spec.is_free:
        raise ValueError("structure constants need a finite n")
    if not 1 <= k <= spec.n:
        raise ValueError(f"k must lie in 1..{spec.n}")
    box = partitions_in_box(k, spec.n - k)
    table = {}
    for lam in box:
        for mu in box:
            if sum(lam) + sum(mu) <= max_weight:
                table[(lam, mu)] = multiply_classes(
                    SchubertClass(lam, k, spec), SchubertClass(mu, k, spec)
                )
    return table


def table_to_json(table) -> list[dict]:
    return [
        {"lhs": format_partition(lam), "rhs": format_partition(mu), "result": prod.to_json()}
        for (lam, mu), prod in sorted(table.items(), key=lambda kv: (sum(kv[0][0]), kv[0][0], sum(kv[0][1]), kv[0][1]))
    ]
