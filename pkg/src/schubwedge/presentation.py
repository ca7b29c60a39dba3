"""Generators and relations for the operator ring on the k-th exterior power of M(p).

With ``Σ_j D̃_j t^j = 1 / (1 - D̄_1 t + D̄_2 t^2 - ... + (-1)^k D̄_k t^k)``
(the D̄_i written as polynomials in T_1..T_k), the ring is
``A[D_1..D_k]`` modulo ``D̃_{n-k+j} + Σ_i c_i D̃_{n-k+j-i}`` for j = 1..k.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coeff import Poly, Ring
from .derivation import dbar_operator_poly, engine_for, operator_ring
from .exterior import ModuleSpec, MultiVector
from .schubert_ring import ClassCombination, vector_to_classes

__all__ = [
    "PresentationResult",
    "dtilde_poly",
    "dtilde_series",
    "normal_form",
    "presentation",
    "relation_poly",
]


@lru_cache(maxsize=None)
def dtilde_series(k: int, order: int) -> tuple[Poly, ...]:
    """D̃_0, ..., D̃_order as polynomials in T1..Tk (truncated series inverse)."""
    if k < 1:
        raise ValueError("k must be positive")
    ring = operator_ring(k)
    # denominator coefficients: (-1)^i D̄_i
    denom = [Poly.const(ring, 1)]
    for i in range(1, k + 1):
        d = dbar_operator_poly(i).lift(ring)
        denom.append(d if i % 2 == 0 else -d)
    coeffs = [Poly.const(ring, 1)]
    for j in range(1, order + 1):
        acc = Poly.zero(ring)
        for i in range(1, min(j, k) + 1):
            acc = acc - denom[i] * coeffs[j - i]
        coeffs.append(acc)
    return tuple(coeffs)


def dtilde_poly(j: int, k: int) -> Poly:
    """Coefficient of t^j in the inverse series; a polynomial in T1..Tk."""
    if j < 0:
        raise ValueError("j must be non-negative")
    return dtilde_series(k, j)[j]


def relation_poly(j: int, spec: ModuleSpec, k: int) -> Poly:
    """D̃_{n-k+j}(T) + Σ_{i=1}^{n-k+j} c_i D̃_{n-k+j-i}(T), over T1..Tk and the coefficient ring."""
    if spec.is_free:
        raise ValueError("relations need a finite n")
    n = spec.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must lie in 1..{n}")
    if j < 1:
        raise ValueError("j must be positive")
    m = n - k + j
    ring = operator_ring(k, spec.ring)
    series = dtilde_series(k, m)
    rel = series[m].lift(ring)
    for i in range(1, min(m, n) + 1):
        c = spec.coeffs[i - 1]
        if c:
            rel = rel + c.lift(ring) * series[m - i].lift(ring)
    return rel


@dataclass(frozen=True)
class PresentationResult:
    k: int
    n: int
    ring: Ring
    p: str
    relations: tuple[Poly, ...]

    @property
    def generators(self) -> list[str]:
        return [f"D{i}" for i in range(1, self.k + 1)]

    def relation_strings(self) -> list[str]:
        rename = {f"T{i}": f"D{i}" for i in range(1, self.k + 1)}
        return [str(r.rename(rename)) for r in self.relations]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "ring": [{"name": g.name, "degree": g.degree} for g in self.ring.gens],
            "p": self.p,
            "generators": self.generators,
            "relations": self.relation_strings(),
        }

    def to_text(self) -> str:
        base = "Z" if not len(self.ring) else "Z[" + ",".join(self.ring.names) + "]"
        gens = ",".join(self.generators)
        rels = ", ".join(self.relation_strings())
        lines = [
            f"G({self.k},{self.n})  p = {self.p}",
            f"A*(/\\^{self.k} M(p)) = {base}[{gens}] / ({rels})",
        ]
        for j, r in enumerate(self.relation_strings(), start=1):
            lines.append(f"  relation {j} (degree {self.n - self.k + j}): {r}")
        return "\n".join(lines) + "\n"


def presentation(spec: ModuleSpec, k: int) -> PresentationResult:
    if spec.is_free:
        raise ValueError("a presentation needs a finite n")
    if not 1 <= k <= spec.n:
        raise ValueError(f"k={k} must lie in 1..{spec.n}")
    rels = tuple(relation_poly(j, spec, k) for j in range(1, k + 1))
    return PresentationResult(k, spec.n, spec.ring, spec.p_string(), rels)


def normal_form(P: Poly, spec: ModuleSpec, k: int) -> ClassCombination:
    """Residue class of P(D) read off from P(D) ε^1 ∧ ... ∧ ε^k in Schubert-class coordinates.

    Zero exactly when P lies in the relation ideal.
    """
    v = engine_for(spec).evaluate(P, MultiVector.lowest(spec, k))
    return vector_to_classes(v)
