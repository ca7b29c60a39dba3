"""The canonical Hasse-Schmidt derivation on the exterior algebra of M(p).

``D_h`` acts on a wedge of basis vectors by distributing h among the
factors (``D_h ε^i = ε^{i+h}``).  Two routes are provided:

* :func:`leibniz_expand` enumerates every composition of h and lets the
  wedge normalization cancel repeated and reordered factors.  Exponential
  in k; kept as the reference.
* :func:`pieri_expand` only emits shifts ``H`` with
  ``i_1 + h_1 < i_2 <= i_2 + h_2 < ... `` so every summand is already a
  sorted, repetition-free wedge.

The inverse series ``D_t^{-1} = Σ (-1)^h D̄_h t^h`` is evaluated on vectors
through ``D̄_h = Σ_{i=1}^{h} (-1)^{i+1} D̄_{h-i} D_i`` with ``D̄_0 = id``.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterator, Sequence

from .coeff import Generator, Poly, Ring
from .exterior import (
    IndexTuple,
    ModuleSpec,
    MultiVector,
    _acc,
    _clean,
    _wedge_into,
    check_index_tuple,
)

__all__ = [
    "DerivationEngine",
    "apply_D",
    "apply_Dbar",
    "compositions",
    "dbar_operator_poly",
    "engine_for",
    "evaluate_operator",
    "leibniz_expand",
    "operator_ring",
    "pieri_expand",
    "pieri_shifts",
]


def compositions(h: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-tuples of non-negative integers summing to h."""
    if k == 0:
        if h == 0:
            yield ()
        return
    if k == 1:
        yield (h,)
        return
    for first in range(h, -1, -1):
        for rest in compositions(h - first, k - 1):
            yield (first,) + rest


def pieri_shifts(I: Sequence[int], h: int) -> Iterator[tuple[int, ...]]:
    """Shifts H with ``i_j + h_j < i_{j+1}`` for j < k and ``Σ h_j = h``."""
    k = len(I)
    if k == 0:
        if h == 0:
            yield ()
        return

    def rec(j: int, left: int):
        if j == k - 1:
            yield (left,)
            return
        cap = min(left, I[j + 1] - I[j] - 1)
        for hj in range(cap, -1, -1):
            for rest in rec(j + 1, left - hj):
                yield (hj,) + rest

    yield from rec(0, h)


def leibniz_expand(h: int, I: Sequence[int], spec: ModuleSpec) -> MultiVector:
    """D_h on ∧^I ε by summing over all compositions of h (reference route)."""
    I = check_index_tuple(I)
    if h < 0:
        raise ValueError("h must be non-negative")
    one = spec.one()
    out: dict = {}
    for H in compositions(h, len(I)):
        _wedge_into(out, [i + s for i, s in zip(I, H)], one, spec)
    return MultiVector._raw(spec, len(I), _clean(out))


def pieri_expand(h: int, I: Sequence[int], spec: ModuleSpec) -> MultiVector:
    """D_h on ∧^I ε summing only over the Pieri shifts, then reducing mod p."""
    I = check_index_tuple(I)
    if h < 0:
        raise ValueError("h must be non-negative")
    return MultiVector._raw(spec, len(I), dict(engine_for(spec).d_basis(h, I)))


def operator_ring(m: int, base: Ring | None = None, symbol: str = "T") -> Ring:
    """Ring with T1..Tm (Ti of degree i) followed by the generators of ``base``."""
    gens = tuple(Generator(f"{symbol}{i}", i) for i in range(1, m + 1))
    return Ring(gens + (base.gens if base is not None else ()))


class DerivationEngine:
    """D and D̄ on the exterior powers of one fixed M(p).

    Results on basis wedges are memoized; the tables only ever gain
    entries with deterministic values, so sharing an engine is safe.
    """

    def __init__(self, spec: ModuleSpec):
        self.spec = spec
        self._d: dict[tuple[int, IndexTuple], dict] = {}
        self._dbar: dict[tuple[int, IndexTuple], dict] = {}
        self._lock = threading.Lock()

    def d_basis(self, h: int, I: IndexTuple) -> dict:
        key = (h, I)
        hit = self._d.get(key)
        if hit is not None:
            return hit
        spec = self.spec
        out: dict = {}
        if h == 0:
            out[I] = spec.one()
        elif I:
            one = spec.one()
            for H in pieri_shifts(I, h):
                _wedge_into(out, [i + s for i, s in zip(I, H)], one, spec)
        out = _clean(out)
        with self._lock:
            self._d.setdefault(key, out)
        return out

    def D(self, h: int, v: MultiVector) -> MultiVector:
        if h < 0:
            raise ValueError("h must be non-negative")
        if h == 0:
            return v
        out: dict = {}
        for I, c in v.terms.items():
            for J, a in self.d_basis(h, I).items():
                _acc(out, J, a * c)
        return MultiVector._raw(self.spec, v.k, _clean(out))

    def dbar_basis(self, h: int, I: IndexTuple) -> dict:
        if h == 0:
            return {I: self.spec.one()}
        key = (h, I)
        hit = self._dbar.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        for i in range(1, h + 1):
            sign = 1 if i % 2 else -1
            for J, a in self.d_basis(i, I).items():
                for K, b in self.dbar_basis(h - i, J).items():
                    _acc(out, K, a * b if sign > 0 else -(a * b))
        out = _clean(out)
        with self._lock:
            self._dbar.setdefault(key, out)
        return out

    def Dbar(self, h: int, v: MultiVector) -> MultiVector:
        if h < 0:
            raise ValueError("h must be non-negative")
        if h == 0:
            return v
        out: dict = {}
        for I, c in v.terms.items():
            for J, a in self.dbar_basis(h, I).items():
                _acc(out, J, a * c)
        return MultiVector._raw(self.spec, v.k, _clean(out))

    def evaluate(self, P: Poly, v: MultiVector, symbol: str = "T") -> MultiVector:
        """Apply the operator P(D) to v, substituting T_i -> D_i.

        Generators of P other than ``T1, T2, ...`` must belong to the
        coefficient ring of the module.
        """
        tnames = [n for n in P.ring.names if n.startswith(symbol) and n[len(symbol):].isdigit()]
        orders = [int(n[len(symbol):]) for n in tnames]
        groups = P.split(tnames, self.spec.ring)
        memo: dict[tuple[int, ...], MultiVector] = {(0,) * len(tnames): v}

        def power(exps: tuple[int, ...]) -> MultiVector:
            hit = memo.get(exps)
            if hit is not None:
                return hit
            # peel one factor off the highest-order position
            j = max(i for i, e in enumerate(exps) if e)
            lower = list(exps)
            lower[j] -= 1
            res = self.D(orders[j], power(tuple(lower)))
            memo[exps] = res
            return res

        total = MultiVector.zero(self.spec, v.k)
        for exps in sorted(groups):
            total = total + power(exps).scale(groups[exps])
        return total


@lru_cache(maxsize=256)
def engine_for(spec: ModuleSpec) -> DerivationEngine:
    return DerivationEngine(spec)


def apply_D(h: int, v: MultiVector) -> MultiVector:
    """D_h extended linearly over the terms of v."""
    return engine_for(v.spec).D(h, v)


def apply_Dbar(h: int, v: MultiVector) -> MultiVector:
    """D̄_h on v via the inverse-series recursion."""
    return engine_for(v.spec).Dbar(h, v)


def evaluate_operator(P: Poly, v: MultiVector) -> MultiVector:
    return engine_for(v.spec).evaluate(P, v)


def dbar_operator_poly(h: int) -> Poly:
    """D̄_h as a polynomial in T1..Th: the Schur determinant of (2, 3, ..., h+1)."""
    from .schur import schur_delta

    if h < 1:
        raise ValueError("h must be positive")
    return schur_delta(tuple(range(2, h + 2)), operator_ring(h))
