"""Schur determinants, partition labels and the Giambelli evaluation."""
from __future__ import annotations

from typing import Sequence

from .coeff import Poly, Ring
from .derivation import engine_for, operator_ring
from .exterior import IndexTuple, ModuleSpec, MultiVector, check_index_tuple

__all__ = [
    "Partition",
    "format_partition",
    "giambelli_vector",
    "index_to_partition",
    "parse_partition",
    "partition_to_index",
    "partitions_in_box",
    "schur_delta",
]

Partition = tuple[int, ...]


def schur_delta(I: Sequence[int], ring: Ring | None = None) -> Poly:
    """det[T_{i_j - i}] for 1 <= i, j <= k, with T_0 = 1 and T_{<0} = 0.

    ``ring`` must contain T1..T_{i_k - 1}; by default exactly those are used.
    """
    I = check_index_tuple(I)
    k = len(I)
    if ring is None:
        ring = operator_ring(I[-1] - 1 if I else 0)
    one = Poly.const(ring, 1)
    zero = Poly.zero(ring)

    def entry(row: int, col: int) -> Poly:
        d = I[col] - (row + 1)
        if d < 0:
            return zero
        if d == 0:
            return one
        return Poly.gen(ring, f"T{d}")

    memo: dict[tuple[int, ...], Poly] = {(): one}

    def minor(cols: tuple[int, ...]) -> Poly:
        # rows k-len(cols) .. k-1 against the given columns
        hit = memo.get(cols)
        if hit is not None:
            return hit
        row = k - len(cols)
        total = zero
        for pos, c in enumerate(cols):
            e = entry(row, c)
            if not e:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = e * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(tuple(range(k)))


def index_to_partition(I: Sequence[int]) -> Partition:
    """(i_k - k, ..., i_1 - 1) with trailing zeros stripped."""
    I = check_index_tuple(I)
    parts = [i - j for j, i in enumerate(I, start=1)][::-1]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def partition_to_index(lam: Sequence[int], k: int) -> IndexTuple:
    lam = tuple(int(x) for x in lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a partition")
    parts = [x for x in lam if x]
    if len(parts) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    padded = parts + [0] * (k - len(parts))
    return tuple(j + padded[k - j] for j in range(1, k + 1))


def parse_partition(src: str) -> Partition:
    """Parse ``"2,1"``; ``""`` and ``"0"`` mean the empty partition."""
    src = src.strip()
    if src in ("", "0"):
        return ()
    try:
        parts = tuple(int(x) for x in src.split(","))
    except ValueError:
        raise ValueError(f"bad partition {src!r}") from None
    if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{src!r} is not a weakly decreasing list of non-negative integers")
    return tuple(x for x in parts if x)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam if x)


def partitions_in_box(k: int, width: int, size: int | None = None) -> list[Partition]:
    """Partitions with at most k parts, each at most ``width``; optionally of fixed size."""
    out = []

    def rec(prefix: list[int], cap: int):
        out.append(tuple(prefix))
        if len(prefix) == k:
            return
        for x in range(1, cap + 1):
            rec(prefix + [x], x)

    rec([], width)
    if size is not None:
        out = [p for p in out if sum(p) == size]
    return sorted(out, key=lambda p: (sum(p), p))


def giambelli_vector(I: Sequence[int], spec: ModuleSpec) -> MultiVector:
    """Δ_I(D) applied to ε^1 ∧ ... ∧ ε^k; equals ∧^I ε."""
    I = check_index_tuple(I)
    if I and I[-1] > spec.top:
        raise ValueError(f"{I} is outside the basis range 1..{spec.top}")
    delta = schur_delta(I)
    return engine_for(spec).evaluate(delta, MultiVector.lowest(spec, len(I)))
