from fractions import Fraction
from itertools import combinations

import pytest

from schubwedge import ModuleSpec, MultiVector, Poly
from schubwedge.coeff import graded_degree, poly_parse
from schubwedge.derivation import operator_ring
from schubwedge.exterior import tuples_of_weight, weight
from schubwedge.schur import (
    format_partition,
    giambelli_vector,
    index_to_partition,
    parse_partition,
    partition_to_index,
    partitions_in_box,
    schur_delta,
)


def T(src, m=6):
    return poly_parse(src, operator_ring(m))


def test_schur_delta_examples():
    for k in range(1, 5):
        assert schur_delta(tuple(range(1, k + 1))) == Poly.const(operator_ring(k - 1), 1)
    assert schur_delta((2, 3)).lift(operator_ring(6)) == T("T1^2 - T2")
    assert schur_delta((1, 3)).lift(operator_ring(6)) == T("T1")
    # one-row and one-column shapes
    assert schur_delta((1, 2, 6)).lift(operator_ring(6)) == T("T3")
    assert schur_delta((2, 3, 4)).lift(operator_ring(6)) == T("T1^3 - 2*T1*T2 + T3")


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("w", range(7))
def test_delta_in_last_column_ideal(k, w):
    for I in tuples_of_weight(k, w):
        delta = schur_delta(I)
        assert graded_degree(delta) == w
        if I[-1] > k:
            zeros = {f"T{I[-1] - j}": 0 for j in range(1, k + 1) if I[-1] - j >= 1}
            assert delta.substitute(zeros).is_zero()


def _rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("w", range(1, 7))
def test_schur_polys_independent(k, w, rng):
    ring = operator_ring(k + w)
    deltas = [schur_delta(I, ring) for I in tuples_of_weight(k, w)]
    monos = sorted({e for d in deltas for e in d.terms})
    assert _rank([[d.terms.get(m, 0) for m in monos] for d in deltas]) == len(deltas)
    for _ in range(10):
        coeffs = [rng.randint(-3, 3) for _ in deltas]
        total = sum((d * c for d, c in zip(deltas, coeffs)), Poly.zero(ring))
        assert total.is_zero() == (not any(coeffs))


def test_partition_conversion_examples():
    assert partition_to_index((), 2) == (1, 2)
    assert partition_to_index((2, 1), 2) == (2, 4)
    assert partition_to_index((1,), 2) == (1, 3)
    with pytest.raises(ValueError):
        partition_to_index((1, 1, 1), 2)
    with pytest.raises(ValueError):
        partition_to_index((1, 2), 2)


def test_partition_roundtrip():
    for k in range(1, 4):
        for I in combinations(range(1, 8), k):
            lam = index_to_partition(I)
            assert sum(lam) == weight(I)
            assert partition_to_index(lam, k) == I


def test_partition_strings():
    assert parse_partition("2,1") == (2, 1)
    assert parse_partition("") == ()
    assert parse_partition("0") == ()
    assert parse_partition("3,0") == (3,)
    assert format_partition((2, 1)) == "2,1"
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a")


def test_partitions_in_box():
    box = partitions_in_box(2, 2)
    assert box == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
    assert partitions_in_box(2, 3, size=3) == [(2, 1), (3,)]


def test_giambelli_examples():
    free = ModuleSpec.free(8)
    assert giambelli_vector((1, 2, 3), free) == MultiVector.lowest(free, 3)
    assert giambelli_vector((1, 3), ModuleSpec.classical(3)) == MultiVector.basis(ModuleSpec.classical(3), (1, 3))
    spec = ModuleSpec.classical(4)
    assert giambelli_vector((2, 3), spec) == MultiVector.basis(spec, (2, 3))


@pytest.mark.parametrize(
    "spec", [ModuleSpec.classical(6), ModuleSpec.quantum(6), ModuleSpec.generic(5)], ids=["classical", "quantum", "generic"]
)
def test_giambelli_in_finite_modules(spec):
    # ∧^I ε = Δ_I(D) ε^1∧...∧ε^k also holds after reduction mod p
    for k in (1, 2, 3):
        for I in combinations(range(1, spec.n + 1), k):
            assert giambelli_vector(I, spec) == MultiVector.basis(spec, I)
