from itertools import combinations

import pytest

from schubwedge import ModuleSpec, MultiVector, Poly
from schubwedge.derivation import pieri_shifts
from schubwedge.schubert_ring import (
    ClassCombination,
    SchubertClass,
    class_to_vector,
    multiply,
    multiply_classes,
    pieri_on_class,
    structure_constants,
    table_to_json,
    vector_to_classes,
)
from schubwedge.schur import index_to_partition, partition_to_index, partitions_in_box


def cls(lam, k, spec):
    return SchubertClass(tuple(lam), k, spec)


def comb_(spec, k, terms):
    return ClassCombination(k, spec, terms)


def test_class_vector_conversions():
    spec = ModuleSpec.classical(5)
    cases = [
        (comb_(spec, 2, {(): 1}), MultiVector.lowest(spec, 2)),
        (comb_(spec, 2, {(2, 1): 1}), MultiVector.basis(spec, (2, 4))),
        (comb_(spec, 2, {(1,): 2}), MultiVector.basis(spec, (1, 3), 2)),
    ]
    for c, v in cases:
        assert class_to_vector(c) == v
        assert vector_to_classes(v) == c


def test_product_examples():
    classical = ModuleSpec.classical(4)
    quantum = ModuleSpec.quantum(4)
    q = Poly.gen(quantum.ring, "q")
    assert multiply_classes(cls((1,), 2, classical), cls((1,), 2, classical)) == comb_(
        classical, 2, {(2,): 1, (1, 1): 1}
    )
    assert multiply_classes(cls((1,), 2, quantum), cls((2, 1), 2, quantum)) == comb_(
        quantum, 2, {(2, 2): 1, (): q}
    )
    for lam in partitions_in_box(2, 2):
        assert multiply_classes(cls((), 2, quantum), cls(lam, 2, quantum)) == cls(lam, 2, quantum)


def test_box_is_enforced():
    spec = ModuleSpec.classical(4)
    with pytest.raises(ValueError):
        cls((3,), 2, spec)
    with pytest.raises(ValueError):
        cls((1, 1, 1), 2, spec)
    with pytest.raises(ValueError):
        multiply_classes(cls((1,), 2, spec), cls((1,), 1, spec))


def test_pieri_on_class_examples():
    spec = ModuleSpec.classical(4)
    s1 = cls((1,), 2, spec)
    assert pieri_on_class(0, s1) == s1
    assert pieri_on_class(1, s1) == comb_(spec, 2, {(2,): 1, (1, 1): 1})
    free = ModuleSpec.free(8)
    assert pieri_on_class(2, cls((1,), 2, free)) == comb_(free, 2, {(3,): 1, (2, 1): 1})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_operator_pieri_identity(k):
    for w in range(6):
        for lam in partitions_in_box(k, w, size=w):
            I = partition_to_index(lam, k)
            for h in range(5):
                free = ModuleSpec.free(k + w + h)
                expected = {
                    index_to_partition(tuple(i + s for i, s in zip(I, H))): 1
                    for H in pieri_shifts(I, h)
                }
                got = pieri_on_class(h, cls(lam, k, free))
                assert got == comb_(free, k, expected)


@pytest.mark.parametrize("k, n", [(2, 4), (2, 5), (3, 6)])
@pytest.mark.parametrize("kind", ["classical", "quantum"])
def test_operator_choice_is_irrelevant(k, n, kind, rng):
    spec = ModuleSpec.classical(n) if kind == "classical" else ModuleSpec.quantum(n)
    box = partitions_in_box(k, n - k)
    for _ in range(15):
        a, b = cls(rng.choice(box), k, spec), cls(rng.choice(box), k, spec)
        assert multiply(a, b, operator="left") == multiply(a, b, operator="right")


def test_classical_constants_nonnegative():
    for k, n in [(2, 4), (2, 5), (3, 6)]:
        spec = ModuleSpec.classical(n)
        table = structure_constants(spec, k, 2 * k * (n - k))
        for (lam, mu), prod in table.items():
            assert prod == table[(mu, lam)]
            for c in prod.terms.values():
                assert c.is_constant() and c.constant_term() > 0
    table = structure_constants(ModuleSpec.classical(4), 2, 4)
    assert table[((1,), (2, 1))].coefficient((2, 2)) == 1


def test_quantum_table_specializes_to_classical():
    quantum = ModuleSpec.quantum(4)
    classical = ModuleSpec.classical(4)
    qt = structure_constants(quantum, 2, 8)
    ct = structure_constants(classical, 2, 8)
    assert qt[((1,), (2, 1))].coefficient(()) == Poly.gen(quantum.ring, "q")
    for key, prod in qt.items():
        special = prod.substitute({"q": 0})
        assert {lam: c.constant_term() for lam, c in special.terms.items()} == {
            lam: c.constant_term() for lam, c in ct[key].terms.items()
        }


def test_table_json_shape():
    doc = table_to_json(structure_constants(ModuleSpec.quantum(4), 2, 4))
    entry = next(e for e in doc if e["lhs"] == "2,1" and e["rhs"] == "1")
    assert entry == {
        "lhs": "2,1",
        "rhs": "1",
        "result": [{"partition": "2,2", "coeff": "1"}, {"partition": "", "coeff": "q"}],
    }


def test_combination_text():
    spec = ModuleSpec.quantum(4)
    q = Poly.gen(spec.ring, "q")
    c = comb_(spec, 2, {(2, 2): 1, (): q, (1,): -2, (2,): q + 1})
    assert str(c) == "σ(2,2) + (q + 1)*σ(2) - 2*σ(1) + q*σ()"
