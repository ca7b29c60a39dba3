import random
from itertools import combinations

import pytest

from schubwedge import ModuleSpec, MultiVector, Poly


def random_coeff(spec, rng, symbolic=True):
    c = Poly.const(spec.ring, rng.randint(-3, 3))
    if symbolic and len(spec.ring) and rng.random() < 0.5:
        name = rng.choice(spec.ring.names)
        c = c + Poly.gen(spec.ring, name) * rng.randint(-2, 2)
    return c


def random_vector(spec, k, rng, terms=4, symbolic=True):
    basis = list(combinations(range(1, spec.top + 1), k))
    picks = rng.sample(basis, min(terms, len(basis)))
    return MultiVector(spec, k, {I: random_coeff(spec, rng, symbolic) for I in picks})


@pytest.fixture
def rng():
    return random.Random(20240601)


SPECS = {
    "classical": lambda n: ModuleSpec.classical(n),
    "quantum": lambda n: ModuleSpec.quantum(n),
    "generic": lambda n: ModuleSpec.generic(n),
}


# -- acceptance summary ------------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
