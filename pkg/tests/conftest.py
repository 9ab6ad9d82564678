import json
from itertools import combinations
from math import gcd
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from sparse_duals import NumericalSemigroup, compute_wstar, hermitian_points

settings.register_profile(
    "suite",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"

COPRIME_PAIRS = [
    (a, b) for a in range(2, 10) for b in range(a + 1, 10) if gcd(a, b) == 1
]
GENERATOR_TRIPLES = [
    (3, 4, 5), (3, 5, 7), (4, 5, 6), (4, 5, 7), (4, 6, 7), (4, 6, 9),
    (5, 6, 7), (5, 6, 8), (5, 6, 9), (5, 7, 8), (5, 7, 9), (6, 7, 8),
]
CORPUS_GENERATORS = COPRIME_PAIRS + GENERATOR_TRIPLES


@pytest.fixture(scope="session")
def corpus():
    return [NumericalSemigroup(gens) for gens in CORPUS_GENERATORS]


@pytest.fixture(scope="session")
def expected_hierarchy():
    return json.loads((DATA_DIR / "hermitian_q2_hierarchy.json").read_text())


@pytest.fixture(scope="session")
def q2_points():
    return hermitian_points(2)


@pytest.fixture(scope="session")
def q2_sequences(q2_points):
    """CodeSequence for every non-empty subset of the eight points."""
    out = {}
    for size in range(1, 9):
        for combo in combinations(range(1, 9), size):
            out[combo] = compute_wstar([q2_points[i - 1] for i in combo], 2)
    return out
