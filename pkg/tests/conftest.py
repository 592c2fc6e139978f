from pathlib import Path

import numpy as np
import pytest

from cogmap import from_adjacency

import goldens

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def map_q():
    """Two concepts, single relation 1->2."""
    return from_adjacency([[0, 0.7], [0, 0]], name="q")


@pytest.fixture
def map_s():
    """Two concepts influencing each other with weight 1/2."""
    return from_adjacency([[0, 0.5], [0.5, 0]], name="s")


@pytest.fixture
def map_signed():
    return from_adjacency(goldens.W_SIGNED, name="signed", labels=goldens.CONCEPT_LABELS)


@pytest.fixture
def map_weighted():
    return from_adjacency(goldens.W_WEIGHTED, name="weighted", labels=goldens.CONCEPT_LABELS)


@pytest.fixture
def signed_fixture_path():
    return str(FIXTURES / "health_signed.json")


@pytest.fixture
def weighted_fixture_path():
    return str(FIXTURES / "health_weighted.json")


def make_random_map(rng, max_n=8, min_n=2):
    n = int(rng.integers(min_n, max_n + 1))
    density = rng.uniform(0.15, 0.5)
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                weight = float(rng.uniform(-2.0, 2.0))
                w[i, j] = weight if weight != 0 else 0.5
    return from_adjacency(w, name=f"random-{n}")


@pytest.fixture(scope="session")
def random_maps_small():
    """Thirty maps with up to 8 concepts for module-level property tests."""
    rng = np.random.default_rng(20240811)
    return [make_random_map(rng) for _ in range(30)]
