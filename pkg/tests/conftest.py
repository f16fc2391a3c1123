import numpy as np
import pytest

from ftagree import Topology, is_connected


def random_topology(rng, n, p=0.5, wmin=0.5, wmax=2.0):
    """Random symmetric weighted graph; each pair kept with probability p."""
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                w[i, j] = w[j, i] = rng.uniform(wmin, wmax)
    return Topology(n, w)


def random_connected_topology(rng, n, p=0.5, wmin=0.5, wmax=2.0):
    for _ in range(1000):
        t = random_topology(rng, n, p, wmin, wmax)
        if is_connected(t):
            return t
    raise RuntimeError("failed to sample a connected graph")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
