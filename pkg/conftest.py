"""Shared pytest fixtures"""

import random

import logfire
import pytest

from bench import random_term
from oracle import term_to_vector

# Keep tests offline and quiet
logfire.configure(send_to_logfire=False, console=False)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def make_term(rng):
    """Random vop-decorated graph-state term on n qubits"""

    def _make(n, degree=None):
        return random_term(n, rng, degree)

    return _make


@pytest.fixture
def dense():
    return term_to_vector
