import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from osadic import (GroundSet, circuits_of_binary_matrix, circuits_of_graph,
                    complete_graph, cycle_graph, fig1,
                    validate_circuit_family)
from osadic.bitsets import word_of
from osadic.instances import fano_matrix


def family(circuit_tuples, n):
    """Validated family from an iterable of label tuples."""
    return validate_circuit_family([word_of(t) for t in circuit_tuples],
                                   GroundSet(n))


@pytest.fixture(scope="session")
def fig1_family():
    return fig1()


@pytest.fixture(scope="session")
def k4_family():
    return circuits_of_graph(complete_graph(4))


@pytest.fixture(scope="session")
def c5_family():
    return circuits_of_graph(cycle_graph(5))


@pytest.fixture(scope="session")
def fano_family():
    return circuits_of_binary_matrix(fano_matrix())
