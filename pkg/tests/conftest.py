"""Shared fixtures: the four standard realizations and their weight tables.

Everything here is deterministic, so session scope is safe; the weight
tables are immutable after construction.
"""

import pathlib

import pytest

from hyperq.fixtures import (
    s3_coset_action,
    s3_mixed_action,
    s3_regular_action,
    trivial_pair_action,
)
from hyperq.realization import orbit_atoms, weights

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def real_pair():
    return orbit_atoms(trivial_pair_action())


@pytest.fixture(scope="session")
def real_regular():
    return orbit_atoms(s3_regular_action())


@pytest.fixture(scope="session")
def real_cosets():
    return orbit_atoms(s3_coset_action())


@pytest.fixture(scope="session")
def real_mixed():
    return orbit_atoms(s3_mixed_action())


@pytest.fixture(scope="session")
def w_pair(real_pair):
    return weights(real_pair)


@pytest.fixture(scope="session")
def w_regular(real_regular):
    return weights(real_regular)


@pytest.fixture(scope="session")
def w_cosets(real_cosets):
    return weights(real_cosets)


@pytest.fixture(scope="session")
def w_mixed(real_mixed):
    return weights(real_mixed)


@pytest.fixture(scope="session")
def all_weighted(w_pair, w_regular, w_cosets, w_mixed):
    """The four standard weighted hypergroupoids, by name."""
    return {
        "pair": w_pair,
        "regular": w_regular,
        "cosets": w_cosets,
        "mixed": w_mixed,
    }


@pytest.fixture(scope="session")
def all_realized(real_pair, real_regular, real_cosets, real_mixed):
    return {
        "pair": real_pair,
        "regular": real_regular,
        "cosets": real_cosets,
        "mixed": real_mixed,
    }
