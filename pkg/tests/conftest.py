import pytest

from ordinal import boolean_lattice, build_poset, partition_lattice


@pytest.fixture(scope="session")
def b3():
    return boolean_lattice("abc")


@pytest.fixture(scope="session")
def p3():
    return partition_lattice("abc")


@pytest.fixture(scope="session")
def bowtie():
    """Two bottoms both covered by two tops: joins and meets are ambiguous."""
    return build_poset("pqrs", [("p", "r"), ("p", "s"), ("q", "r"), ("q", "s")])
