import pytest

from cubic27 import decomp, picard, weyl


@pytest.fixture(scope="session")
def lines():
    return picard.enumerate_lines()


@pytest.fixture(scope="session")
def triangles():
    return picard.enumerate_triangles()


@pytest.fixture(scope="session")
def roots():
    return picard.enumerate_roots()


@pytest.fixture(scope="session")
def group():
    return weyl.weyl_group()


@pytest.fixture(scope="session")
def classes():
    return weyl.weyl_classes()


@pytest.fixture(scope="session")
def decomposition():
    return decomp.decompose()


@pytest.fixture(scope="session")
def line_index():
    """Label -> index lookup."""
    return {line.label: line.index for line in picard.enumerate_lines()}
