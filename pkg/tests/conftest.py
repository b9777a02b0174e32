from pathlib import Path

import pytest

from services.catalog import atom_coatom, boolean_lattice, chain, m_atoms
from services.poset_core import direct_product
from services.zdg import zero_divisor_graph

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def ac4():
    """Ranks 0, 1, 3 and 4 of 2^4; ids 1-4 are q1..q4, 5-8 are q1'..q4'"""
    return atom_coatom(4)


@pytest.fixture
def ac4_graph(ac4):
    return zero_divisor_graph(ac4)


@pytest.fixture
def boolean2():
    return boolean_lattice(2)


@pytest.fixture
def boolean3():
    """ids: 0, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, 1"""
    return boolean_lattice(3)


@pytest.fixture
def triangle_poset():
    return m_atoms(3)


@pytest.fixture
def k22_poset():
    """Two 3-chains; Γ is K_{2,2} on (0,c1), (0,1) | (c1,0), (1,0)"""
    return direct_product([chain(3), chain(3)]).carrier
