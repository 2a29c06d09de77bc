import sys
from pathlib import Path

import pytest

from ginv.fields import GF, Q
from ginv.matrix import Matrix, enumerate_matrices

sys.path.insert(0, str(Path(__file__).parent))


def mat(rows, field=Q):
    return Matrix.from_rows(field, rows)


@pytest.fixture(scope="session")
def gf2_2x2():
    return list(enumerate_matrices(GF(2), 2))


@pytest.fixture(scope="session")
def gf3_2x2():
    return list(enumerate_matrices(GF(3), 2))


@pytest.fixture
def fixture_pair():
    return mat([[1, 1], [0, 0]]), mat([[1, 1], [0, 1]])
