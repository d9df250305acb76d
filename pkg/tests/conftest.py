import pytest

from carlitzlab.ffield import FieldSpec
from carlitzlab.poly import FqPoly


@pytest.fixture
def F3():
    return FieldSpec.of(3)


@pytest.fixture
def T3(F3):
    return FqPoly.T(F3)
