import pytest

from opcalc.model import algebras


@pytest.fixture
def dual_numbers():
    return algebras.dual_numbers()


@pytest.fixture
def derivation():
    return algebras.dual_numbers_derivation()


@pytest.fixture
def scalar():
    return algebras.scalar_model()


@pytest.fixture
def mat2():
    return algebras.matrix_algebra(2)


@pytest.fixture
def nonassoc():
    return algebras.nonassociative_demo()
