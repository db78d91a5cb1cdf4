import pytest

from cerings import (exterior_algebra, field_algebra, group_algebra,
                     matrix_algebra, named_group_table, product_algebra,
                     triangular_algebra)
from cerings.verify import analyze


@pytest.fixture(scope="session")
def lam33():
    return exterior_algebra(3, 3)


@pytest.fixture(scope="session")
def lam32():
    return exterior_algebra(3, 2)


@pytest.fixture(scope="session")
def m2f2():
    return matrix_algebra(2, 2)


@pytest.fixture(scope="session")
def m2f3():
    return matrix_algebra(2, 3)


@pytest.fixture(scope="session")
def t2f3():
    return triangular_algebra(2, 3)


@pytest.fixture(scope="session")
def f3xf3():
    return product_algebra(field_algebra(3), field_algebra(3))


@pytest.fixture(scope="session")
def f2s3():
    return group_algebra(2, named_group_table("s3"), name="group(F2,s3)")


@pytest.fixture(scope="session")
def warm_kernels():
    """Force jit compilation of every kernel before any timed assertion."""
    a, g = exterior_algebra(3, 2)
    analyze(a, g)
    analyze(matrix_algebra(2, 2))
    return True
