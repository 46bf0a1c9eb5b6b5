import pytest

from stabpoly.verify import VerifyContext


@pytest.fixture(scope="session")
def ctx():
    """Shared lazily computed mothers, hulls, and catalog."""
    return VerifyContext()


@pytest.fixture(scope="session")
def catalog(ctx):
    return ctx.catalog
