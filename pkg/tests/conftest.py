import pytest

from wythoff_pass.engine import build_grundy_table


@pytest.fixture(scope="session")
def table20():
    return build_grundy_table(20)


@pytest.fixture(scope="session")
def table50():
    return build_grundy_table(50)


@pytest.fixture(scope="session")
def table100():
    return build_grundy_table(100)


@pytest.fixture(scope="session")
def table200():
    return build_grundy_table(200)


@pytest.fixture(scope="session")
def table300():
    return build_grundy_table(300)


@pytest.fixture(scope="session")
def table400():
    return build_grundy_table(400)
