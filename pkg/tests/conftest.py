from pathlib import Path

import pytest

from schemeforge.io import parse_matrix

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name):
    return parse_matrix((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def fig1():
    return load_fixture("fig1.mat")


@pytest.fixture(scope="session")
def fig2():
    return load_fixture("fig2.mat")
