from pathlib import Path

import pytest

import psbe
from psbe.algebra import load_algebra

FIXDIR = Path(psbe.__file__).resolve().parent / "fixtures"
FIXTURE_NAMES = ("psbe4", "psbe5", "bc4", "inv6")


def fixture_path(name: str) -> Path:
    return FIXDIR / f"{name}.alg"


def load(name: str):
    return load_algebra(fixture_path(name))


@pytest.fixture(scope="session")
def psbe4():
    return load("psbe4")


@pytest.fixture(scope="session")
def psbe5():
    return load("psbe5")


@pytest.fixture(scope="session")
def bc4():
    return load("bc4")


@pytest.fixture(scope="session")
def inv6():
    return load("inv6")


@pytest.fixture(scope="session", params=FIXTURE_NAMES)
def any_fixture(request):
    return load(request.param)
