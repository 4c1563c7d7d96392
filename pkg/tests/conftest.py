import os

import pytest

from stratakit.parser import parse_file

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "src", "stratakit",
                        "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


_cache = {}


def algebra(name):
    """Session-cached algebra built from a fixture file (shared memo caches)."""
    if name not in _cache:
        f = parse_file(fixture_path(name + ".alg"))
        _cache[name] = (f, f.build())
    return _cache[name][1]


def algebra_file(name):
    if name not in _cache:
        f = parse_file(fixture_path(name + ".alg"))
        _cache[name] = (f, f.build())
    return _cache[name][0]


@pytest.fixture(scope="session")
def loop2():
    return algebra("loop2")


@pytest.fixture(scope="session")
def a2():
    return algebra("a2")


@pytest.fixture(scope="session")
def a3line():
    return algebra("a3line")


@pytest.fixture(scope="session")
def borelA():
    return algebra("borelA")


@pytest.fixture(scope="session")
def borelB():
    return algebra("borelB")


@pytest.fixture(scope="session")
def semisimple2():
    return algebra("semisimple2")


@pytest.fixture(scope="session")
def point():
    return algebra("point")
