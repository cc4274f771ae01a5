"""Shared fixtures: the expensive series builds, constructed once per run."""

from __future__ import annotations

import pytest

from flbessel import build_series


@pytest.fixture(scope="session")
def j0_42():
    return build_series("J", 0, 1, l_max=42, precision=50)


@pytest.fixture(scope="session")
def j1_43():
    return build_series("J", 1, 1, l_max=43, precision=50)


@pytest.fixture(scope="session")
def i0_46():
    return build_series("I", 0, 1, l_max=46, precision=50)


@pytest.fixture(scope="session")
def i1_45():
    return build_series("I", 1, 1, l_max=45, precision=50)


@pytest.fixture(scope="session")
def j0_74terms():
    # 74 even-L entries: L = 0..146
    return build_series("J", 0, 1, l_max=146, precision=50)


@pytest.fixture(scope="session")
def j1_78terms():
    # 78 odd-L entries: L = 1..155
    return build_series("J", 1, 1, l_max=155, precision=50)
