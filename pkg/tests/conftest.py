"""Shared fixtures and the acceptance summary hook."""

from __future__ import annotations

import pytest

from gpw.core import Structure
from gpw.fixtures import (constant_zero, left_zero, min_semilattice,
                          right_zero, singleton)


@pytest.fixture
def min_sl() -> Structure:
    return min_semilattice()


@pytest.fixture
def lz() -> Structure:
    return left_zero()


@pytest.fixture
def rz() -> Structure:
    return right_zero()


@pytest.fixture
def cz() -> Structure:
    return constant_zero()


@pytest.fixture
def one() -> Structure:
    return singleton()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
