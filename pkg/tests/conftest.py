"""Shared fixtures: the standard-basis poset on C^4 and friends."""

from __future__ import annotations

import numpy as np
import pytest

from toposqt.contexts import build_poset, context_from_basis

_ACCEPTANCE_RESULTS: list[tuple[int, str, bool]] = []


def record_acceptance(number: int, description: str, passed: bool) -> None:
    _ACCEPTANCE_RESULTS.append((number, description, passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(_ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {description}")


@pytest.fixture(scope="session")
def std_projectors():
    e = np.eye(4, dtype=complex)
    return tuple(np.outer(e[i], e[i]) for i in range(4))


@pytest.fixture(scope="session")
def maximal_context():
    return context_from_basis(np.eye(4))


@pytest.fixture(scope="session")
def poset11(maximal_context):
    """Poset generated by the standard basis of C^4: 11 contexts."""
    return build_poset([maximal_context])


@pytest.fixture(scope="session")
def second_basis():
    """A second maximal context sharing the first two standard rays."""
    e = np.eye(4, dtype=complex)
    q3 = (e[2] + e[3]) / np.sqrt(2)
    q4 = (e[2] - e[3]) / np.sqrt(2)
    return context_from_basis([e[0], e[1], q3, q4])


@pytest.fixture(scope="session")
def poset_two_bases(maximal_context, second_basis):
    return build_poset([maximal_context, second_basis])


@pytest.fixture(scope="session")
def sz():
    return np.diag([2.0, 0.0, 0.0, -2.0]).astype(complex)


def locate(poset, atoms):
    """Find the poset context with the given atoms, failing the test if absent."""
    context = poset.find(atoms)
    assert context is not None, "expected context missing from poset"
    return context
