import random

import pytest

from olt.group import TEST_GROUP, generate_params

_acceptance_lines = []


class FixedRNG:
    """Replays preset values from ``randrange`` to force nonces and keys."""

    def __init__(self, values, fallback_seed=0):
        self._values = list(values)
        self._rng = random.Random(fallback_seed)

    def randrange(self, *args):
        if self._values:
            v = self._values.pop(0)
            assert v in range(*args), (v, args)
            return v
        return self._rng.randrange(*args)

    def getrandbits(self, k):
        return self._rng.getrandbits(k)

    def choice(self, seq):
        return self._rng.choice(seq)


@pytest.fixture
def small():
    return TEST_GROUP


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(scope="session")
def group64():
    return generate_params(64, random.Random(64))


@pytest.fixture(scope="session")
def group512():
    return generate_params(512, random.Random(512))


@pytest.fixture
def report():
    def _report(criterion, ok, detail=""):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {criterion} {detail}".rstrip())

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
