import pytest

from altsym.perm import Permutation, element_of, natural_oracle, perm_of


class Lab:
    """A natural Sym_n oracle with helpers for writing permutations by cycles."""

    def __init__(self, n: int, seed: int = 0, kind: str = "sym"):
        self.n = n
        self.G = natural_oracle(kind, n, seed)

    def P(self, *cycles) -> Permutation:
        return Permutation.from_cycles(*cycles, degree=self.n)

    def E(self, *cycles):
        return element_of(self.G, self.P(*cycles))

    def perm(self, x) -> Permutation:
        return perm_of(self.G, x)


@pytest.fixture
def lab9():
    return Lab(9)


@pytest.fixture
def lab12():
    return Lab(12)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
