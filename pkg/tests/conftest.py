import pytest

from cosetleaders.code import brute_force_coset_table, bundled_codes, load_code
from cosetleaders.field import FieldSpec
from cosetleaders.ideal import build_ideal

BUNDLED = bundled_codes()
BINARY = ["hamming7", "parity4", "repetition3"]
NON_BINARY = ["random_gf4", "random_gf5", "tetracode"]


@pytest.fixture(scope="session")
def codes():
    return {name: load_code(name) for name in BUNDLED}


@pytest.fixture(scope="session")
def oracles(codes):
    return {name: brute_force_coset_table(code) for name, code in codes.items()}


@pytest.fixture(scope="session")
def registries(codes):
    return {name: build_ideal(code) for name, code in codes.items()}


@pytest.fixture(scope="session")
def gf2():
    return FieldSpec(2)


@pytest.fixture(scope="session")
def gf3():
    return FieldSpec(3)


@pytest.fixture(scope="session")
def gf4():
    return FieldSpec(2, 2, [1, 1, 1])


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
