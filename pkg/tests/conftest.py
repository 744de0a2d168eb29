import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from morse_resolve import golden  # noqa: E402
from morse_resolve.taylor import taylor_complex  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def six():
    return golden.six_gen()


@pytest.fixture(scope="session")
def xyz():
    return golden.xyz_squared()


@pytest.fixture(scope="session")
def six_taylor(six):
    return taylor_complex(six)


@pytest.fixture(scope="session")
def xyz_taylor(xyz):
    return taylor_complex(xyz)


def exponents(ideal):
    return [g.exponents for g in ideal.generators]
