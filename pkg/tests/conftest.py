import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from khtripos.topology import discrete, mk_space  # noqa: E402


@pytest.fixture
def sierpinski():
    return mk_space(["0", "1"], [[], [1], [0, 1]], name="S")


@pytest.fixture
def X2():
    return discrete(["a", "b"], name="X")


@pytest.fixture
def Y2():
    return discrete(["u", "v"], name="Y")
