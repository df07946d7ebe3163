import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tropwfst import parse_text

FIG1_TEXT = (
    "I 0 0\n"
    "0 1 a A 1\n"
    "0 2 a A 2\n"
    "1 3 z Z 42\n"
    "2 4 x X 3\n"
    "F 3 0\n"
    "F 4 0\n"
)

FIG2_TEXT = (
    "I 0 0\n"
    "0 1 <eps> <eps> 1\n"
    "1 2 a a-out 2\n"
    "F 2 0\n"
)


@pytest.fixture
def fig1():
    return parse_text(FIG1_TEXT)


@pytest.fixture
def fig2():
    return parse_text(FIG2_TEXT)
