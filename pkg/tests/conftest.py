import numpy as np
import pytest

from coverst import load_text
from coverst.covertree import CoverSuffixTree

# The 18-symbol worked example used throughout: aaabaabaabaaabaaaa
FIG_TEXT = b"aaabaabaabaaabaaaa"


@pytest.fixture(scope="session")
def fig_text():
    return load_text(FIG_TEXT)


@pytest.fixture(scope="session")
def fig_cst(fig_text):
    return CoverSuffixTree(fig_text)


def random_bytes(rng: np.random.Generator, n: int, sigma: int) -> bytes:
    return bytes(rng.integers(0, sigma, n).astype(np.uint8) + ord("a"))
