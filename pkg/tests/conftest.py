import random

import pytest
from hypothesis import settings

from agol.braid3 import BraidWord, PsaForm

# fixed examples keep the suite reproducible
settings.register_profile("repo", derandomize=True, deadline=None)
settings.load_profile("repo")


def random_pairs(rng: random.Random, max_length: int) -> list[tuple[int, int]]:
    """Random positive pairs whose entries sum to at most max_length."""
    total = rng.randint(2, max_length)
    pairs = []
    while total >= 2:
        p = rng.randint(1, total - 1)
        q = rng.randint(1, total - p)
        pairs.append((p, q))
        total -= p + q
    return pairs


def random_form(rng: random.Random, max_length: int = 30, twist: int = 3) -> PsaForm:
    return PsaForm(rng.randint(-twist, twist), random_pairs(rng, max_length))


def random_word(rng: random.Random, max_len: int) -> BraidWord:
    n = rng.randint(0, max_len)
    return BraidWord(tuple((rng.choice((1, 2)), rng.choice((1, -1))) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20240617)
