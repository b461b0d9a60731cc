"""Shared generators and brute-force oracles for the test suite."""

import itertools
import random
from pathlib import Path

from nchilbert.hilbert import IdealSpec
from nchilbert.regex import word_regex
from nchilbert.specfile import load_spec
from nchilbert.words import Alphabet

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
LETTER_NAMES = ("x", "y", "z", "v")


def fixture_spec(name):
    return load_spec(FIXTURES / f"{name}.spec")


def alphabet(n):
    return Alphabet(LETTER_NAMES[:n])


def all_words(n, max_degree):
    for d in range(max_degree + 1):
        yield from itertools.product(range(n), repeat=d)


def brute_prefix_member(basis, w):
    return any(tuple(w[: len(b)]) == tuple(b) for b in basis)


def brute_factor_member(gens, w):
    w = tuple(w)
    return any(
        w[a : a + len(g)] == tuple(g) for g in gens for a in range(len(w) - len(g) + 1)
    )


def random_word(rng, n, min_deg=1, max_deg=4):
    return tuple(rng.randrange(n) for _ in range(rng.randint(min_deg, max_deg)))


def random_prefix_free(rng, n, max_count=4, max_deg=4):
    words = {random_word(rng, n, 1, max_deg) for _ in range(rng.randint(1, max_count))}
    return sorted(
        w for w in words if not any(u != w and w[: len(u)] == u for u in words)
    )


def random_factor_minimal(rng, n, max_count=4, max_deg=4):
    words = {random_word(rng, n, 1, max_deg) for _ in range(rng.randint(1, max_count))}
    return sorted(
        w for w in words if not any(u != w and brute_factor_member([u], w) for u in words)
    )


def spec_from_words(n, side, words):
    return IdealSpec(alphabet(n), side, tuple(word_regex(w) for w in words))


def random_word_specs(seed, count):
    """Deterministic stream of random right and two-sided single-word ideals."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.choice((2, 3))
        side = "right" if k % 2 == 0 else "two-sided"
        words = [random_word(rng, n) for _ in range(rng.randint(0, 4))]
        out.append(spec_from_words(n, side, words))
    return out
