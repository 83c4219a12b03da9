"""Shared helpers for the test suite."""

import itertools


def all_binary_strings(min_len, max_len):
    """Every string over {a, b} with length in [min_len, max_len], shortest first."""
    for n in range(min_len, max_len + 1):
        for tup in itertools.product("ab", repeat=n):
            yield "".join(tup)


def random_text(rng, alphabet, max_len, min_len=1):
    n = rng.randint(min_len, max_len)
    return "".join(rng.choice(alphabet) for _ in range(n))
