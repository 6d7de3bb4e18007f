import itertools

import pytest

# One-step weights of the walk, unnormalized: stay -> 1, switch -> i.
U_UNNORMALIZED = [[1, 1j], [1j, 1]]


def amplitude_by_unitary(literal: str) -> complex:
    """2**(n/2) * a(path) as a product of unitary entries u[next][prev]."""
    a = 1 + 0j
    for prev, nxt in zip(literal, literal[1:]):
        a *= U_UNNORMALIZED[int(nxt)][int(prev)]
    return a


def all_literals(n: int):
    for bits in itertools.product("01", repeat=n):
        yield "0" + "".join(bits)


@pytest.fixture
def unitary_amplitude():
    return amplitude_by_unitary
