"""Evenly spaced binomial sums, their recurrences and closed forms.

The same four sequences ``(s, t, u, v)`` show up as

* sums of every fourth binomial coefficient ``b_j(n) = C(n, j) + C(n, j+4) + ...``,
* the coupled recurrence ``x_j(n+1) = x_j(n) + x_{j-1 mod 4}(n)`` from ``(1, 1, 0, 0)``,
* the third-order recurrence ``w(n+3) = 4w(n+2) - 6w(n+1) + 4w(n)``,
* ``2^(n-2) + 2^(n/2-1) cos((n-2j) pi/4)``, evaluated exactly through ``(1+i)^n``.

All arithmetic is on Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import Dyadic, GaussianInt, InconsistencyError, gauss_pow_1pi

THIRD_ORDER_INITS = {
    "s": (1, 1, 1),
    "t": (1, 2, 3),
    "u": (0, 1, 3),
    "v": (0, 0, 1),
}


@dataclass(frozen=True)
class SequenceQuad:
    n: int
    s: int
    t: int
    u: int
    v: int

    def __post_init__(self):
        if self.s + self.t + self.u + self.v != 1 << self.n:
            raise InconsistencyError(f"quad at n={self.n} does not sum to 2^n")

    def __getitem__(self, j: int) -> int:
        return (self.s, self.t, self.u, self.v)[j]

    def __iter__(self):
        return iter((self.s, self.t, self.u, self.v))

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.s, self.t, self.u, self.v)

    @property
    def quarter_power(self) -> Dyadic:
        """``2^(n-2)``, the value the four sequences oscillate around."""
        return Dyadic(1, 2 - self.n)


@dataclass
class RecurrenceState:
    """Three consecutive terms ``w(n), w(n+1), w(n+2)``."""

    n: int
    window: tuple[int, int, int]

    def advance(self) -> "RecurrenceState":
        a, b, c = self.window
        return RecurrenceState(self.n + 1, (b, c, 4 * c - 6 * b + 4 * a))


def binom(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def binom_sum_mod4(n: int, j: int) -> int:
    if j not in range(4):
        raise ValueError("j must be 0, 1, 2 or 3")
    return sum(binom(n, k) for k in range(j, n + 1, 4))


def spaced_sum_mod2(n: int, parity: int) -> int:
    """Sum of ``C(n, k)`` over ``k`` of the given parity; equals ``2^(n-1)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    return sum(binom(n, k) for k in range(parity, n + 1, 2))


def quad_by_binomials(n: int) -> SequenceQuad:
    return SequenceQuad(n, *(binom_sum_mod4(n, j) for j in range(4)))


def quad_table(max_n: int) -> list[SequenceQuad]:
    """Iterate the coupled recurrence; row ``k`` is ``n = k + 1``."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    x = (1, 1, 0, 0)
    rows = [SequenceQuad(1, *x)]
    for n in range(2, max_n + 1):
        x = tuple(x[j] + x[j - 1] for j in range(4))
        rows.append(SequenceQuad(n, *x))
    return rows


def quad_by_recurrence(n: int) -> SequenceQuad:
    return quad_table(n)[-1]


def third_order_sequence(init, n: int) -> int:
    """``w(n)`` for ``w(1), w(2), w(3) = init``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(init, str):
        init = THIRD_ORDER_INITS[init]
    state = RecurrenceState(1, tuple(init))
    while state.n + 2 < n:
        state = state.advance()
    return state.window[n - state.n]


def third_order_table(init, max_n: int) -> list[int]:
    if isinstance(init, str):
        init = THIRD_ORDER_INITS[init]
    out = list(init)
    while len(out) < max_n:
        out.append(4 * out[-1] - 6 * out[-2] + 4 * out[-3])
    return out[:max_n]


def quad_closed_form(n: int) -> SequenceQuad:
    """``v_j(n) = (2^n + 2 Re((1+i)^n (-i)^j)) / 4``.

    ``2^(n/2 - 1) cos((n - 2j) pi/4)`` is ``Re((1+i)^n (-i)^j) / 2``, so no
    trigonometry is evaluated.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    g = gauss_pow_1pi(n)
    vals = []
    for j in range(4):
        num = (1 << n) + 2 * (g * GaussianInt.unit(-j)).re
        q, r = divmod(num, 4)
        if r:
            raise InconsistencyError(f"closed form not integral at n={n}, j={j}")
        vals.append(q)
    return SequenceQuad(n, *vals)


def alternating_sums(n: int) -> tuple[int, int]:
    """``(sum (-1)^k C(n, 2k), sum (-1)^k C(n, 2k+1))``; these are Re and Im of ``(1+i)^n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    even = sum((-1) ** k * binom(n, 2 * k) for k in range(n // 2 + 1))
    odd = sum((-1) ** k * binom(n, 2 * k + 1) for k in range((n - 1) // 2 + 1))
    return even, odd
