"""Events, cylinder sets and the quantum measure.

Three ways to evaluate ``mu_n(A)``:

* ``mu_pairsum``: the definition, a double sum of decoherence entries over
  member pairs. O(|A|^2); kept as the oracle.
* ``mu_fast``: ``|sum of amplitudes ending at 0|^2 + |... ending at 1|^2``,
  which is the same double sum regrouped. O(2^n).
* for the complement of the all-zeros path only: the boundary row sum
  (``mu_complement_rowsum``) and the closed form via ``(1 + i)**n``
  (``mu_complement_closed``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decoherence import decoherence_matrix, sign_block
from .exact import CapacityError, Dyadic, GaussianInt, InconsistencyError, gauss_pow_1pi
from .pathspace import PathIndex, switch_counts_of

PAIRSUM_CAP = 14
SCAN_CAP = 30
BATCH_MATRIX_CAP = 12


class Event:
    """A subset of the level-n sample space, stored as a boolean membership array."""

    __slots__ = ("level", "members")

    def __init__(self, level: int, members):
        if level < 1:
            raise ValueError("level must be positive")
        members = np.asarray(members, dtype=bool)
        if members.shape != (1 << level,):
            raise ValueError(f"membership vector must have length 2^{level}")
        members.setflags(write=False)
        self.level = level
        self.members = members

    @classmethod
    def empty(cls, n: int) -> "Event":
        return cls(n, np.zeros(1 << n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "Event":
        return cls(n, np.ones(1 << n, dtype=bool))

    @classmethod
    def from_indices(cls, n: int, indices) -> "Event":
        m = np.zeros(1 << n, dtype=bool)
        idx = np.asarray(list(indices), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= 1 << n):
            raise ValueError(f"index out of range for level {n}")
        m[idx] = True
        return cls(n, m)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Event":
        """Bit j of ``mask`` is the membership of path j."""
        if mask < 0 or mask >> (1 << n):
            raise ValueError(f"mask has bits beyond 2^{n} paths")
        raw = mask.to_bytes(((1 << n) + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return cls(n, bits[: 1 << n].astype(bool))

    @classmethod
    def from_paths(cls, literals) -> "Event":
        paths = [PathIndex.parse(s) for s in literals]
        levels = {p.level for p in paths}
        if len(levels) != 1:
            raise ValueError("all paths of an event must have the same length")
        return cls.from_indices(levels.pop(), [p.index for p in paths])

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    def to_mask(self) -> int:
        packed = np.packbits(self.members, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def __len__(self):
        return int(self.members.sum())

    def __contains__(self, j):
        return bool(self.members[j])

    def _same_level(self, other: "Event"):
        if not isinstance(other, Event):
            raise TypeError("expected an Event")
        if other.level != self.level:
            raise ValueError(
                f"events at levels {self.level} and {other.level}; refine one explicitly"
            )

    def __or__(self, other):
        self._same_level(other)
        return Event(self.level, self.members | other.members)

    def __and__(self, other):
        self._same_level(other)
        return Event(self.level, self.members & other.members)

    def __sub__(self, other):
        self._same_level(other)
        return Event(self.level, self.members & ~other.members)

    def complement(self) -> "Event":
        return Event(self.level, ~self.members)

    def isdisjoint(self, other) -> bool:
        self._same_level(other)
        return not (self.members & other.members).any()

    def issubset(self, other) -> bool:
        self._same_level(other)
        return not (self.members & ~other.members).any()

    def __eq__(self, other):
        if not isinstance(other, Event):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash((self.level, self.members.tobytes()))

    def __repr__(self):
        idx = self.indices()
        shown = ", ".join(map(str, idx[:8])) + (", ..." if idx.size > 8 else "")
        return f"Event(level={self.level}, {{{shown}}})"


def _check(n, cap, what, hint=""):
    if n > cap:
        raise CapacityError(f"level {n} exceeds {what} cap {cap}{hint}")


def mu_pairsum(a: Event, cap: int = PAIRSUM_CAP) -> Dyadic:
    """Sum ``D^n(g, g')`` over every ordered pair of members of ``a``."""
    _check(a.level, cap, "pair-sum", "; use mu_fast")
    idx = a.indices()
    total = 0
    block = max(1, (1 << 22) // max(1, idx.size))
    for lo in range(0, idx.size, block):
        total += int(sign_block(idx[lo : lo + block], idx).sum(dtype=np.int64))
    return Dyadic(total, a.level)


def mu_pairsum_many(n: int, masks: np.ndarray, batch: int = 512) -> list[Dyadic]:
    """``mu_pairsum`` for every row of a ``(k, 2**n)`` membership matrix.

    Evaluates the quadratic form ``x^T S x`` against the materialized sign
    matrix. Float64 BLAS is exact here: every partial sum is an integer of
    magnitude at most ``4**n <= 2**24``.
    """
    _check(n, BATCH_MATRIX_CAP, "batched pair-sum")
    s = decoherence_matrix(n).signs.astype(np.float64)
    masks = np.asarray(masks)
    out = []
    for lo in range(0, masks.shape[0], batch):
        x = masks[lo : lo + batch].astype(np.float64)
        q = np.einsum("ij,ij->i", x @ s, x)
        qi = np.rint(q).astype(np.int64)
        if not np.array_equal(qi, q):
            raise InconsistencyError("non-integral quadratic form")
        out.extend(Dyadic(int(v), n) for v in qi)
    return out


def _phase_table(n: int) -> np.ndarray:
    """One-hot ``(2**n, 8)`` table: column ``4*end + phase`` for each path."""
    j = np.arange(1 << n, dtype=np.int64)
    col = 4 * (j & 1) + (switch_counts_of(j) % 4)
    table = np.zeros((1 << n, 8), dtype=np.int64)
    table[j, col] = 1
    return table


def _counts_to_sums(c) -> tuple[GaussianInt, GaussianInt]:
    c = [int(x) for x in c]
    return (
        GaussianInt(c[0] - c[2], c[1] - c[3]),
        GaussianInt(c[4] - c[6], c[5] - c[7]),
    )


def end_site_sums(a: Event) -> tuple[GaussianInt, GaussianInt]:
    """``2**(n/2)`` times the total amplitude of members ending at site 0 and at site 1."""
    idx = a.indices()
    key = 4 * (idx & 1) + (switch_counts_of(idx) % 4)
    return _counts_to_sums(np.bincount(key, minlength=8))


def mu_fast(a: Event, cap: int = SCAN_CAP) -> Dyadic:
    _check(a.level, cap, "scan")
    w0, w1 = end_site_sums(a)
    return Dyadic(w0.norm() + w1.norm(), a.level)


def mu_fast_many(n: int, masks: np.ndarray, batch: int = 256) -> list[Dyadic]:
    """``mu_fast`` for every row of a ``(k, 2**n)`` membership matrix."""
    _check(n, SCAN_CAP, "scan")
    table = _phase_table(n).astype(np.float64)
    masks = np.asarray(masks)
    out = []
    for lo in range(0, masks.shape[0], batch):
        # counts are integers below 2**n, exact in float64
        counts = np.rint(masks[lo : lo + batch].astype(np.float64) @ table).astype(np.int64)
        for row in counts:
            w0, w1 = _counts_to_sums(row)
            out.append(Dyadic(w0.norm() + w1.norm(), n))
    return out


mu = mu_fast


@dataclass(frozen=True)
class Grade2Report:
    lhs: Dyadic
    rhs: Dyadic

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def grade2_check(a: Event, b: Event, c: Event, measure=mu_fast) -> Grade2Report:
    """Compare ``mu(AuBuC)`` with the inclusion-exclusion of pairs and singles."""
    if not (a.isdisjoint(b) and a.isdisjoint(c) and b.isdisjoint(c)):
        raise ValueError("grade-2 additivity needs mutually disjoint events")
    lhs = measure(a | b | c)
    rhs = measure(a | b) + measure(a | c) + measure(b | c) - measure(a) - measure(b) - measure(c)
    return Grade2Report(lhs, rhs)


@dataclass(frozen=True)
class CylinderEvent:
    """``base x {0,1} x {0,1} x ...`` for a level-n base event."""

    base: Event

    @property
    def base_level(self) -> int:
        return self.base.level

    @classmethod
    def from_prefix(cls, literal: str) -> "CylinderEvent":
        """Elementary cylinder of a single path prefix such as ``"01101"``."""
        return cls(Event.from_paths([literal]))

    def contains(self, path: PathIndex) -> bool:
        """Membership of any path at level >= base_level."""
        if path.level < self.base_level:
            raise ValueError("path is shorter than the cylinder base")
        return path.index >> (path.level - self.base_level) in self.base


def refine(c: CylinderEvent, m: int) -> CylinderEvent:
    """Represent the same cylinder with a level-m base."""
    n = c.base_level
    if m < n:
        raise ValueError(f"cannot refine level {n} to coarser level {m}")
    return CylinderEvent(Event(m, np.repeat(c.base.members, 1 << (m - n))))


def refine_masks(masks: np.ndarray, k: int) -> np.ndarray:
    """Batched ``refine`` by ``k`` extra levels on a ``(rows, 2**n)`` matrix."""
    return np.repeat(np.asarray(masks), 1 << k, axis=1)


def mu_cylinder(c: CylinderEvent) -> Dyadic:
    return mu_fast(c.base)


def complement_event(n: int) -> Event:
    """Paths of length n other than all-zeros: the walker has left site 0."""
    m = np.ones(1 << n, dtype=bool)
    m[0] = False
    return Event(n, m)


def rowsum_phase_terms(n: int, cap: int = SCAN_CAP, chunk: int = 1 << 22):
    """Yield ``i**s`` (each +1 or -1) for the even paths 0, 2, 4, ... in chunks.

    Even paths end at site 0, so their switch counts are even.
    """
    _check(n, cap, "scan")
    half = 1 << (n - 1)
    for lo in range(0, half, chunk):
        j = 2 * np.arange(lo, min(half, lo + chunk), dtype=np.int64)
        s = switch_counts_of(j)
        if (s % 2).any():
            raise InconsistencyError("odd switch count on a path ending at site 0")
        yield np.where(s % 4 == 0, 1, -1).astype(np.int8)


def rowsum_phase_sum(n: int, cap: int = SCAN_CAP) -> int:
    return sum(int(t.sum(dtype=np.int64)) for t in rowsum_phase_terms(n, cap))


def mu_complement_rowsum(n: int, cap: int = SCAN_CAP) -> Dyadic:
    """``1 + 1/2^n - (1/2^(n-1)) * sum_j i**s_{2j}(n)`` over the even paths."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = rowsum_phase_sum(n, cap)
    return Dyadic((1 << n) + 1 - 2 * total, n)


def mu_complement_closed(n: int) -> Dyadic:
    """``1 + 1/2^n - Re((1+i)^n) / 2^(n-1)``, exact for any n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Dyadic((1 << n) + 1 - 2 * gauss_pow_1pi(n).re, n)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    mu: Dyadic

    @property
    def deviation(self) -> Dyadic:
        return self.mu - 1

    @property
    def bound(self) -> float:
        """``2^-n + 2^(1 - n/2)``; irrational for odd n, so presentation only."""
        return 2.0 ** -self.n + 2.0 ** (1 - self.n / 2)

    def within_bound(self) -> bool:
        # |mu - 1| = |d| / 2^n with d an integer; the bound is
        # (1 + 2^(n/2 + 1)) / 2^n, so compare |d| - 1 with 2^(n/2 + 1) exactly
        d = abs(self.deviation.shift(self.n))
        if not d.is_integer():
            raise InconsistencyError("deviation is not a multiple of 2^-n")
        excess = d.numerator - 1
        return excess <= 0 or excess * excess <= 1 << (self.n + 2)


def convergence_report(max_n: int, closed=mu_complement_closed) -> list[ConvergenceRow]:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rows = [ConvergenceRow(n, closed(n)) for n in range(1, max_n + 1)]
    for r in rows:
        if not r.within_bound():
            raise InconsistencyError(f"|mu - 1| exceeds the bound at n={r.n}")
    return rows


def random_masks(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """``count`` uniform random events at level n: each path kept with probability 1/2."""
    return rng.integers(0, 2, size=(count, 1 << n), dtype=np.uint8).astype(bool)


def random_disjoint_labels(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """Label every path 0, 1, 2 (in A, B or C) or 3 (in none), uniformly."""
    return rng.integers(0, 4, size=(count, 1 << n), dtype=np.uint8)
