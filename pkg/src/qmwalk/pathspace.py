"""n-paths encoded as integers, and the bit statistics built on them.

An n-path ``0 g1 g2 ... gn`` is stored as the integer whose n-bit big-endian
expansion is ``g1 ... gn``; the leading ``0`` is implicit. So ``"01101"`` is
``PathIndex(level=4, index=13)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import CapacityError

VECTOR_CAP = 24


@dataclass(frozen=True)
class PathIndex:
    level: int
    index: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        if not 0 <= self.index < (1 << self.level):
            raise ValueError(f"index {self.index} outside [0, 2^{self.level})")

    @classmethod
    def parse(cls, literal: str) -> "PathIndex":
        """Parse a path literal such as ``"01101"``; it must start with ``0``."""
        literal = literal.strip()
        if len(literal) < 2 or set(literal) - {"0", "1"}:
            raise ValueError(f"not a path literal: {literal!r}")
        if literal[0] != "0":
            raise ValueError(f"paths start at site 0: {literal!r}")
        return cls(len(literal) - 1, int(literal[1:], 2))

    def literal(self) -> str:
        return "0" + format(self.index, f"0{self.level}b")

    @property
    def end_site(self) -> int:
        return self.index & 1


@dataclass(frozen=True, eq=False)
class CountVector:
    """A length ``2**level`` vector of small nonnegative counts (z(n), y(n), ...)."""

    level: int
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != 1 << self.level:
            raise ValueError("length must be 2**level")
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        return int(self.values[j])

    def __eq__(self, other):
        if not isinstance(other, CountVector):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.values, other.values)

    def tolist(self) -> list[int]:
        return [int(v) for v in self.values]


@dataclass(frozen=True)
class ClassCounts:
    level: int
    counts: tuple[int, int, int, int]

    def __post_init__(self):
        if sum(self.counts) != 1 << self.level:
            raise ValueError("class counts must total 2**level")


def _as_path(p, n=None) -> PathIndex:
    if isinstance(p, PathIndex):
        return p
    return PathIndex(n, p)


def switch_count(p, n: int | None = None) -> int:
    """Number of site changes along the path (adjacent unequal symbols).

    Accepts a ``PathIndex`` or ``(index, level)``. The leading 0 counts, so the
    first switch happens when ``g1 == 1``.
    """
    p = _as_path(p, n)
    return bin(p.index ^ (p.index >> 1)).count("1")


def ones_count(p, n: int | None = None) -> int:
    p = _as_path(p, n)
    return bin(p.index).count("1")


def _check_cap(n, cap):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapacityError(f"level {n} exceeds vector cap {cap}")


def z_vector(n: int, cap: int = VECTOR_CAP) -> CountVector:
    """Iterate z(k+1) = (z(k), z(k) + 1) from z(1) = (0, 1)."""
    _check_cap(n, cap)
    z = np.array([0, 1], dtype=np.uint8)
    for _ in range(n - 1):
        z = np.concatenate([z, z + 1])
    return CountVector(n, z)


def y_vector(n: int, cap: int = VECTOR_CAP) -> CountVector:
    """Iterate y(k+1) = (y(k), reversed(y(k) + 1)) from y(1) = (0, 1).

    Component j is the switch count of path j.
    """
    _check_cap(n, cap)
    y = np.array([0, 1], dtype=np.uint8)
    for _ in range(n - 1):
        y = np.concatenate([y, (y + 1)[::-1]])
    return CountVector(n, y)


def switch_counts(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Vectorized switch counts for indices ``start .. stop-1`` at level n.

    Works above the vector cap when the range is kept small.
    """
    if stop is None:
        stop = 1 << n
    return switch_counts_of(np.arange(start, stop, dtype=np.int64))


def switch_counts_of(idx) -> np.ndarray:
    """Switch counts of an array of path indices (level-independent)."""
    idx = np.asarray(idx, dtype=np.int64)
    return _popcount(idx ^ (idx >> 1))


def _popcount(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).astype(np.uint8)
    out = np.zeros(a.shape, dtype=np.uint8)
    a = a.copy()
    while a.any():
        out += (a & 1).astype(np.uint8)
        a >>= 1
    return out


def class_counts(v: CountVector) -> ClassCounts:
    """Count components of ``v`` congruent to 0, 1, 2, 3 mod 4."""
    c = np.bincount(v.values % 4, minlength=4)
    return ClassCounts(v.level, tuple(int(x) for x in c[:4]))


def parity(j: int, k: int) -> int:
    """1 if j and k are both even or both odd, else 0."""
    return 1 if (j - k) % 2 == 0 else 0
