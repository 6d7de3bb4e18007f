"""Path amplitudes and the decoherence matrix of the 2-site walk.

The one-step unitary is ``(1/sqrt 2) [[1, i], [i, 1]]``: staying put costs a
factor ``1/sqrt 2``, switching site costs ``i/sqrt 2``. A path with ``s``
switches therefore has amplitude ``i**s / 2**(n/2)``. Every quantity the rest
of the package consumes is of the form ``a(g) * conj(a(g'))``, so the square
roots cancel and ``Z[i]`` over a power-of-two scale is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exact import CapacityError, Dyadic, GaussianInt, InconsistencyError, gauss_pow_1pi
from .pathspace import PathIndex, parity, switch_count, switch_counts, switch_counts_of

MATRIX_CAP = 12

__all__ = [
    "Amplitude",
    "DecoherenceMatrix",
    "PsdCertificate",
    "amplitude",
    "decoherence_entry",
    "decoherence_matrix",
    "psd_certificate",
    "gauss_pow_1pi",
    "MATRIX_CAP",
]


@dataclass(frozen=True)
class Amplitude:
    """``i**phase / 2**(level/2)``."""

    phase: int
    level: int

    def __post_init__(self):
        object.__setattr__(self, "phase", self.phase % 4)

    def __mul__(self, other: "Amplitude") -> "Amplitude":
        return Amplitude(self.phase + other.phase, self.level + other.level)

    def conjugate(self) -> "Amplitude":
        return Amplitude(-self.phase, self.level)

    @property
    def unit(self) -> GaussianInt:
        return GaussianInt.unit(self.phase)

    def times_conj(self, other: "Amplitude") -> tuple[GaussianInt, int]:
        """``self * conj(other)`` as ``(gaussian numerator, exponent of 2)``.

        Only defined when the half-integer levels add to a whole power of two.
        """
        total = self.level + other.level
        if total % 2:
            raise ValueError("product carries an odd power of sqrt 2")
        return GaussianInt.unit(self.phase - other.phase), total // 2

    def modulus_squared(self) -> Dyadic:
        return Dyadic(1, self.level)

    def __complex__(self):
        return complex(self.unit) / 2 ** (self.level / 2)

    def __str__(self):
        unit = ("1", "i", "-1", "-i")[self.phase]
        return f"{unit}/2^({self.level}/2)"


STAY = Amplitude(0, 1)
SWITCH = Amplitude(1, 1)


def amplitude(p: PathIndex) -> Amplitude:
    return Amplitude(switch_count(p), p.level)


def decoherence_entry(j: PathIndex, k: PathIndex) -> Dyadic:
    """``D^n(j, k) = i**(s_j - s_k) * p_jk / 2**n``; always real."""
    if j.level != k.level:
        raise ValueError(f"paths live in different spaces (levels {j.level} and {k.level})")
    if not parity(j.index, k.index):
        return Dyadic(0)
    g, e = amplitude(j).times_conj(amplitude(k))
    if g.im:
        raise InconsistencyError(f"non-real decoherence between {j} and {k}")
    return Dyadic(g.re, e)


@dataclass(frozen=True, eq=False)
class DecoherenceMatrix:
    """Sign array ``S`` with ``D^n = S / 2**level``."""

    level: int
    signs: np.ndarray

    @property
    def scale_exponent(self) -> int:
        return self.level

    def __getitem__(self, jk) -> Dyadic:
        j, k = jk
        return Dyadic(int(self.signs[j, k]), self.level)

    def total(self) -> Dyadic:
        return Dyadic(int(self.signs.sum(dtype=np.int64)), self.level)

    def __eq__(self, other):
        if not isinstance(other, DecoherenceMatrix):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.signs, other.signs)


def _check_matrix_cap(n, cap):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapacityError(f"level {n} exceeds matrix cap {cap}")


def sign_block(rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Signs of ``D^n`` restricted to the given row and column indices."""
    sr = switch_counts_of(rows)
    sc = switch_counts_of(cols)
    same_end = (rows[:, None] & 1) == (cols[None, :] & 1)
    # same end site forces s_j - s_k even, so the phase is +1 or -1
    phase = ((sr[:, None].astype(np.int16) - sc[None, :]) % 4) == 0
    out = np.where(phase, 1, -1).astype(np.int8)
    out[~same_end] = 0
    return out


@lru_cache(maxsize=4)
def _matrix(n: int) -> DecoherenceMatrix:
    idx = np.arange(1 << n, dtype=np.int64)
    signs = sign_block(idx, idx)
    signs.setflags(write=False)
    return DecoherenceMatrix(n, signs)


def decoherence_matrix(n: int, cap: int = MATRIX_CAP) -> DecoherenceMatrix:
    _check_matrix_cap(n, cap)
    return _matrix(n)


@dataclass(frozen=True)
class PsdCertificate:
    level: int
    entries_checked: int
    certified: bool


def amplitude_vectors(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Real and imaginary parts of ``2**(n/2) * a(j)`` for every path j."""
    s = switch_counts(n) % 4
    re = np.array([1, 0, -1, 0], dtype=np.int64)[s]
    im = np.array([0, 1, 0, -1], dtype=np.int64)[s]
    return re, im


def psd_certificate(n: int, cap: int = MATRIX_CAP) -> PsdCertificate:
    """Certify ``D^n >= 0`` by exhibiting ``D^n = w0 w0* + w1 w1*``.

    ``w_e`` holds the amplitude of each path that ends at site e and zero
    elsewhere. Every entry of the reconstruction is compared with the matrix
    in exact integer arithmetic (both sides scaled by ``2**n``).
    """
    _check_matrix_cap(n, cap)
    d = decoherence_matrix(n, cap)
    re, im = amplitude_vectors(n)
    end = np.arange(1 << n) & 1
    w = [(np.where(end == e, re, 0), np.where(end == e, im, 0)) for e in (0, 1)]
    size = 1 << n
    block = max(1, (1 << 20) // size)
    for lo in range(0, size, block):
        hi = min(size, lo + block)
        rec_re = np.zeros((hi - lo, size), dtype=np.int64)
        rec_im = np.zeros_like(rec_re)
        for wr, wi in w:
            # (a + bi)(c - di) = (ac + bd) + (bc - ad)i
            rec_re += np.outer(wr[lo:hi], wr) + np.outer(wi[lo:hi], wi)
            rec_im += np.outer(wi[lo:hi], wr) - np.outer(wr[lo:hi], wi)
        if rec_im.any() or not np.array_equal(rec_re, d.signs[lo:hi]):
            raise InconsistencyError(f"rank-2 reconstruction of D^{n} failed in rows {lo}..{hi - 1}")
    return PsdCertificate(n, size * size, True)
