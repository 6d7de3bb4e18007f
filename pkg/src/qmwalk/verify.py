"""Verification suites shared by ``qmwalk verify`` and the acceptance tests.

Every suite returns a :class:`VerificationReport`. Random suites draw from
``numpy.random.default_rng([seed, suite_tag, n])`` (PCG64), so a report is a
pure function of its arguments apart from ``elapsed``.
"""

from __future__ import annotations

import functools
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import combinatorics as cb
from . import decoherence as dc
from . import pathspace as ps
from . import qmeasure as qm
from .exact import Dyadic, gauss_pow_1pi

DEFAULT_SEED = 20100614

# Table 1 as printed: n -> (s, t, u, v)
TABLE1 = {
    1: (1, 1, 0, 0),
    2: (1, 2, 1, 0),
    3: (1, 3, 3, 1),
    4: (2, 4, 6, 4),
    5: (6, 6, 10, 10),
    6: (16, 12, 16, 20),
    7: (36, 28, 28, 36),
    8: (72, 64, 56, 64),
    9: (136, 136, 120, 120),
    10: (256, 272, 256, 240),
    11: (496, 528, 528, 496),
    12: (992, 1024, 1056, 1024),
    13: (2016, 2016, 2080, 2080),
    14: (4096, 4032, 4096, 4160),
    15: (8256, 8128, 8128, 8256),
}

# mu_2 values of the worked level-2 example: (indices, value)
EXAMPLE1 = [
    ((), Dyadic(0)),
    ((0,), Dyadic(1, 2)),
    ((1,), Dyadic(1, 2)),
    ((2,), Dyadic(1, 2)),
    ((3,), Dyadic(1, 2)),
    ((0, 2), Dyadic(0)),
    ((0, 1), Dyadic(1, 1)),
    ((0, 3), Dyadic(1, 1)),
    ((1, 2), Dyadic(1, 1)),
    ((2, 3), Dyadic(1, 1)),
    ((1, 3), Dyadic(1)),
    ((0, 1, 2), Dyadic(1, 2)),
    ((0, 1, 2, 3), Dyadic(1)),
    ((0, 1, 3), Dyadic(5, 2)),
    ((1, 2, 3), Dyadic(5, 2)),
]

COMPLEMENT_KNOWN = {1: Dyadic(1, 1), 2: Dyadic(5, 2), 3: Dyadic(13, 3), 4: Dyadic(25, 4)}


@dataclass
class VerificationReport:
    suite: str
    seed: int | None = None
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **inputs) -> bool:
        self.cases += 1
        if not ok:
            self.failures.append({k: _jsonable(v) for k, v in inputs.items()})
        return ok

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.ok,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def summary(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.suite}: {self.cases} cases, {len(self.failures)} failures ({self.elapsed:.2f}s)"


def _jsonable(v):
    if isinstance(v, Dyadic):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.integer):
        return int(v)
    return v


def _rng(seed, tag, n):
    return np.random.default_rng([seed, tag, n])


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - t0
        return rep

    return wrapper


@_timed
def suite_example1() -> VerificationReport:
    rep = VerificationReport("example1")
    for idx, want in EXAMPLE1:
        a = qm.Event.from_indices(2, idx)
        pair, fast = qm.mu_pairsum(a), qm.mu_fast(a)
        rep.check(pair == want and fast == want, event=idx, expected=want, pairsum=pair, fast=fast)
    return rep


@_timed
def suite_table1() -> VerificationReport:
    rep = VerificationReport("table1")
    rec = cb.quad_table(15)
    for n, row in TABLE1.items():
        closed = cb.quad_closed_form(n).as_tuple()
        rep.check(closed == row and rec[n - 1].as_tuple() == row,
                  n=n, expected=row, closed=closed, recurrence=rec[n - 1].as_tuple())
    return rep


@_timed
def suite_equivalence(max_n: int = 200, path_max_n: int = 16) -> VerificationReport:
    """Binomial sums, both recurrences, closed form and path counts agree."""
    rep = VerificationReport("equivalence")
    rec = cb.quad_table(max_n)
    third = {k: cb.third_order_table(k, max_n) for k in "stuv"}
    prev = None
    for n in range(1, max_n + 1):
        binoms = cb.quad_by_binomials(n).as_tuple()
        recur = rec[n - 1].as_tuple()
        thr = tuple(third[k][n - 1] for k in "stuv")
        closed = cb.quad_closed_form(n).as_tuple()
        rep.check(binoms == recur == thr == closed,
                  n=n, binomial=binoms, recurrence=recur, third_order=thr, closed=closed)
        if n <= path_max_n:
            counts = ps.class_counts(ps.z_vector(n)).counts
            rep.check(counts == binoms, n=n, path_counts=counts, binomial=binoms)
        if prev is not None:
            shifted = tuple(prev[j] + prev[j - 1] for j in range(4))
            rep.check(shifted == binoms, n=n, pascal_shift=shifted, binomial=binoms)
        rep.check(sum(binoms) == 1 << n, n=n, row_sum=sum(binoms))
        # |v_j - 2^(n-2)| <= 2^(n/2 - 1), i.e. (4 v_j - 2^n)^2 <= 2^(n+2)
        dev = max((4 * x - (1 << n)) ** 2 for x in binoms)
        rep.check(dev <= 1 << (n + 2), n=n, deviation_squared=dev)
        prev = binoms
    return rep


@_timed
def suite_gaussian(max_n: int = 200) -> VerificationReport:
    rep = VerificationReport("gaussian")
    for n in range(1, max_n + 1):
        g = gauss_pow_1pi(n)
        alt = cb.alternating_sums(n)
        rep.check(alt == (g.re, g.im), n=n, alternating=alt, power=(g.re, g.im))
        rep.check(cb.spaced_sum_mod2(n, 0) == cb.spaced_sum_mod2(n, 1) == 1 << (n - 1), n=n)
    return rep


def _switches_by_scanning(j: int, n: int) -> int:
    s = "0" + format(j, f"0{n}b")
    return sum(a != b for a, b in zip(s, s[1:]))


@_timed
def suite_pathspace(max_n: int = 16) -> VerificationReport:
    rep = VerificationReport("pathspace")
    for n in range(1, max_n + 1):
        y, z = ps.y_vector(n), ps.z_vector(n)
        rep.check(sorted(y.values.tolist()) == sorted(z.values.tolist()), n=n, check="multiset")
        direct = np.array([_switches_by_scanning(j, n) for j in range(1 << n)], dtype=np.uint8)
        rep.check(np.array_equal(direct, y.values), n=n, check="y equals switch counts")
        pop = np.array([bin(j).count("1") for j in range(1 << n)], dtype=np.uint8)
        rep.check(np.array_equal(pop, z.values), n=n, check="z equals ones counts")
        if n < max_n:
            c, c1 = ps.class_counts(z).counts, ps.class_counts(ps.z_vector(n + 1)).counts
            rep.check(c1 == tuple(c[j] + c[j - 1] for j in range(4)), n=n, check="class recurrence")
            # reflection identity: s_{2^(n+1)-1-j}(n+1) = s_j(n) + 1
            top = (1 << (n + 1)) - 1
            j = np.arange(1 << n, dtype=np.int64)
            lhs = ps.switch_counts_of(top - j)
            rep.check(np.array_equal(lhs, y.values + 1), n=n, check="reflection")
    return rep


@_timed
def suite_decoherence(max_n: int = 12, pointwise_max_n: int = 6) -> VerificationReport:
    rep = VerificationReport("decoherence")
    for n in range(1, max_n + 1):
        d = dc.decoherence_matrix(n)
        s = d.signs
        rep.check(np.array_equal(s, s.T), n=n, check="symmetric")
        rep.check(bool((np.diag(s) == 1).all()), n=n, check="unit diagonal")
        j = np.arange(1 << n)
        zero_exactly_on_mixed_parity = np.array_equal(s == 0, (j[:, None] - j[None, :]) % 2 == 1)
        rep.check(zero_exactly_on_mixed_parity, n=n, check="zero pattern")
        rep.check(d.total() == 1, n=n, check="total", total=d.total())
        rep.check(dc.psd_certificate(n).certified, n=n, check="psd")
        if n <= pointwise_max_n:
            ok = all(
                dc.decoherence_entry(ps.PathIndex(n, a), ps.PathIndex(n, b)) == d[a, b]
                for a in range(1 << n) for b in range(1 << n)
            )
            rep.check(ok, n=n, check="pointwise entries")
    return rep


@_timed
def suite_axioms(seed: int = DEFAULT_SEED, max_n: int = 12, events: int = 1000,
                 triples: int = 1000, norm_max_n: int = 20) -> VerificationReport:
    """Nonnegativity, grade-2 additivity, normalization."""
    rep = VerificationReport("axioms", seed=seed)
    for n in range(1, max_n + 1):
        masks = qm.random_masks(_rng(seed, 1, n), n, events)
        for i, m in enumerate(qm.mu_fast_many(n, masks)):
            rep.check(m >= 0, n=n, event=i, mu=m)
        labels = qm.random_disjoint_labels(_rng(seed, 2, n), n, triples)
        a, b, c = labels == 0, labels == 1, labels == 2
        mu = {key: qm.mu_fast_many(n, m) for key, m in
              {"a": a, "b": b, "c": c, "ab": a | b, "ac": a | c, "bc": b | c, "abc": a | b | c}.items()}
        for i in range(triples):
            lhs = mu["abc"][i]
            rhs = mu["ab"][i] + mu["ac"][i] + mu["bc"][i] - mu["a"][i] - mu["b"][i] - mu["c"][i]
            rep.check(lhs == rhs, n=n, triple=i, lhs=lhs, rhs=rhs)
    for n in range(1, norm_max_n + 1):
        m = qm.mu_fast(qm.Event.full(n))
        rep.check(m == 1, n=n, check="normalization", mu=m)
    return rep


def all_masks(n: int) -> np.ndarray:
    """Every subset of the level-n paths, one row per subset (row r has mask r)."""
    r = np.arange(1 << (1 << n), dtype=np.int64)
    return ((r[:, None] >> np.arange(1 << n)) & 1).astype(bool)


@_timed
def suite_oracle(seed: int = DEFAULT_SEED, events: int = 10_000, exhaustive_n: int = 4,
                 min_n: int = 5, max_n: int = 12) -> VerificationReport:
    """Definitional pair sum against the amplitude-sum route."""
    rep = VerificationReport("oracle", seed=seed)
    masks = all_masks(exhaustive_n)
    pair = qm.mu_pairsum_many(exhaustive_n, masks)
    fast = qm.mu_fast_many(exhaustive_n, masks)
    for r, (p, f) in enumerate(zip(pair, fast)):
        rep.check(p == f, n=exhaustive_n, mask=r, pairsum=p, fast=f)
    for n in range(min_n, max_n + 1):
        masks = qm.random_masks(_rng(seed, 3, n), n, events)
        pair = qm.mu_pairsum_many(n, masks)
        fast = qm.mu_fast_many(n, masks)
        for i, (p, f) in enumerate(zip(pair, fast)):
            rep.check(p == f, n=n, event=i, pairsum=p, fast=f)
    return rep


@_timed
def suite_cylinder(seed: int = DEFAULT_SEED, bases: int = 1000, max_n: int = 10,
                   max_extra: int = 4) -> VerificationReport:
    rep = VerificationReport("cylinder", seed=seed)
    for n in range(1, max_n + 1):
        masks = qm.random_masks(_rng(seed, 4, n), n, bases)
        base_mu = qm.mu_fast_many(n, masks)
        for k in range(1, max_extra + 1):
            refined = qm.mu_fast_many(n + k, qm.refine_masks(masks, k))
            for i, (m0, m1) in enumerate(zip(base_mu, refined)):
                rep.check(m0 == m1, n=n, extra_levels=k, base=i, mu=m0, refined=m1)
    for n in range(1, max_n + 1):
        prefix = qm.CylinderEvent.from_prefix("0" * (n + 1))
        m = qm.mu_cylinder(prefix)
        rep.check(m == Dyadic(1, n), n=n, check="singleton cylinder", mu=m)
    return rep


@_timed
def suite_complement(max_n: int = 20) -> VerificationReport:
    rep = VerificationReport("complement")
    for n in range(1, max_n + 1):
        brute = qm.mu_fast(qm.complement_event(n))
        row = qm.mu_complement_rowsum(n)
        closed = qm.mu_complement_closed(n)
        rep.check(brute == row == closed, n=n, brute=brute, rowsum=row, closed=closed)
        if n in COMPLEMENT_KNOWN:
            rep.check(closed == COMPLEMENT_KNOWN[n], n=n, expected=COMPLEMENT_KNOWN[n], closed=closed)
    rep.check(qm.rowsum_phase_sum(4) == -4, n=4, check="phase sum")
    return rep


@_timed
def suite_convergence(max_n: int = 64) -> VerificationReport:
    rep = VerificationReport("convergence")
    for row in qm.convergence_report(max_n):
        rep.check(row.within_bound(), n=row.n, mu=row.mu)
        if row.n % 4 == 2:
            rep.check(row.mu == 1 + Dyadic(1, row.n), n=row.n, mu=row.mu)
    return rep


SUITES = {
    "example1": suite_example1,
    "table1": suite_table1,
    "equivalence": suite_equivalence,
    "gaussian": suite_gaussian,
    "pathspace": suite_pathspace,
    "decoherence": suite_decoherence,
    "axioms": suite_axioms,
    "oracle": suite_oracle,
    "cylinder": suite_cylinder,
    "complement": suite_complement,
    "convergence": suite_convergence,
}

SEEDED = {"axioms", "oracle", "cylinder"}


def run_suites(names=None, seed: int = DEFAULT_SEED, samples: int | None = None,
               max_n: int | None = None) -> list[VerificationReport]:
    """Run suites in fixed (sorted) order.

    ``samples`` overrides the random sample counts; ``max_n`` overrides the
    range of the closed-form sweeps (equivalence, gaussian, convergence).
    """
    names = sorted(names or SUITES)
    unknown = set(names) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(sorted(unknown))}")
    reports = []
    for name in names:
        kwargs = {}
        if name in SEEDED:
            kwargs["seed"] = seed
            if samples is not None:
                key = {"axioms": ("events", "triples"), "oracle": ("events",), "cylinder": ("bases",)}[name]
                kwargs.update({k: samples for k in key})
        if max_n is not None and name in {"equivalence", "gaussian", "convergence"}:
            kwargs["max_n"] = max_n
        reports.append(SUITES[name](**kwargs))
    return reports


def reports_json(reports, timing: bool = False) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2, sort_keys=True)
