from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_literals, amplitude_by_unitary
from qmwalk.exact import CapacityError, Dyadic, gauss_pow_1pi
from qmwalk.qmeasure import (
    CylinderEvent, Event, complement_event, convergence_report, end_site_sums, grade2_check,
    mu_complement_closed, mu_complement_rowsum, mu_cylinder, mu_fast, mu_fast_many, mu_pairsum,
    mu_pairsum_many, random_disjoint_labels, random_masks, refine, rowsum_phase_sum,
    rowsum_phase_terms,
)
from qmwalk.verify import EXAMPLE1, all_masks


def brute_mu(n, indices):
    """Definitional double sum with amplitudes from the unitary, as a Fraction."""
    lits = list(all_literals(n))
    total = 0
    for j in indices:
        for k in indices:
            if lits[j][-1] == lits[k][-1]:
                total += amplitude_by_unitary(lits[j]) * amplitude_by_unitary(lits[k]).conjugate()
    assert total.imag == 0 if isinstance(total, complex) else True
    return Fraction(int(complex(total).real), 2**n)


def ev(n, *idx):
    return Event.from_indices(n, idx)


@pytest.mark.parametrize("idx, value", EXAMPLE1)
def test_example1_both_routes(idx, value):
    a = Event.from_indices(2, idx)
    assert mu_pairsum(a) == value
    assert mu_fast(a) == value
    assert brute_mu(2, idx) == value.to_fraction()


def test_mu_fast_examples():
    assert mu_fast(ev(2, 1, 2, 3)) == Dyadic(5, 2)
    assert mu_fast(Event.empty(7)) == 0
    for n in (1, 5, 11):
        for j in (0, 3 % 2**n, 2**n - 1):
            assert mu_fast(ev(n, j)) == Dyadic(1, n)


def test_non_monotone_witness():
    small, big = ev(2, 0, 1, 2), ev(2, 1, 3)
    assert mu_fast(small) == Dyadic(1, 2) < mu_fast(big) == 1
    assert mu_fast(ev(2, 0, 1, 2)) < mu_fast(ev(2, 1, 2, 3))
    # a concrete A subset of B with mu(A) > mu(B)
    a, b = ev(2, 1, 3), Event.full(2)
    a2, b2 = ev(2, 0, 1, 3), ev(2, 0, 1, 2, 3)
    assert a.issubset(b) and a2.issubset(b2)
    assert mu_fast(a2) == Dyadic(5, 2) > mu_fast(b2) == 1
    # and additivity fails on disjoint events
    assert mu_fast(ev(2, 0) | ev(2, 2)) != mu_fast(ev(2, 0)) + mu_fast(ev(2, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pairsum_against_brute_exhaustive(n):
    for mask in range(2 ** (2**n)):
        a = Event.from_mask(n, mask)
        assert mu_pairsum(a).to_fraction() == brute_mu(n, list(a.indices()))


def test_pairsum_equals_fast_exhaustive_n4():
    masks = all_masks(4)
    assert mu_pairsum_many(4, masks) == mu_fast_many(4, masks)
    for m in range(0, 2**16, 997):
        a = Event.from_mask(4, m)
        assert mu_pairsum(a) == mu_fast(a)


@pytest.mark.parametrize("n", range(5, 13))
def test_pairsum_single_vs_batch(n):
    masks = random_masks(np.random.default_rng(n), n, 3)
    batch = mu_pairsum_many(n, masks)
    for m, b in zip(masks, batch):
        a = Event(n, m)
        assert mu_pairsum(a) == b == mu_fast(a)


def test_pairsum_cap():
    with pytest.raises(CapacityError, match="mu_fast"):
        mu_pairsum(Event.empty(15))


@pytest.mark.parametrize("n", range(1, 13))
def test_nonnegative_random(n):
    masks = random_masks(np.random.default_rng(100 + n), n, 200)
    assert all(m >= 0 for m in mu_fast_many(n, masks))


@pytest.mark.parametrize("n", range(1, 21))
def test_normalization(n):
    assert mu_fast(Event.full(n)) == 1


def test_grade2_examples():
    r = grade2_check(ev(2, 0), ev(2, 1), ev(2, 2))
    assert r.lhs == r.rhs == Dyadic(1, 2)
    assert r.holds
    e = Event.empty(3)
    r = grade2_check(e, e, e)
    assert r.lhs == r.rhs == 0
    r = grade2_check(ev(2, 0), ev(2, 1), ev(2, 2), measure=mu_pairsum)
    assert r.holds


def test_grade2_precondition():
    with pytest.raises(ValueError):
        grade2_check(ev(2, 0, 1), ev(2, 1), ev(2, 2))


@pytest.mark.parametrize("n", range(1, 11))
def test_grade2_random_triples(n):
    labels = random_disjoint_labels(np.random.default_rng(200 + n), n, 1000 if n == 3 else 60)
    for row in labels:
        a, b, c = (Event(n, row == t) for t in range(3))
        assert grade2_check(a, b, c).holds


@settings(max_examples=50)
@given(st.data())
def test_grade2_hypothesis(data):
    n = data.draw(st.integers(1, 6))
    labels = data.draw(st.lists(st.integers(0, 3), min_size=2**n, max_size=2**n))
    row = np.array(labels)
    a, b, c = (Event(n, row == t) for t in range(3))
    assert grade2_check(a, b, c).holds


def test_event_ops():
    a, b = ev(3, 1, 2), ev(3, 2, 5)
    assert (a | b) == ev(3, 1, 2, 5)
    assert (a & b) == ev(3, 2)
    assert (a - b) == ev(3, 1)
    assert a.complement() == ev(3, 0, 3, 4, 5, 6, 7)
    assert not a.isdisjoint(b)
    assert ev(3, 1).isdisjoint(ev(3, 2))
    assert len(a | b) == 3 and 5 in b
    with pytest.raises(ValueError, match="refine"):
        a | ev(2, 1)


def test_event_mask_roundtrip():
    a = Event.from_mask(4, 0xFFFE)
    assert a == complement_event(4)
    assert a.to_mask() == 0xFFFE
    assert Event.from_paths(["000", "010"]) == ev(2, 0, 2)
    with pytest.raises(ValueError):
        Event.from_mask(2, 1 << 4)


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** (2**n) - 1))))
def test_mask_roundtrip_property(nm):
    n, m = nm
    assert Event.from_mask(n, m).to_mask() == m


def test_refine_examples():
    c = CylinderEvent(ev(1, 0))
    assert refine(c, 2).base == ev(2, 0, 1)
    assert refine(CylinderEvent(Event.full(1)), 6).base == Event.full(6)
    c = CylinderEvent(ev(2, 0, 2))
    r = refine(c, 4)
    assert r.base == ev(4, 0, 1, 2, 3, 8, 9, 10, 11)
    assert mu_cylinder(r) == mu_cylinder(c) == mu_fast(ev(2, 0, 2))
    with pytest.raises(ValueError):
        refine(r, 3)


def test_refine_membership_rule():
    c = CylinderEvent(ev(3, 1, 6))
    r = refine(c, 6)
    for j in range(2**6):
        assert (j in r.base) == ((j >> 3) in c.base)


def test_cylinder_measures():
    assert mu_cylinder(CylinderEvent(ev(1, 0))) == Dyadic(1, 1)
    assert mu_cylinder(CylinderEvent(Event.full(5))) == 1
    for n in range(1, 12):
        assert mu_cylinder(CylinderEvent.from_prefix("0" * (n + 1))) == Dyadic(1, n)


@pytest.mark.parametrize("n", range(1, 11))
def test_cylinder_refinement_invariance(n):
    rng = np.random.default_rng(300 + n)
    for m in random_masks(rng, n, 20):
        c = CylinderEvent(Event(n, m))
        for k in range(1, 5):
            assert mu_cylinder(refine(c, n + k)) == mu_cylinder(c)


def test_cylinder_contains():
    from qmwalk.pathspace import PathIndex
    c = CylinderEvent.from_prefix("01")
    assert c.contains(PathIndex.parse("01101"))
    assert not c.contains(PathIndex.parse("00101"))


def test_complement_event():
    assert complement_event(1) == ev(1, 1)
    assert complement_event(2) == ev(2, 1, 2, 3)
    assert len(complement_event(3)) == 7


def test_rowsum_example4():
    terms = np.concatenate(list(rowsum_phase_terms(4)))
    assert terms.tolist() == [1, -1, -1, -1, -1, 1, -1, -1]
    assert rowsum_phase_sum(4) == -4
    assert mu_complement_rowsum(4) == Dyadic(25, 4)


@pytest.mark.parametrize("n, value", [
    (1, Dyadic(1, 1)), (2, Dyadic(5, 2)), (3, Dyadic(13, 3)), (4, Dyadic(25, 4)),
    # 1 + 1/256 - Re((1+i)^8)/2^7 = 1 + 1/256 - 16/128
    (8, Dyadic(225, 8)),
])
def test_complement_values(n, value):
    assert mu_complement_closed(n) == value
    assert mu_complement_rowsum(n) == value
    assert mu_fast(complement_event(n)) == value


@pytest.mark.parametrize("n", range(1, 21))
def test_complement_three_routes(n):
    assert mu_fast(complement_event(n)) == mu_complement_rowsum(n) == mu_complement_closed(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_complement_pairsum(n):
    assert mu_pairsum(complement_event(n)) == mu_complement_closed(n)


def test_rowsum_via_class_counts():
    from qmwalk.combinatorics import quad_closed_form
    for n in range(1, 18):
        q = quad_closed_form(n)
        assert rowsum_phase_sum(n) == q.s - q.u


def test_convergence_report():
    rows = convergence_report(100)
    assert [r.mu for r in rows[:4]] == [Dyadic(1, 1), Dyadic(5, 2), Dyadic(13, 3), Dyadic(25, 4)]
    for r in rows:
        assert r.within_bound()
        if r.n % 4 == 2:
            assert gauss_pow_1pi(r.n).re == 0
            assert r.mu == 1 + Dyadic(1, r.n)
    assert abs(rows[99].deviation) < Dyadic(1, 48)
    assert abs(float(rows[99].deviation)) <= rows[99].bound


def test_end_site_sums_reconstruct_mu():
    a = ev(3, 1, 2, 5, 6)
    w0, w1 = end_site_sums(a)
    assert mu_fast(a) == Dyadic(w0.norm() + w1.norm(), 3)
