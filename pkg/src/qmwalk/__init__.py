"""Exact quantum measure of the 2-site quantum random walk.

Also covers the three combinatorial problems that share its solution: sums of
every fourth binomial coefficient, a third-order linear recurrence, and bit
counts of the iterated vector ``z(n)``.
"""

from .combinatorics import (
    SequenceQuad,
    alternating_sums,
    binom,
    binom_sum_mod4,
    quad_by_recurrence,
    quad_closed_form,
    spaced_sum_mod2,
    third_order_sequence,
)
from .decoherence import Amplitude, amplitude, decoherence_entry, decoherence_matrix, psd_certificate
from .exact import CapacityError, Dyadic, GaussianInt, InconsistencyError, gauss_pow_1pi
from .pathspace import PathIndex, class_counts, ones_count, parity, switch_count, y_vector, z_vector
from .qmeasure import (
    CylinderEvent,
    Event,
    complement_event,
    convergence_report,
    grade2_check,
    mu_complement_closed,
    mu_complement_rowsum,
    mu_cylinder,
    mu_fast,
    mu_pairsum,
    refine,
)

__version__ = "0.1.0"
