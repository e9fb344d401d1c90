"""Limits of the a_n(q) recursion and every closed form they are checked against."""

from .basis import (
    BasisError,
    BasisVerificationError,
    DivisorPolynomial,
    NoSolutionError,
    express_in_divisor_basis,
)
from .closed_forms import (
    SymmetrizationError,
    a_at_q_iterated,
    dft_coefficients,
    dft_evaluate,
    h_coefficients,
    rhs_ceiling_form,
    rhs_exponential_case,
    rhs_periodic_case,
    rhs_polynomial_case,
    t_j_series,
)
from .lemmas import (
    alternating_expressions,
    euler_product_check,
    q_gauss_limit,
    rootid_check,
    s0_forms,
    triangular_expressions,
)
from .recurrence import (
    CustomSeries,
    Exponential,
    ExponentialAtOneError,
    Periodic,
    Polynomial,
    RecurrenceSpec,
    a_n,
    a_n_closed_form,
    beta_n,
    limit_of_a_n,
    limit_series,
)
from .verify import LimitIdentityCase, Mismatch, VerificationReport, verify_case
