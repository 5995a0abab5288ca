"""2-adic complexity, its lower bounds, and the number theory behind them."""

from .complexity import (
    K1_REPORTED_BOUND,
    AdicReport,
    Theorem3Bound,
    complexity_from_denominator,
    s_of_two,
    theorem3_bound,
    two_adic_complexity,
)
from .congruences import (
    MOD15_RESIDUES,
    REPORT_FORMAT,
    CongruenceRecord,
    CongruenceReport,
    WeightedSumMismatch,
    check_weighted_ac_sum,
    closed_form_weighted_sum,
    crt_recombine_block,
    product_residue,
    t_at_inverse_two,
    verify_congruences,
    weighted_ac_sum,
)
from .numtheory import (
    DEFAULT_SIZE_CAP,
    Lemma2Report,
    SizeCapError,
    conjecture_gcd,
    conjecture_gcd_modular,
    conjecture_scan,
    crt,
    is_probable_prime,
    key_factor,
    lemma2_checks,
    scan_prime_k,
)
from .rational import (
    RationalApprox,
    complexity_by_approximation,
    expansion_bits,
    periodic_prefix,
    rational_approximation,
)
