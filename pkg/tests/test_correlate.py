import random
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from yugong.correlate import (
    BLOCK_FIRST, BLOCK_LAST, BLOCK_SECOND, Optimality, autocorrelation,
    block_layout, classify_optimality, full_profile, naive_profile,
    predict_yu_gong, verify_theorem1,
)
from yugong.gf2k import build_field, primitive_polynomials
from yugong.seqgen import PERFECT_BASE, BinarySeq, m_sequence, yu_gong
from yugong.tables import AC_K1, expected_values


def yg(k, delta=1, ctx=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return yu_gong(k, delta, ctx)


def loop_ac(bits, tau):
    n = len(bits)
    return sum(1 if bits[t] == bits[(t + tau) % n] else -1 for t in range(n))


def test_peak_and_perfect_base():
    a = BinarySeq(PERFECT_BASE)
    assert [autocorrelation(a, t) for t in range(4)] == [4, 0, 0, 0]
    assert classify_optimality(full_profile(a)) is Optimality.PERFECT


@pytest.mark.parametrize("n", range(2, 11))
def test_m_sequence_two_level(n):
    prof = full_profile(m_sequence(build_field(n)))
    assert prof[0] == (1 << n) - 1
    assert prof.off_peak() == {-1}
    assert classify_optimality(prof) is Optimality.IDEAL_TWO_LEVEL


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4096), st.randoms(use_true_random=False))
def test_fast_matches_naive_random(n, rnd):
    bits = [rnd.randint(0, 1) for _ in range(n)]
    s = BinarySeq(bits)
    fast = full_profile(s)
    assert fast == naive_profile(s)
    assert full_profile(s, workers=3) == fast


@given(st.lists(st.integers(0, 1), min_size=1, max_size=80))
def test_profile_matches_loop_definition(bits):
    prof = full_profile(BinarySeq(bits))
    assert prof.values.tolist() == [loop_ac(bits, t) for t in range(len(bits))]


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("delta", [1, -1])
def test_fast_matches_naive_yu_gong(k, delta):
    s = yg(k, delta)
    assert full_profile(s) == full_profile(s, method="naive")


@given(st.lists(st.integers(0, 1), min_size=1, max_size=200))
def test_sum_of_correlations(bits):
    s = BinarySeq(bits)
    assert int(full_profile(s).values.sum()) == (s.period - 2 * s.weight) ** 2


@pytest.mark.parametrize("k", range(1, 5))
def test_sum_of_correlations_yu_gong(k):
    s = yg(k)
    assert int(full_profile(s).values.sum()) == (s.period - 2 * s.weight) ** 2


@settings(max_examples=50)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=200), st.integers(0, 1000))
def test_shift_invariance(bits, t):
    s = BinarySeq(bits)
    assert full_profile(s.rotate(t)) == full_profile(s)


def test_max_tau_prefix():
    s = yg(3)
    part = full_profile(s, max_tau=40)
    assert len(part) == 41 and not part.complete
    assert part.values.tolist() == full_profile(s).values[:41].tolist()


def test_unknown_method():
    with pytest.raises(ValueError):
        full_profile(BinarySeq([0, 1]), method="fft")


def test_table_prefixes():
    assert full_profile(yg(2)).values[1:21].tolist() == [
        -4, 0, -4, 4, 0, 0, -4, 4, -4, 0, -4, 4, -4, 0, 0, 4, -4, 0, -4, -4]
    assert tuple(full_profile(yg(1)).values[1:12].tolist()) == AC_K1
    assert full_profile(yg(3)).block(3) == (0, 0, -4, 4)


@pytest.mark.parametrize("k", range(2, 6))
@pytest.mark.parametrize("delta", [1, -1])
def test_optimal_magnitude(k, delta):
    prof = full_profile(yg(k, delta))
    assert prof.off_peak() <= {0, 4, -4}
    assert classify_optimality(prof) is Optimality.OPTIMAL_MAGNITUDE


@pytest.mark.parametrize("k", [2, 3])
def test_values_every_modulus(k):
    for m in primitive_polynomials(2 * k):
        for delta in (1, -1):
            prof = full_profile(yg(k, delta, build_field(2 * k, m)))
            assert prof.off_peak() <= {0, 4, -4}


def test_classification_other_residues():
    from yugong.correlate import AutocorrProfile
    assert classify_optimality(AutocorrProfile(5, [5, 1, -3, -3, 1])) is Optimality.OPTIMAL_N1
    assert classify_optimality(AutocorrProfile(6, [6, 2, -2, 2, -2, 2])) is Optimality.OPTIMAL_N2
    assert classify_optimality(AutocorrProfile(8, [8, 0, -4, 0, 0, 0, -4, 0])) \
        is Optimality.OPTIMAL_VALUE_N0
    assert classify_optimality(AutocorrProfile(8, [8, 0, 8, 0, 0, 0, 0, 0])) is Optimality.NONE
    with pytest.raises(ValueError):
        classify_optimality(AutocorrProfile(8, [8, 0]))


def test_predict_examples():
    assert predict_yu_gong(20, 2).predicted == -4
    assert predict_yu_gong(2, 2).predicted == 0
    assert predict_yu_gong(36, 3).predicted == -4
    c = predict_yu_gong(2, 2)
    assert (c.x, c.y, c.v) == (2, 2, 2)


@pytest.mark.parametrize("k", range(2, 9))
def test_predict_partition_and_period(k):
    n = 4 * ((1 << (2 * k)) - 1)
    p = 4 * ((1 << k) + 1)
    rng = random.Random(k)
    for tau in rng.sample(range(1, n), min(n - 1, 2000)):
        pred = predict_yu_gong(tau, k).predicted
        ref = tau % p or p
        assert pred == predict_yu_gong(ref, k).predicted


def test_predict_rejects():
    with pytest.raises(ValueError):
        predict_yu_gong(0, 2)
    with pytest.raises(ValueError):
        predict_yu_gong(60, 2)
    with pytest.raises(ValueError):
        predict_yu_gong(3, 1)


def test_block_layout_counts():
    fam = {name: (idx, count) for name, idx, _, count in block_layout(2)}
    assert len(fam["trailing"][0]) == 0 == fam["trailing"][1]
    for k in range(2, 8):
        lay = block_layout(k)
        assert sum(len(idx) for _, idx, _, _ in lay) == (1 << k) + 1
        assert all(len(idx) == c for _, idx, _, c in lay)


@pytest.mark.parametrize("k", range(2, 7))
@pytest.mark.parametrize("delta", [1, -1])
def test_verify_theorem1(k, delta):
    rep = verify_theorem1(k, delta)
    assert rep.passed, rep.summary()


def test_theorem1_k4_special_blocks():
    prof = full_profile(yg(4))
    assert prof.block(5) == BLOCK_FIRST
    assert prof.block(13) == BLOCK_SECOND
    assert prof.block(17) == BLOCK_LAST


def test_verify_theorem1_reports_mismatch():
    from yugong.correlate import AutocorrProfile
    prof = full_profile(yg(2))
    vals = prof.values.copy()
    vals[7] = 4
    rep = verify_theorem1(2, profile=AutocorrProfile(60, vals))
    assert not rep.passed
    assert rep.mismatches[0].tau == 7 and rep.mismatches[0].measured == 4


def test_expected_values_shape():
    for which, n in ((1, 60), (2, 252), (3, 1020)):
        _, vals = expected_values(which)
        assert vals.size == n - 1
