import math
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from yugong.gf2k import (
    INF, FieldError, build_field, dlog, is_irreducible, poly_mulmod,
    primitive_polynomials, trace,
)


def brute_irreducible(m):
    # trial division by every polynomial of degree 1..deg/2
    d = m.bit_length() - 1
    for g in range(2, 1 << (d // 2 + 1)):
        dg = g.bit_length() - 1
        if dg < 1 or dg > d // 2:
            continue
        r = m
        while r.bit_length() - 1 >= dg:
            r ^= g << (r.bit_length() - 1 - dg)
        if r == 0:
            return False
    return True


def brute_order(m):
    d = m.bit_length() - 1
    x, i = 2, 1
    while x != 1:
        x <<= 1
        if x >> d & 1:
            x ^= m
        i += 1
        if i > 1 << d:
            return None
    return i


def euler_phi(n):
    return sum(1 for i in range(1, n + 1) if math.gcd(i, n) == 1)


def test_default_modulus_degree4_is_smallest_primitive():
    # exhaustive scan of degree-4 masks
    prim = [m for m in range(16, 32) if m & 1 and brute_irreducible(m) and brute_order(m) == 15]
    assert min(prim) == 0x13
    assert build_field(4).modulus == 0x13


def test_default_modulus_degree2():
    assert build_field(2).modulus == 0b111


def test_non_primitive_modulus_rejected_with_order():
    with pytest.raises(FieldError, match="order 5"):
        build_field(4, 0b11111)


@pytest.mark.parametrize("n", [0, 33, -1])
def test_degree_out_of_range(n):
    with pytest.raises(FieldError):
        build_field(n)


def test_wrong_degree_and_reducible():
    with pytest.raises(FieldError, match="degree"):
        build_field(4, 0b1011)
    with pytest.raises(FieldError, match="irreducible"):
        build_field(4, 0b10101)  # (x^2+x+1)^2


@pytest.mark.parametrize("n", range(2, 11))
def test_primitive_count(n):
    assert len(list(primitive_polynomials(n))) == euler_phi((1 << n) - 1) // n


@pytest.mark.parametrize("m", range(1 << 6, 1 << 8))
def test_irreducible_matches_trial_division(m):
    assert is_irreducible(m) == brute_irreducible(m)


@pytest.mark.parametrize("n", range(1, 13))
def test_tables_are_bijective(n):
    ctx = build_field(n)
    assert len(set(ctx.exp_table.tolist())) == ctx.order
    x = list(range(1, ctx.size))
    assert ctx.exp_table[ctx.log_table[x]].tolist() == x


@settings(max_examples=200)
@given(st.integers(2, 16), st.data())
def test_mul_matches_polynomial_product(n, data):
    ctx = build_field(n)
    a = data.draw(st.integers(0, ctx.size - 1))
    b = data.draw(st.integers(0, ctx.size - 1))
    assert ctx.mul(a, b) == poly_mulmod(a, b, ctx.modulus)
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.exp(ctx.log(a)) == a


def test_trace_examples_gf16():
    ctx = build_field(4, 0x13)
    assert trace(ctx, 1, 1) == 0
    assert trace(ctx, 2, 1) == 0
    alpha = ctx.generator
    # alpha + alpha^2 + alpha^4 + alpha^8 evaluated via powers
    direct = alpha ^ ctx.pow(alpha, 2) ^ ctx.pow(alpha, 4) ^ ctx.pow(alpha, 8)
    assert trace(ctx, 1, alpha) == direct == 0


def test_trace_rejects_non_divisor():
    with pytest.raises(FieldError):
        trace(build_field(4), 3, 1)


@settings(max_examples=200)
@given(st.sampled_from([2, 4, 6, 8, 12]), st.data())
def test_trace_linear_and_in_subfield(n, data):
    ctx = build_field(n)
    x = data.draw(st.integers(0, ctx.size - 1))
    y = data.draw(st.integers(0, ctx.size - 1))
    for m in (d for d in range(1, n + 1) if n % d == 0):
        tx = trace(ctx, m, x)
        assert trace(ctx, m, x ^ y) == tx ^ trace(ctx, m, y)
        assert ctx.pow(tx, 1 << m) == tx


@pytest.mark.parametrize("n", range(1, 9))
def test_trace_transitivity_exhaustive(n):
    ctx = build_field(n)
    for m in (d for d in range(1, n + 1) if n % d == 0):
        for x in range(ctx.size):
            # Tr_1^m on the subfield equals Tr_1^n restricted through Tr_m^n
            inner = trace(ctx, m, x)
            outer = ctx.frobenius_sum(inner, 1, m)
            assert outer == trace(ctx, 1, x)


@pytest.mark.parametrize("n", range(1, 11))
def test_absolute_trace_balanced(n):
    ctx = build_field(n)
    assert sum(trace(ctx, 1, x) for x in range(ctx.size)) == 1 << (n - 1)


def test_dlog_examples():
    ctx = build_field(4, 0x13)
    assert dlog(ctx, 1) == 0
    assert dlog(ctx, ctx.generator) == 1
    # alpha^14 by repeated multiplication
    x = 1
    for _ in range(14):
        x = poly_mulmod(x, 2, 0x13)
    assert x == 0b1001
    assert dlog(ctx, 0b1001) == 14
    assert dlog(ctx, 0) is INF


def test_dlog_rejects_foreign_element():
    with pytest.raises(FieldError):
        dlog(build_field(4), 16)


def test_degree_one_field():
    ctx = build_field(1)
    assert ctx.generator == 1 and ctx.order == 1


def test_mul_commutes_gf8():
    # every pair (a, b) for GF(8)
    ctx = build_field(3)
    for a, b in product(range(8), repeat=2):
        assert ctx.mul(a, b) == ctx.mul(b, a)
