"""Exact 2-adic complexity and the lower bounds it is compared against."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..seqgen import BinarySeq
from .numtheory import is_probable_prime

# reported bound for k = 1, taken as a literal; no formula reproduces it
K1_REPORTED_BOUND = 6


def s_of_two(seq: BinarySeq) -> int:
    """sum_i s_i 2^i: one period read as a little-endian integer."""
    return int.from_bytes(np.packbits(seq.bits, bitorder="little").tobytes(), "little")


def complexity_from_denominator(f: int) -> int:
    """floor(log2(f + 1)), exactly."""
    return (f + 1).bit_length() - 1


@dataclass(frozen=True)
class Theorem3Bound:
    k: int
    case: str
    bound: int
    threshold: float | None

    @property
    def period(self) -> int:
        return 4 * ((1 << (2 * self.k)) - 1)

    def satisfied_by(self, phi2: int) -> bool:
        """Exact test of the claimed relation for a computed complexity."""
        if self.case == "prime-k≡0":
            return phi2 == self.period
        if self.case == "out-of-theorem":
            return phi2 >= self.bound
        # the threshold is never an integer here, so > threshold <=> > floor
        return phi2 > self.bound


def theorem3_bound(k: int) -> Theorem3Bound:
    """Lower bound on the 2-adic complexity of a Yu-Gong sequence of parameter k.

    * k = 0 mod 4 and 2^(2k-1) - 2^k + 1 prime: complexity equals N.
    * other even k: complexity > N - log2 N + 1.
    * odd k: complexity > N - 2 log2 N + 4.

    ``bound`` is the floor of the threshold, computed with integer arithmetic.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n = 4 * ((1 << (2 * k)) - 1)
    if k == 1:
        return Theorem3Bound(k, "out-of-theorem", K1_REPORTED_BOUND, None)
    if k % 2 == 0:
        # n is never a power of two, so ceil(log2 n) = n.bit_length()
        floor_even = n + 1 - n.bit_length()
        threshold = n - math.log2(n) + 1
        if k % 4 == 0 and is_probable_prime((1 << (2 * k - 1)) - (1 << k) + 1):
            return Theorem3Bound(k, "prime-k≡0", n, threshold)
        return Theorem3Bound(k, "even-k", floor_even, threshold)
    floor_odd = n + 4 - (n * n).bit_length()
    return Theorem3Bound(k, "odd-k", floor_odd, n - 2 * math.log2(n) + 4)


@dataclass(frozen=True)
class AdicReport:
    period: int
    s2: int
    g: int
    f: int
    phi2: int
    bound: Theorem3Bound | None = None

    @property
    def bound_case(self) -> str | None:
        return None if self.bound is None else self.bound.case

    @property
    def bound_holds(self) -> bool | None:
        return None if self.bound is None else self.bound.satisfied_by(self.phi2)


def two_adic_complexity(seq: BinarySeq, k: int | None = None) -> AdicReport:
    """Phi_2(s) = floor(log2((2^N - 1)/gcd(2^N - 1, S(2)) + 1)).

    The bound is attached when ``k`` is given or the sequence carries Yu-Gong
    parameters.
    """
    n = seq.period
    m = (1 << n) - 1
    s2 = s_of_two(seq)
    g = math.gcd(s2, m)
    f = m // g
    if k is None and seq.params is not None:
        k = seq.params.k
    if k is not None and n != 4 * ((1 << (2 * k)) - 1):
        raise ValueError(f"period {n} does not match k={k}")
    bound = theorem3_bound(k) if k is not None else None
    return AdicReport(n, s2, g, f, complexity_from_denominator(f), bound)
