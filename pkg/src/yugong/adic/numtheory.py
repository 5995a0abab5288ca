"""Primality, the gcd facts behind the complexity bound, and parameter scans."""

from __future__ import annotations

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

log = logging.getLogger(__name__)

DEFAULT_SIZE_CAP = 16

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# the first 13 primes as Miller-Rabin bases are exact below this bound
_DETERMINISTIC_LIMIT = 3317044064679887385961981
_RANDOM_ROUNDS = 64


class SizeCapError(RuntimeError):
    """The requested k would build integers beyond the configured size cap."""


def _mr_witness(a: int, d: int, r: int, n: int) -> bool:
    """True when a proves n composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; exact below 3.3e24, 64 seeded random rounds above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _SMALL_PRIMES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_RANDOM_ROUNDS)]
    return not any(_mr_witness(a, d, r, n) for a in bases)


def key_factor(k: int) -> int:
    """2^(2k-1) - 2^k + 1."""
    return (1 << (2 * k - 1)) - (1 << k) + 1


def _check_cap(k: int, size_cap: int):
    if k > size_cap:
        raise SizeCapError(
            f"k={k} needs integers of about 2^{k + 1} bits; size cap is k <= {size_cap}")


def conjecture_gcd(k: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """gcd(2^(2k-1) - 2^k + 1, (2^(2(2^k+1)) + 1)/5), built in full."""
    _check_cap(k, size_cap)
    big = ((1 << (2 * ((1 << k) + 1))) + 1) // 5
    return math.gcd(key_factor(k), big)


def conjecture_gcd_modular(k: int) -> int:
    """Same gcd without the big integer: reduce 2^(2(2^k+1)) + 1 modulo 5a first."""
    a = key_factor(k)
    r = (pow(2, 2 * ((1 << k) + 1), 5 * a) + 1) % (5 * a)
    # 5 divides 2^(2(2^k+1)) + 1, hence r, and r/5 = (that number)/5 mod a
    return math.gcd(a, r // 5)


@dataclass(frozen=True)
class Clause:
    name: str
    claim: str
    applicable: bool
    holds: bool


@dataclass
class Lemma2Report:
    k: int
    key: int
    key_is_prime: bool
    gcd_conjecture: int
    gcd_small: int
    clauses: list[Clause] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.clauses if c.applicable)


def lemma2_checks(k: int, size_cap: int = DEFAULT_SIZE_CAP) -> Lemma2Report:
    """Evaluate the three gcd facts for one k, with the exact gcds.

    With a = 2^(2k-1) - 2^k + 1 and B = (2^(2(2^k+1)) + 1)/5:
      1. 5 | gcd(a, B) when k = 2 mod 4; 5 does not divide it when k = 0 mod 4.
      2. gcd(a, B) = 1 when k = 0 mod 4 and a is prime, else gcd(a, B) < 2^(2k-1).
      3. gcd(2^(k-1) - 1, 2^(2^k+1) + 1) = 1 for even k, else < 2^(k-1).
    """
    if k < 2:
        raise ValueError(f"lemma checks need k >= 2, got {k}")
    _check_cap(k, size_cap)
    a = key_factor(k)
    prime = is_probable_prime(a)
    g1 = conjecture_gcd(k, size_cap)
    g2 = math.gcd((1 << (k - 1)) - 1, (1 << ((1 << k) + 1)) + 1)
    rep = Lemma2Report(k, a, prime, g1, g2)
    c = rep.clauses
    c.append(Clause("5-divides", "5 | gcd(a, B)", k % 4 == 2, g1 % 5 == 0))
    c.append(Clause("5-not-divides", "5 does not divide gcd(a, B)", k % 4 == 0, g1 % 5 != 0))
    prime_case = k % 4 == 0 and prime
    c.append(Clause("coprime-when-prime", "gcd(a, B) = 1", prime_case, g1 == 1))
    c.append(Clause("bounded-otherwise", "gcd(a, B) < 2^(2k-1)", not prime_case,
                    g1 < 1 << (2 * k - 1)))
    c.append(Clause("small-coprime-even", "gcd(2^(k-1)-1, 2^(2^k+1)+1) = 1", k % 2 == 0, g2 == 1))
    c.append(Clause("small-bounded-odd", "gcd(2^(k-1)-1, 2^(2^k+1)+1) < 2^(k-1)", k % 2 == 1,
                    g2 < 1 << (k - 1)))
    return rep


def scan_prime_k(max_k: int) -> list[int]:
    """All k <= max_k with k = 0 mod 4 and 2^(2k-1) - 2^k + 1 prime."""
    return [k for k in range(4, max_k + 1, 4) if is_probable_prime(key_factor(k))]


def conjecture_scan(ks, size_cap: int = DEFAULT_SIZE_CAP, *, method: str = "direct",
                    workers: int = 1) -> list[tuple[int, int | None]]:
    """(k, gcd(a, B)) per k; gcd is None when k exceeds the cap (direct method).

    Any gcd > 1 is a counterexample to the coprimality observed for k = 0 mod 4.
    ``method="modular"`` avoids building B and ignores the cap.
    """
    ks = sorted(set(ks))
    for k in ks:
        if k % 4:
            raise ValueError(f"conjecture concerns k = 0 mod 4, got {k}")

    def one(k):
        if method == "modular":
            return k, conjecture_gcd_modular(k)
        if method != "direct":
            raise ValueError(f"unknown method {method!r}")
        try:
            return k, conjecture_gcd(k, size_cap)
        except SizeCapError as exc:
            log.warning("skipping k=%d: %s", k, exc)
            return k, None

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, ks))
    else:
        rows = [one(k) for k in ks]
    for k, g in rows:
        if g is not None and g > 1:
            log.warning("counterexample: gcd = %d at k=%d", g, k)
    return rows


def crt(residues, moduli) -> tuple[int, int]:
    """Combine residues modulo pairwise coprime moduli into (x, prod)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        if math.gcd(m, mi) != 1:
            raise ValueError("moduli are not pairwise coprime")
        t = ((r - x) * pow(m, -1, mi)) % mi
        x += m * t
        m *= mi
    return x % m, m
