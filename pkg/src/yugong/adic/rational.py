"""2-adic rational approximation (FCSR synthesis) as an independent complexity oracle.

Pairs h = (h1, h2) stand for the 2-adic number h1/h2; the size measure is
max(|h1|, |h2|). The update keeps two lattice vectors f, g and replaces the
worse one by the best odd combination whenever g stops matching the prefix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexity import complexity_from_denominator


@dataclass(frozen=True)
class RationalApprox:
    p: int
    q: int
    matched_bits: int

    def __post_init__(self):
        if self.q <= 0 or self.q % 2 == 0:
            raise ValueError(f"denominator must be odd and positive, got {self.q}")

    @property
    def reduced_denominator(self) -> int:
        return self.q // math.gcd(self.p, self.q)

    @property
    def complexity(self) -> int:
        """floor(log2(q' + 1)) for the reduced denominator q'."""
        return complexity_from_denominator(self.reduced_denominator)


def _size(h) -> int:
    return max(abs(h[0]), abs(h[1]))


def _odd_candidates(num: int, den: int):
    # odd integers around the real root of num + d * den
    if den == 0:
        return ()
    if den < 0:
        num, den = -num, -den
    lo = (-num) // den
    return (d for d in range(lo - 2, lo + 4) if d % 2)


def _best_odd(f, g) -> int:
    """Odd d minimizing the size of f + d g.

    The size is convex and piecewise linear in d with breakpoints where a
    coordinate vanishes or the two coordinates tie in magnitude, so the odd
    integers next to those breakpoints contain a minimizer.
    """
    cands = set()
    for num, den in ((f[0], g[0]), (f[1], g[1]),
                     (f[0] - f[1], g[0] - g[1]), (f[0] + f[1], g[0] + g[1])):
        cands.update(_odd_candidates(num, den))
    if not cands:
        cands = {1, -1}
    return min(sorted(cands),
               key=lambda d: (_size((f[0] + d * g[0], f[1] + d * g[1])), abs(d)))


def expansion_bits(p: int, q: int, count: int) -> np.ndarray:
    """First ``count`` bits of the 2-adic expansion of p/q, q odd."""
    mod = 1 << count
    val = p * pow(q, -1, mod) % mod
    return np.array([(val >> i) & 1 for i in range(count)], dtype=np.uint8)


def rational_approximation(bits) -> RationalApprox:
    """Smallest p/q (q odd, size max(|p|, |q|)) whose 2-adic expansion starts with ``bits``."""
    a = [int(b) for b in np.asarray(bits, dtype=np.uint8).ravel()]
    t = len(a)
    if t < 2:
        raise ValueError("prefix must hold at least 2 bits")
    if 1 not in a:
        return RationalApprox(0, 1, t)
    k = a.index(1)
    alpha = 1 << k
    f = (0, 2)
    g = (1 << k, 1)
    for i in range(k + 1, t):
        alpha += a[i] << i
        if (alpha * g[1] - g[0]) % (1 << (i + 1)) == 0:
            f = (2 * f[0], 2 * f[1])
        elif _size(g) < _size(f):
            d = _best_odd(f, g)
            g, f = (f[0] + d * g[0], f[1] + d * g[1]), (2 * g[0], 2 * g[1])
        else:
            d = _best_odd(g, f)
            g, f = (g[0] + d * f[0], g[1] + d * f[1]), (2 * f[0], 2 * f[1])
    p, q = g
    if q < 0:
        p, q = -p, -q
    got = expansion_bits(p, q, t)
    diff = np.nonzero(got != np.asarray(a, dtype=np.uint8))[0]
    matched = int(diff[0]) if diff.size else t
    return RationalApprox(p, q, matched)


def periodic_prefix(bits, length: int) -> np.ndarray:
    """``length`` bits of the periodic extension of one period."""
    period = np.asarray(bits, dtype=np.uint8).ravel()
    reps = -(-length // period.size)
    return np.tile(period, reps)[:length]


def complexity_by_approximation(bits, prefix_bits: int | None = None) -> int:
    """Complexity read off the rational approximation of a 2N-bit prefix (by default)."""
    period = np.asarray(bits, dtype=np.uint8).ravel()
    length = 2 * period.size if prefix_bits is None else prefix_bits
    return rational_approximation(periodic_prefix(period, length)).complexity
