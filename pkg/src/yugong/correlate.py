"""Periodic autocorrelation, optimality classes, and the Yu-Gong value law."""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .gf2k import FieldContext
from .seqgen import BinarySeq, yu_gong

# cap on words touched per vectorised chunk in the packed kernel (32 MiB)
_CHUNK_WORDS = 1 << 22


@dataclass(frozen=True, eq=False)
class AutocorrProfile:
    """AC(tau) for tau = 0 .. len(values) - 1; complete when that covers the period."""

    period: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def complete(self) -> bool:
        return len(self.values) == self.period

    def __getitem__(self, tau):
        return int(self.values[tau])

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, AutocorrProfile):
            return NotImplemented
        return self.period == other.period and bool(np.array_equal(self.values, other.values))

    def off_peak(self) -> set[int]:
        return set(self.values[1:].tolist())

    def block(self, j: int) -> tuple[int, ...]:
        """S_j = (AC(4(j-1)+1), ..., AC(4(j-1)+4)), 1-based."""
        lo = 4 * (j - 1) + 1
        return tuple(int(v) for v in self.values[lo:lo + 4])


def autocorrelation(seq: BinarySeq, tau: int) -> int:
    """sum_t (-1)^(s_t + s_(t+tau)) = N - 2 wt(s xor L^tau s)."""
    n = seq.period
    diff = seq.bits ^ np.roll(seq.bits, -(tau % n))
    return n - 2 * int(np.count_nonzero(diff))


def naive_profile(seq: BinarySeq) -> AutocorrProfile:
    """Index-by-index reference: dot products of the +-1 sequence with its shifts."""
    n = seq.period
    pm = 1 - 2 * seq.bits.astype(np.int64)
    vals = np.empty(n, dtype=np.int64)
    for tau in range(n):
        vals[tau] = int(np.dot(pm, np.roll(pm, -tau)))
    return AutocorrProfile(n, vals)


def _pack_words(bits: np.ndarray, nwords: int) -> np.ndarray:
    padded = np.zeros(nwords * 64, dtype=np.uint8)
    padded[: bits.size] = bits
    return np.packbits(padded, bitorder="little").view("<u8")


class _PackedKernel:
    """XOR/popcount autocorrelation over a doubled, pre-shifted word buffer."""

    def __init__(self, seq: BinarySeq):
        n = seq.period
        self.n = n
        self.nwords = (n + 63) // 64
        doubled = np.concatenate([seq.bits, seq.bits, seq.bits[: 64]])
        dwords = _pack_words(doubled, 2 * self.nwords + 2)
        self.base = dwords[: self.nwords].copy()
        tail = n % 64
        self.tail_mask = np.uint64((1 << tail) - 1) if tail else np.uint64(~np.uint64(0))
        # shifted[r][q] holds doubled bits 64q + r .. 64q + r + 63
        self.shifted = []
        for r in range(64):
            if r == 0:
                sh = dwords[:-1].copy()
            else:
                sh = (dwords[:-1] >> np.uint64(r)) | (dwords[1:] << np.uint64(64 - r))
            self.shifted.append(sh)

    def values(self, taus: np.ndarray) -> np.ndarray:
        out = np.empty(taus.size, dtype=np.int64)
        rows_per_chunk = max(1, _CHUNK_WORDS // self.nwords)
        r_of = taus % 64
        for r in np.unique(r_of):
            sel = np.nonzero(r_of == r)[0]
            windows = sliding_window_view(self.shifted[int(r)], self.nwords)
            for lo in range(0, sel.size, rows_per_chunk):
                part = sel[lo:lo + rows_per_chunk]
                q = taus[part] // 64
                x = windows[q] ^ self.base[None, :]
                x[:, -1] &= self.tail_mask
                ones = np.bitwise_count(x).sum(axis=1, dtype=np.int64)
                out[part] = self.n - 2 * ones
        return out


def full_profile(seq: BinarySeq, *, max_tau: int | None = None, workers: int = 1,
                 method: str = "packed") -> AutocorrProfile:
    """Autocorrelation for tau = 0 .. max_tau (default: the whole period).

    ``method="packed"`` is the word-parallel kernel; ``"naive"`` is the slow
    reference. Work is split over ``workers`` threads by tau range; the output
    does not depend on the worker count.
    """
    n = seq.period
    last = n - 1 if max_tau is None else min(max_tau, n - 1)
    if method == "naive":
        prof = naive_profile(seq)
        return AutocorrProfile(n, prof.values[: last + 1])
    if method != "packed":
        raise ValueError(f"unknown method {method!r}")
    kernel = _PackedKernel(seq)
    taus = np.arange(last + 1, dtype=np.int64)
    if workers <= 1 or taus.size < 256:
        return AutocorrProfile(n, kernel.values(taus))
    parts = np.array_split(taus, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(kernel.values, parts))
    return AutocorrProfile(n, np.concatenate(chunks))


# -- optimality ---------------------------------------------------------------

class Optimality(str, enum.Enum):
    PERFECT = "perfect"
    OPTIMAL_VALUE_N0 = "optimal-value-N≡0"
    OPTIMAL_MAGNITUDE = "optimal-magnitude"
    IDEAL_TWO_LEVEL = "ideal-two-level"
    OPTIMAL_N1 = "optimal-N≡1"
    OPTIMAL_N2 = "optimal-N≡2"
    NONE = "none"

    def __str__(self):
        return self.value


def classify_optimality(profile: AutocorrProfile) -> Optimality:
    """Most specific optimality class the off-peak values satisfy."""
    if not profile.complete:
        raise ValueError("classification needs the complete profile")
    n = profile.period
    vals = profile.off_peak()
    r = n % 4
    if r == 0:
        if vals <= {0}:
            return Optimality.PERFECT
        if vals <= {0, -4} or vals <= {0, 4}:
            return Optimality.OPTIMAL_VALUE_N0
        if vals <= {0, 4, -4}:
            return Optimality.OPTIMAL_MAGNITUDE
    elif r == 1 and vals <= {1, -3}:
        return Optimality.OPTIMAL_N1
    elif r == 2 and vals <= {2, -2}:
        return Optimality.OPTIMAL_N2
    elif r == 3 and vals <= {-1}:
        return Optimality.IDEAL_TWO_LEVEL
    return Optimality.NONE


# -- the Yu-Gong value law ---------------------------------------------------

@dataclass(frozen=True)
class TauClass:
    tau: int
    x: int
    y: int
    v: int
    predicted: int


def predict_yu_gong(tau: int, k: int) -> TauClass:
    """Off-peak AC(tau) of a Yu-Gong sequence from tau mod (2^2k - 1, 2^k + 1, 4).

    The six sub-cases are evaluated independently and exactly one must fire.
    """
    if k < 2:
        raise ValueError(f"value law needs k >= 2, got {k}")
    n = 4 * ((1 << (2 * k)) - 1)
    if not 1 <= tau < n:
        raise ValueError(f"tau must lie in [1, {n - 1}], got {tau}")
    x = tau % ((1 << (2 * k)) - 1)
    y = tau % ((1 << k) + 1)
    v = tau % 4
    cases = [
        (0, x == 0),
        (0, x != 0 and y == 0 and v != 0),
        (0, y != 0 and v == 2),
        (-4, x != 0 and y == 0 and v == 0),
        (-4, y != 0 and v in (1, 3)),
        (4, y != 0 and v == 0),
    ]
    hits = [value for value, fired in cases if fired]
    if len(hits) != 1:
        raise AssertionError(f"case split not a partition at tau={tau}, k={k}: {hits}")
    return TauClass(tau, x, y, v, hits[0])


BLOCK_PLAIN = (-4, 0, -4, 4)
BLOCK_FIRST = (0, 0, -4, 4)
BLOCK_SECOND = (-4, 0, 0, 4)
BLOCK_LAST = (-4, 0, -4, -4)


def block_layout(k: int) -> list[tuple[str, range, tuple[int, ...], int]]:
    """Families of 1-based block indices with their pattern and stated count."""
    q = 1 << (k - 2)
    return [
        ("leading", range(1, q + 1), BLOCK_PLAIN, q),
        ("first-special", range(q + 1, q + 2), BLOCK_FIRST, 1),
        ("middle", range(q + 2, 3 * q + 1), BLOCK_PLAIN, 2 * q - 1),
        ("second-special", range(3 * q + 1, 3 * q + 2), BLOCK_SECOND, 1),
        ("trailing", range(3 * q + 2, 4 * q + 1), BLOCK_PLAIN, q - 1),
        ("last", range(4 * q + 1, 4 * q + 2), BLOCK_LAST, 1),
    ]


@dataclass(frozen=True)
class Mismatch:
    tau: int
    predicted: int
    measured: int


@dataclass(frozen=True)
class BlockCheck:
    family: str
    indices: tuple[int, ...]
    expected: tuple[int, ...]
    stated_count: int
    bad_indices: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.bad_indices and len(self.indices) == self.stated_count


@dataclass
class Theorem1Report:
    k: int
    delta: int
    modulus: int
    period: int
    mismatches: list[Mismatch] = field(default_factory=list)
    periodicity_failures: list[int] = field(default_factory=list)
    blocks: list[BlockCheck] = field(default_factory=list)
    off_peak_values: set = field(default_factory=set)

    @property
    def passed(self) -> bool:
        return (not self.mismatches and not self.periodicity_failures
                and all(b.passed for b in self.blocks)
                and self.off_peak_values <= {0, 4, -4})

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"value-law k={self.k} delta={self.delta:+d} modulus={self.modulus:#x}: "
                f"{status} ({len(self.mismatches)} mismatches, "
                f"{len(self.periodicity_failures)} periodicity failures, "
                f"{sum(not b.passed for b in self.blocks)} bad block families)")


def verify_theorem1(k: int, delta: int = 1, ctx: FieldContext | None = None, *,
                    profile: AutocorrProfile | None = None, workers: int = 1) -> Theorem1Report:
    """Compare the measured profile with the predicted one at every tau.

    Also checks that AC depends only on tau mod 4(2^k + 1) and that the first
    2^k + 1 blocks of four follow the stated family layout and counts.
    """
    if k < 2:
        raise ValueError(f"value law needs k >= 2, got {k}")
    seq = yu_gong(k, delta, ctx)
    if profile is None:
        profile = full_profile(seq, workers=workers)
    n = seq.period
    report = Theorem1Report(k=k, delta=delta, modulus=seq.params.modulus, period=n,
                            off_peak_values=profile.off_peak())
    if profile[0] != n:
        report.mismatches.append(Mismatch(0, n, profile[0]))
    for tau in range(1, n):
        pred = predict_yu_gong(tau, k).predicted
        if pred != profile[tau]:
            report.mismatches.append(Mismatch(tau, pred, profile[tau]))

    period = 4 * ((1 << k) + 1)
    vals = profile.values
    for tau in range(period + 1, n):
        ref = tau % period or period
        if vals[tau] != vals[ref]:
            report.periodicity_failures.append(tau)

    for name, idx, pattern, stated in block_layout(k):
        bad = tuple(j for j in idx if profile.block(j) != pattern)
        report.blocks.append(BlockCheck(name, tuple(idx), pattern, stated, bad))
    return report
