"""Periodic binary sequences and the interleaved constructions built from them.

A (v, w) interleaved sequence is the v x w matrix whose column j is the base
sequence cyclically left-shifted by ``e_j`` (or the zero column when
``e_j`` is INF), read row by row. An optional indicator sequence of period w
is added to every row.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .gf2k import INF, FieldContext, FieldError, absolute_trace_mask, build_field, dlog, trace

PERFECT_BASE = (0, 1, 1, 1)


@dataclass(frozen=True)
class YuGongParams:
    k: int
    delta: int
    modulus: int

    @property
    def period(self) -> int:
        return 4 * ((1 << (2 * self.k)) - 1)

    @property
    def in_theorem_scope(self) -> bool:
        # the autocorrelation and complexity results need k > 1
        return self.k >= 2


class BinarySeq:
    """One period of a binary sequence; indexing wraps modulo the period."""

    __slots__ = ("_bits", "params")

    def __init__(self, bits, params: YuGongParams | None = None):
        arr = np.array(bits, dtype=np.uint8).ravel()
        if arr.size == 0:
            raise ValueError("period must be at least 1")
        if arr.max() > 1:
            raise ValueError("bits must be 0 or 1")
        arr.setflags(write=False)
        self._bits = arr
        self.params = params

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def period(self) -> int:
        return int(self._bits.size)

    def __len__(self):
        return self.period

    def __getitem__(self, t):
        if isinstance(t, slice):
            raise TypeError("use .bits for slicing")
        return int(self._bits[t % self.period])

    def __iter__(self):
        return iter(self._bits.tolist())

    def __eq__(self, other):
        if not isinstance(other, BinarySeq):
            return NotImplemented
        return self.period == other.period and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self):
        return hash(self._bits.tobytes())

    def __repr__(self):
        body = self.to_ascii()
        if len(body) > 48:
            body = body[:45] + "..."
        return f"BinarySeq(N={self.period}, {body})"

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self._bits))

    def rotate(self, t: int) -> "BinarySeq":
        """Left cyclic shift: result[i] = self[i + t]."""
        return BinarySeq(np.roll(self._bits, -(t % self.period)))

    def complement(self) -> "BinarySeq":
        return BinarySeq(1 - self._bits)

    # -- export formats ------------------------------------------------------

    def to_ascii(self) -> str:
        return "".join("1" if b else "0" for b in self._bits.tolist())

    @classmethod
    def from_ascii(cls, text: str) -> "BinarySeq":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError("expected a non-empty string of '0' and '1'")
        return cls([int(c) for c in text])

    def to_hex(self) -> str:
        """Packed bytes, LSB of the first byte is s_0; trailing bits are zero."""
        return np.packbits(self._bits, bitorder="little").tobytes().hex()

    @classmethod
    def from_hex(cls, text: str, period: int) -> "BinarySeq":
        raw = np.frombuffer(bytes.fromhex(text), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little")
        if bits.size < period:
            raise ValueError(f"hex string holds {bits.size} bits, period is {period}")
        return cls(bits[:period])


@dataclass(frozen=True)
class ShiftSeq:
    """Column shifts over Z_v; INF entries select the zero column."""

    modulus: int
    entries: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("shift modulus must be positive")
        entries = tuple(e if e is INF else int(e) for e in self.entries)
        for e in entries:
            if e is not INF and not 0 <= e < self.modulus:
                raise ValueError(f"shift {e} outside Z_{self.modulus}")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def as_array(self) -> np.ndarray:
        """Entries as int64 with -1 standing for INF."""
        return np.array([-1 if e is INF else e for e in self.entries], dtype=np.int64)


@dataclass(frozen=True)
class InterleaveSpec:
    base: BinarySeq
    shifts: ShiftSeq
    indicator: BinarySeq | None = None

    def __post_init__(self):
        if self.shifts.modulus != self.base.period:
            raise ValueError(
                f"shift modulus {self.shifts.modulus} != base period {self.base.period}")
        if self.indicator is not None and self.indicator.period != len(self.shifts):
            raise ValueError(
                f"indicator period {self.indicator.period} != shift length {len(self.shifts)}")


def interleave(spec: InterleaveSpec, params: YuGongParams | None = None) -> BinarySeq:
    """s[i*w + j] = base[(i + e_j) mod v] xor indicator[j], zero column for INF."""
    v = spec.base.period
    w = len(spec.shifts)
    e = spec.shifts.as_array()
    rows = np.arange(v, dtype=np.int64)[:, None]
    idx = (rows + np.where(e < 0, 0, e)[None, :]) % v
    mat = spec.base.bits[idx]
    mat[:, e < 0] = 0
    if spec.indicator is not None:
        mat ^= spec.indicator.bits[None, :]
    return BinarySeq(mat.reshape(v * w), params=params)


def m_sequence(ctx: FieldContext) -> BinarySeq:
    """b_t = Tr_1^n(alpha^t) for t = 0 .. 2^n - 2."""
    mask = absolute_trace_mask(ctx)
    masked = ctx.exp_table & np.uint32(mask)
    return BinarySeq(np.bitwise_count(masked) & 1)


def decompose_m_sequence(k: int, ctx: FieldContext) -> tuple[BinarySeq, ShiftSeq]:
    """Split the m-sequence of GF(2^2k) into a (2^k - 1, 2^k + 1) interleaved pair.

    Returns the base a'_i = Tr_1^k(beta^i) with beta = alpha^(2^k + 1) and the
    shifts e'_j given by beta^(e'_j) = Tr_k^2k(alpha^j); e'_0 is INF.
    """
    if k < 2 or ctx.degree != 2 * k:
        raise FieldError(f"need a field of degree 2k with k >= 2, got k={k}, degree={ctx.degree}")
    rows = (1 << k) - 1
    cols = (1 << k) + 1
    beta_log = cols
    base = [ctx.frobenius_sum(ctx.exp(beta_log * i), 1, k) for i in range(rows)]
    if set(base) - {0, 1}:
        raise FieldError("subfield trace left GF(2); field tables are inconsistent")

    shifts = []
    for j in range(cols):
        gamma = trace(ctx, k, ctx.exp(j))
        lg = dlog(ctx, gamma)
        if lg is INF:
            if j != 0:
                raise FieldError(f"Tr_k^2k(alpha^{j}) vanished; field tables are inconsistent")
            shifts.append(INF)
            continue
        if lg % cols:
            raise FieldError(f"Tr_k^2k(alpha^{j}) is not in the subfield GF(2^{k})")
        shifts.append(lg // cols)
    return BinarySeq(base), ShiftSeq(rows, tuple(shifts))


def shift_matrix(k: int, delta: int = 1) -> ShiftSeq:
    """Shift sequence over Z_4 read row-major from the (2^k-1) x (2^k+1) matrix

        e[i, 0] = 3i + delta,  e[i, j] = 3(i + j)  (mod 4) for 1 <= j <= 2^k.
    """
    if delta not in (1, -1):
        raise ValueError(f"delta must be +1 or -1, got {delta!r}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    i = np.arange((1 << k) - 1)[:, None]
    j = np.arange((1 << k) + 1)[None, :]
    mat = (3 * (i + j)) % 4
    mat[:, 0] = (3 * i[:, 0] + delta) % 4
    return ShiftSeq(4, tuple(mat.ravel().tolist()))


def yu_gong(k: int, delta: int = 1, ctx: FieldContext | None = None) -> BinarySeq:
    """The period-4(2^2k - 1) sequence I(a, e) + b with a = (0,1,1,1).

    k = 1 is generated for reference but falls outside the range the
    autocorrelation and complexity theorems cover; ``params.in_theorem_scope``
    is False and a warning is issued.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if ctx is None:
        ctx = build_field(2 * k)
    elif ctx.degree != 2 * k:
        raise FieldError(f"field degree {ctx.degree} does not match 2k = {2 * k}")
    if k == 1:
        warnings.warn("k=1 is outside the theorem range (k > 1)", stacklevel=2)
    spec = InterleaveSpec(
        base=BinarySeq(PERFECT_BASE),
        shifts=shift_matrix(k, delta),
        indicator=m_sequence(ctx),
    )
    return interleave(spec, params=YuGongParams(k=k, delta=delta, modulus=ctx.modulus))
