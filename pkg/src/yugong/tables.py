"""Expected autocorrelation and complexity tables, transcribed as literals.

Rows of the autocorrelation tables are (tau_lo, tau_hi, text) with text in the
semicolon-grouped quadruple format; the final row of each table stops one
short of a full block because tau = N is the peak.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .adic.complexity import theorem3_bound, two_adic_complexity
from .correlate import AutocorrProfile, full_profile
from .seqgen import yu_gong

AC_K2 = [
    (1, 20, "-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,-4"),
    (21, 40, "-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,-4"),
    (41, 59, "-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4"),
]

AC_K3 = [
    (1, 36, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4"),
    (37, 72, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4"),
    (73, 108, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4"),
    (109, 144, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4"),
    (145, 180, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4"),
    (181, 216, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4"),
    (217, 251, "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4"),
]

AC_K4 = [
    (1, 68, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (69, 136, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (137, 204, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (205, 272, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (273, 340, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (341, 408, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (409, 476, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (477, 544, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (545, 612, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (613, 680, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (681, 748, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (749, 816, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (817, 884, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (885, 952, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4"),
    (953, 1019, "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4"),
]

AC_TABLES = {1: (2, AC_K2), 2: (3, AC_K3), 3: (4, AC_K4)}

# AC(tau), tau = 1..11, for k = 1
AC_K1 = (-4, 0, 0, 4, -4, 0, -4, 4, 0, 0, -4)

# (k, N, actual complexity, reported bound)
COMPLEXITY_TABLE = [
    (1, 12, 8, 6),
    (2, 60, 60, 55),
    (3, 252, 250, 240),
    (4, 1020, 1020, 1020),
    (5, 4092, 4082, 4072),
    (6, 16380, 16380, 16367),
    (7, 65532, 65530, 65504),
    (8, 262140, 262140, 262123),
]


def parse_grouped(text: str) -> list[int]:
    """'-4,0,-4,4;0,0,-4,4' -> flat list of ints."""
    text = text.strip().strip(";")
    return [int(v) for v in text.replace(";", ",").split(",") if v.strip()]


def format_grouped(values) -> str:
    """Inverse of parse_grouped: blocks of four joined by ';'."""
    vals = [int(v) for v in values]
    return ";".join(",".join(str(v) for v in vals[i:i + 4]) for i in range(0, len(vals), 4))


def expected_values(which: int) -> tuple[int, np.ndarray]:
    """(k, AC(1..N-1)) for autocorrelation table ``which`` in 1..3."""
    k, rows = AC_TABLES[which]
    out = []
    for lo, hi, text in rows:
        vals = parse_grouped(text)
        if len(vals) != hi - lo + 1 or lo != len(out) + 1:
            raise ValueError(f"fixture row {lo}-{hi} of table {which} is malformed")
        out.extend(vals)
    return k, np.array(out, dtype=np.int64)


@dataclass(frozen=True)
class CellMismatch:
    tau: int
    expected: int
    measured: int


@dataclass
class AcTableResult:
    which: int
    k: int
    measured: np.ndarray
    expected: np.ndarray
    mismatches: list[CellMismatch]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def grouped_rows(self) -> list[tuple[int, int, str]]:
        """Measured values laid out with the same row ranges as the fixture."""
        _, rows = AC_TABLES[self.which]
        return [(lo, hi, format_grouped(self.measured[lo - 1:hi])) for lo, hi, _ in rows]


def check_ac_table(which: int, *, delta: int = 1, ctx=None,
                   profile: AutocorrProfile | None = None) -> AcTableResult:
    k, expected = expected_values(which)
    if profile is None:
        profile = full_profile(yu_gong(k, delta, ctx))
    measured = profile.values[1:]
    bad = np.nonzero(measured != expected)[0]
    mism = [CellMismatch(int(i) + 1, int(expected[i]), int(measured[i])) for i in bad]
    return AcTableResult(which, k, measured.copy(), expected, mism)


@dataclass(frozen=True)
class ComplexityRow:
    k: int
    period: int
    phi2: int
    bound: int
    table_phi2: int
    table_bound: int
    bound_holds: bool

    @property
    def bound_matches(self) -> bool:
        return self.bound == self.table_bound

    @property
    def phi2_matches(self) -> bool:
        return self.phi2 == self.table_phi2


def complexity_row(k: int, *, delta: int = 1, ctx=None) -> ComplexityRow:
    row = COMPLEXITY_TABLE[k - 1]
    rep = two_adic_complexity(yu_gong(k, delta, ctx), k)
    b = theorem3_bound(k)
    return ComplexityRow(k, rep.period, rep.phi2, b.bound, row[2], row[3], bool(rep.bound_holds))
