"""Modular identities for S(2) T(2^-1) of a Yu-Gong sequence.

All residues are canonical, in [0, m). 2^-1 mod 2^N - 1 is 2^(N-1).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from ..correlate import AutocorrProfile
from ..seqgen import BinarySeq
from .complexity import s_of_two
from .numtheory import crt

REPORT_FORMAT = "yugong-report/1"

# S(2) T(2^-1) mod 15, indexed by k mod 4
MOD15_RESIDUES = {0: 13, 1: 0, 2: 10, 3: 9}


@dataclass(frozen=True)
class CongruenceRecord:
    label: str
    modulus: int
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return (self.expected - self.actual) % self.modulus == 0

    def row(self) -> dict:
        return {
            "version": REPORT_FORMAT,
            "label": self.label,
            "modulus": f"{self.modulus:x}",
            "expected": f"{self.expected:x}",
            "actual": f"{self.actual:x}",
            "pass": self.passed,
        }


@dataclass
class CongruenceReport:
    k: int
    records: list[CongruenceRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failed(self) -> list[str]:
        return [r.label for r in self.records if not r.passed]

    def __getitem__(self, label: str) -> CongruenceRecord:
        for r in self.records:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["version", "label", "modulus", "expected",
                                            "actual", "pass"], lineterminator="\n")
        w.writeheader()
        for r in self.records:
            w.writerow(r.row())
        return buf.getvalue()

    def to_struct(self) -> str:
        return json.dumps({"format": REPORT_FORMAT, "k": self.k,
                           "records": [r.row() for r in self.records]}, indent=2)


def t_at_inverse_two(seq: BinarySeq) -> int:
    """T(2^-1) = sum_i (-1)^(s_i) 2^((N - i) mod N), reduced mod 2^N - 1.

    Summing 2^j over all j gives 2^N - 1 = 0, so T(2^-1) = -2 R where R has
    bit (N - i) mod N set whenever s_i = 1.
    """
    n = seq.period
    m = (1 << n) - 1
    rev = np.roll(seq.bits[::-1], 1)
    r = int.from_bytes(np.packbits(rev, bitorder="little").tobytes(), "little")
    return (-2 * r) % m


def product_residue(seq: BinarySeq) -> int:
    """S(2) T(2^-1) mod 2^N - 1."""
    m = (1 << seq.period) - 1
    return s_of_two(seq) * t_at_inverse_two(seq) % m


def closed_form_weighted_sum(k: int) -> int:
    """8 {3 (2^(4(2^k+1)) - 1)/15 + 2^(2^k) + 2^(3*2^k + 2) - 2^(4(2^k+1))}."""
    m4 = (1 << (4 * ((1 << k) + 1))) - 1
    return 8 * (3 * m4 // 15 + (1 << (1 << k)) + (1 << (3 * (1 << k) + 2))
                - (1 << (4 * ((1 << k) + 1))))


def weighted_ac_sum(k: int, profile: AutocorrProfile) -> tuple[int, int]:
    """(sum_{tau=1}^{4(2^k+1)} AC(tau) 2^tau, its closed form)."""
    top = 4 * ((1 << k) + 1)
    if len(profile) <= top:
        raise ValueError(f"profile must cover tau up to {top}")
    direct = sum(int(profile.values[tau]) << tau for tau in range(1, top + 1))
    return direct, closed_form_weighted_sum(k)


class WeightedSumMismatch(AssertionError):
    pass


def check_weighted_ac_sum(k: int, profile: AutocorrProfile) -> int:
    direct, closed = weighted_ac_sum(k, profile)
    if direct != closed:
        raise WeightedSumMismatch(
            f"k={k}: direct weighted sum {direct:#x} != closed form {closed:#x}")
    return direct


def _moduli(k: int) -> dict[str, int]:
    n = 4 * ((1 << (2 * k)) - 1)
    h = (1 << k) + 1
    full = (1 << n) - 1
    block = (1 << (4 * h)) - 1
    return {
        "full": full,
        "cofactor": full // block,
        "block": block,
        "block-fifth": ((1 << (2 * h)) + 1) // 5,
        "half-plus": (1 << h) + 1,
        "half-minus": (1 << h) - 1,
    }


def verify_congruences(seq: BinarySeq, k: int, profile: AutocorrProfile | None = None
                       ) -> CongruenceReport:
    """Check S(2) T(2^-1) against each closed-form residue in the bound's proof.

    Labels:
      full-period           -(M/B)(W/2) - 2^(2k+1) mod M, W the closed weighted sum
      full-period-expanded  the same after substituting W
      mod-15                13, 0, 10, 9 for k = 0, 1, 2, 3 mod 4
      cofactor              -2^(2k+1) mod M/B
      block                 -4{(2^k-1)[B/5 + 2^(2^k) + 2^(3*2^k+2) - 1] + 2^(2k-1)} mod B
      block-fifth           -4(2^(2k-1) - 2^k + 1) mod (2^(2(2^k+1)) + 1)/5
      half-plus             -8(2^(k-1) - 1)^2 mod 2^(2^k+1) + 1
      half-minus            -2^(2k+1) mod 2^(2^k+1) - 1
      autocorrelation-identity  (profile given) -2 S(2) T(2^-1) = N + sum AC(tau) 2^tau mod M
    where M = 2^N - 1 and B = 2^(4(2^k+1)) - 1.
    """
    n = 4 * ((1 << (2 * k)) - 1)
    if k < 2:
        raise ValueError(f"congruences need k >= 2, got {k}")
    if seq.period != n:
        raise ValueError(f"sequence period {seq.period} is not 4(2^2k - 1) = {n} for k={k}")
    mods = _moduli(k)
    full, block = mods["full"], mods["block"]
    p = product_residue(seq)
    rep = CongruenceReport(k)

    def add(label, modulus, expected, actual=None):
        actual = p if actual is None else actual
        rep.records.append(CongruenceRecord(label, modulus, expected % modulus, actual % modulus))

    w = closed_form_weighted_sum(k)
    cof = full // block
    add("full-period", full, -cof * (w // 2) - (1 << (2 * k + 1)))
    inner = (block // 5 + (1 << (1 << k)) + (1 << (3 * (1 << k) + 2))
             - (1 << (4 * ((1 << k) + 1))))
    add("full-period-expanded", full, -4 * (cof * inner + (1 << (2 * k - 1))))
    add("mod-15", 15, MOD15_RESIDUES[k % 4])
    add("cofactor", cof, -(1 << (2 * k + 1)))
    add("block", block, -4 * (((1 << k) - 1) * (block // 5 + (1 << (1 << k))
                                                   + (1 << (3 * (1 << k) + 2)) - 1)
                               + (1 << (2 * k - 1))))
    add("block-fifth", mods["block-fifth"], -4 * ((1 << (2 * k - 1)) - (1 << k) + 1))
    add("half-plus", mods["half-plus"], -8 * ((1 << (k - 1)) - 1) ** 2)
    add("half-minus", mods["half-minus"], -(1 << (2 * k + 1)))
    if profile is not None:
        if not profile.complete:
            raise ValueError("autocorrelation identity needs the complete profile")
        acc = sum(int(v) << tau for tau, v in enumerate(profile.values.tolist()) if tau)
        add("autocorrelation-identity", full, n + acc, -2 * p)
    return rep


def block_factor_residues(seq: BinarySeq, k: int) -> dict[str, tuple[int, int]]:
    """S(2) T(2^-1) modulo each factor of 2^(4(2^k+1)) - 1, plus the direct residue."""
    mods = _moduli(k)
    p = product_residue(seq)
    h = (1 << k) + 1
    out = {name: (p % mods[name], mods[name])
           for name in ("block-fifth", "half-plus", "half-minus")}
    out["five"] = (p % 5, 5)
    out["block-plus"] = (p % ((1 << (2 * h)) + 1), (1 << (2 * h)) + 1)
    out["block"] = (p % mods["block"], mods["block"])
    return out


def crt_recombine_block(seq: BinarySeq, k: int) -> tuple[int, int]:
    """Recombine residues mod 5, (2^(2h)+1)/5, 2^h+1, 2^h-1 (h = 2^k+1).

    5 and (2^(2h)+1)/5 share the factor 5 when 25 | 2^(2h)+1; then the residue
    mod 2^(2h)+1 is used in their place. Returns (recombined, direct).
    """
    res = block_factor_residues(seq, k)
    fifth = res["block-fifth"][1]
    if fifth % 5:
        parts = [res["five"], res["block-fifth"], res["half-plus"], res["half-minus"]]
    else:
        parts = [res["block-plus"], res["half-plus"], res["half-minus"]]
    x, m = crt([r for r, _ in parts], [mi for _, mi in parts])
    assert m == res["block"][1]
    return x, res["block"][0]


def report_as_dict(rep: CongruenceReport) -> dict:
    return {"k": rep.k, "records": [asdict(r) | {"pass": r.passed} for r in rep.records]}
