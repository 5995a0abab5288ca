"""Command-line entry point: ``yugong {generate,tables,verify,scan}``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 resource cap.
Every report is written (to --out or stdout) before the exit status is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import warnings

from .adic.complexity import theorem3_bound, two_adic_complexity
from .adic.congruences import REPORT_FORMAT, verify_congruences
from .adic.numtheory import (
    DEFAULT_SIZE_CAP,
    SizeCapError,
    conjecture_scan,
    is_probable_prime,
    key_factor,
    lemma2_checks,
    scan_prime_k,
)
from .correlate import classify_optimality, full_profile, verify_theorem1
from .gf2k import FieldError, build_field
from .seqgen import yu_gong
from .tables import AC_TABLES, COMPLEXITY_TABLE, check_ac_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_k_list(text: str) -> list[int]:
    """'3', '2..5' or '4,8,12' (ranges may appear inside lists)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError as exc:
            raise UsageError(f"cannot read k list {text!r}: {exc}") from None
    if not out:
        raise UsageError("empty k list")
    if min(out) < 1:
        raise UsageError("k must be >= 1")
    return sorted(set(out))


def parse_modulus(text: str | None) -> int | None:
    if text is None:
        return None
    try:
        return int(text, 16)
    except ValueError:
        raise UsageError(f"modulus must be hexadecimal, got {text!r}") from None


def _field_for(k: int, modulus: int | None):
    if modulus is None:
        return build_field(2 * k)
    if modulus.bit_length() - 1 != 2 * k:
        raise UsageError(f"modulus {modulus:#x} has degree {modulus.bit_length() - 1}, "
                         f"k={k} needs degree {2 * k}")
    return build_field(2 * k, modulus)


def _yu_gong(k, delta, ctx):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return yu_gong(k, delta, ctx)


# -- output -------------------------------------------------------------------

def _render(command: str, records: list[dict], fmt: str, text_lines: list[str]) -> str:
    if fmt == "struct":
        return json.dumps({"format": REPORT_FORMAT, "command": command, "records": records},
                          indent=2) + "\n"
    if fmt == "csv":
        keys = []
        for r in records:
            keys.extend(key for key in r if key not in keys)
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        w.writerows(records)
        return buf.getvalue()
    return "\n".join(text_lines) + "\n"


def _emit(args, records, text_lines):
    text = _render(args.command, records, args.format, text_lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------

def cmd_generate(args) -> int:
    ks = parse_k_list(args.k)
    modulus = parse_modulus(args.modulus)
    records, lines = [], []
    for k in ks:
        ctx = _field_for(k, modulus)
        seq = _yu_gong(k, args.delta, ctx)
        rec = {"k": k, "delta": args.delta, "modulus": f"{ctx.modulus:x}",
               "N": seq.period, "weight": seq.weight,
               "in_theorem_scope": seq.params.in_theorem_scope,
               "ascii": seq.to_ascii(), "hex": seq.to_hex()}
        records.append(rec)
        lines += [f"# k={k} delta={args.delta:+d} modulus=0x{ctx.modulus:x} N={seq.period}"
                  f" weight={seq.weight}"
                  + ("" if seq.params.in_theorem_scope else " (outside theorem range)"),
                  f"ascii {rec['ascii']}", f"hex {rec['hex']}"]
    _emit(args, records, lines)
    return EXIT_OK


def _table_ac(which, args, modulus, records, lines) -> bool:
    k = AC_TABLES[which][0]
    ctx = _field_for(k, modulus)
    profile = full_profile(_yu_gong(k, args.delta, ctx), workers=args.workers)
    res = check_ac_table(which, delta=args.delta, ctx=ctx, profile=profile)
    lines.append(f"[{which}] autocorrelation for k={k}")
    for lo, hi, text in res.grouped_rows():
        lines.append(f"{lo}-{hi}  {text};")
    for m in res.mismatches:
        lines.append(f"  MISMATCH tau={m.tau} expected={m.expected} measured={m.measured}")
    status = "PASS" if res.passed else f"FAIL ({len(res.mismatches)} cells)"
    lines.append(f"[{which}] {status}")
    lines.append("")
    for tau, v in enumerate(res.measured.tolist(), start=1):
        exp = int(res.expected[tau - 1])
        records.append({"table": which, "k": k, "tau": tau, "AC": v, "expected": exp,
                        "pass": v == exp})
    return res.passed


def _table_complexity(args, modulus, records, lines) -> bool:
    ok = True
    lines.append("[4] k | N | actual | bound | listed actual | listed bound | flags")
    for k in range(1, args.k_max + 1):
        ctx = _field_for(k, modulus) if modulus is not None and modulus.bit_length() - 1 == 2 * k \
            else build_field(2 * k)
        rep = two_adic_complexity(_yu_gong(k, args.delta, ctx), k)
        b = theorem3_bound(k)
        _, n, listed_phi, listed_bound = COMPLEXITY_TABLE[k - 1]
        bound_ok = b.bound == listed_bound
        holds = bool(rep.bound_holds)
        ok &= bound_ok and holds
        flags = []
        if not bound_ok:
            flags.append("BOUND-MISMATCH")
        if not holds:
            flags.append("BOUND-VIOLATED")
        flags.append("actual=listed" if rep.phi2 == listed_phi else "actual!=listed")
        lines.append(f"{k} | {rep.period} | {rep.phi2} | {b.bound} | {listed_phi} | "
                     f"{listed_bound} | {' '.join(flags)}")
        records.append({"table": 4, "k": k, "N": rep.period, "phi2": rep.phi2,
                        "bound": b.bound, "case": b.case, "listed_phi2": listed_phi,
                        "listed_bound": listed_bound, "gcd": f"{rep.g:x}",
                        "bound_matches": bound_ok, "bound_holds": holds,
                        "actual_matches": rep.phi2 == listed_phi})
    lines.append(f"[4] {'PASS' if ok else 'FAIL'}")
    return ok


def cmd_tables(args) -> int:
    modulus = parse_modulus(args.modulus)
    which = [args.which] if args.which else [1, 2, 3, 4]
    if args.k_max < 1 or args.k_max > len(COMPLEXITY_TABLE):
        raise UsageError(f"--k-max must lie in 1..{len(COMPLEXITY_TABLE)}")
    records, lines = [], []
    ok = True
    for w in which:
        if w == 4:
            ok &= _table_complexity(args, modulus, records, lines)
        else:
            ok &= _table_ac(w, args, modulus, records, lines)
    _emit(args, records, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    ks = parse_k_list(args.k)
    if min(ks) < 2:
        raise UsageError("verify covers k >= 2; k=1 is outside the theorem range")
    modulus = parse_modulus(args.modulus)
    only = args.only
    records, lines = [], []
    ok = True
    capped = False
    for k in ks:
        if only in (None, "theorem1", "congruences"):
            ctx = _field_for(k, modulus)
            seq = _yu_gong(k, args.delta, ctx)
            profile = full_profile(seq, workers=args.workers)
        if only in (None, "theorem1"):
            rep = verify_theorem1(k, args.delta, ctx, profile=profile)
            cls = classify_optimality(profile)
            ok &= rep.passed
            lines.append(rep.summary() + f" class={cls}")
            for m in rep.mismatches[:10]:
                lines.append(f"  tau={m.tau} predicted={m.predicted} measured={m.measured}")
            records.append({"check": "theorem1", "k": k, "label": "value-law",
                            "modulus": f"{ctx.modulus:x}", "delta": args.delta,
                            "mismatches": len(rep.mismatches),
                            "periodicity_failures": len(rep.periodicity_failures),
                            "optimality": str(cls), "pass": rep.passed})
        if only in (None, "congruences"):
            crep = verify_congruences(seq, k, profile)
            ok &= crep.passed
            for r in crep.records:
                residue = f"{r.actual:#x}" if r.modulus.bit_length() <= 64 \
                    else f"{r.actual.bit_length()}-bit residue"
                lines.append(f"congruence k={k} {r.label}: {'pass' if r.passed else 'FAIL'}"
                             f" ({residue} mod a {r.modulus.bit_length()}-bit modulus)")
                records.append({"check": "congruences", "k": k} | r.row())
        if only in (None, "lemma2"):
            try:
                lrep = lemma2_checks(k, args.size_cap)
            except SizeCapError as exc:
                capped = True
                lines.append(f"lemma2 k={k}: SKIPPED ({exc})")
                records.append({"check": "lemma2", "k": k, "label": "skipped", "pass": None})
                continue
            ok &= lrep.passed
            lines.append(f"lemma2 k={k}: key={lrep.key} prime={lrep.key_is_prime} "
                         f"gcd={lrep.gcd_conjecture} small-gcd={lrep.gcd_small} "
                         f"{'PASS' if lrep.passed else 'FAIL'}")
            for c in lrep.clauses:
                if c.applicable:
                    lines.append(f"  {c.name}: {c.claim}: {'holds' if c.holds else 'FAILS'}")
                records.append({"check": "lemma2", "k": k, "label": c.name,
                                "gcd": f"{lrep.gcd_conjecture:x}", "small_gcd": f"{lrep.gcd_small:x}",
                                "applicable": c.applicable, "pass": c.holds})
    _emit(args, records, lines)
    if not ok:
        return EXIT_FAIL
    return EXIT_CAP if capped else EXIT_OK


def cmd_scan(args) -> int:
    if not args.primes and not args.conjecture:
        raise UsageError("scan needs --primes and/or --conjecture")
    records, lines = [], []
    status = EXIT_OK
    if args.primes:
        if args.k_max is None:
            raise UsageError("--primes needs --max-k")
        found = scan_prime_k(args.k_max)
        for k in range(4, args.k_max + 1, 4):
            records.append({"scan": "primes", "k": k, "key": f"{key_factor(k):x}",
                            "prime": k in found})
        lines.append(f"k = 0 mod 4, k <= {args.k_max}, 2^(2k-1) - 2^k + 1 prime: "
                     + (", ".join(map(str, found)) or "none"))
    if args.conjecture:
        ks = parse_k_list(args.ks) if args.ks else [4, 8, 12]
        bad = [k for k in ks if k % 4]
        if bad:
            raise UsageError(f"conjecture scan needs k = 0 mod 4, got {bad}")
        method = "modular" if args.modular else "direct"
        for k, g in conjecture_scan(ks, args.size_cap, method=method, workers=args.workers):
            if g is None:
                status = max(status, EXIT_CAP)
                lines.append(f"k={k}: skipped (size cap {args.size_cap})")
                records.append({"scan": "conjecture", "k": k, "gcd": None, "skipped": True})
                continue
            prime = is_probable_prime(key_factor(k))
            if g != 1:
                status = EXIT_FAIL
            lines.append(f"k={k}: gcd={g} key-prime={prime}"
                         + ("" if g == 1 else "  COUNTEREXAMPLE"))
            records.append({"scan": "conjecture", "k": k, "gcd": f"{g:x}",
                            "key_prime": prime, "skipped": False})
    _emit(args, records, lines)
    return status


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _delta(text):
    v = int(text)
    if v not in (1, -1):
        raise argparse.ArgumentTypeError("delta must be 1 or -1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="yugong", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt_default):
        sp.add_argument("--delta", type=_delta, default=1)
        sp.add_argument("--modulus", help="primitive polynomial as hex, e.g. 0x13")
        sp.add_argument("--format", choices=("csv", "struct", "paper"), default=fmt_default)
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--workers", type=int, default=1)

    g = sub.add_parser("generate", help="emit a Yu-Gong sequence")
    g.add_argument("--k", required=True)
    common(g, "paper")

    t = sub.add_parser("tables", help="reproduce the autocorrelation and complexity tables")
    t.add_argument("--which", type=int, choices=(1, 2, 3, 4))
    t.add_argument("--k-max", "--max-k", dest="k_max", type=int, default=5)
    common(t, "paper")

    v = sub.add_parser("verify", help="value law, congruences and gcd facts")
    v.add_argument("--k", default="2..5")
    v.add_argument("--only", choices=("theorem1", "congruences", "lemma2"))
    v.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    common(v, "paper")

    s = sub.add_parser("scan", help="prime and gcd scans over k = 0 mod 4")
    s.add_argument("--primes", action="store_true")
    s.add_argument("--conjecture", action="store_true")
    s.add_argument("--k-max", "--max-k", dest="k_max", type=int)
    s.add_argument("--ks")
    s.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    s.add_argument("--modular", action="store_true",
                   help="reduce modulo 5a instead of building the big integer (ignores the cap)")
    s.add_argument("--format", choices=("csv", "struct", "paper"), default="paper")
    s.add_argument("--out")
    s.add_argument("--workers", type=int, default=1)
    return p


COMMANDS = {"generate": cmd_generate, "tables": cmd_tables, "verify": cmd_verify,
            "scan": cmd_scan}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        sys.stderr.write("yugong: error: --workers must be >= 1\n")
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, FieldError) as exc:
        sys.stderr.write(f"yugong: error: {exc}\n")
        return EXIT_USAGE
    except SizeCapError as exc:
        sys.stderr.write(f"yugong: resource cap: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
