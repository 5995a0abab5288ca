# Exact 2-adic complexity against the lower bounds, k = 1..8.
import warnings

from yugong.seqgen import yu_gong
from yugong.adic import two_adic_complexity, theorem3_bound, complexity_by_approximation
from yugong.tables import COMPLEXITY_TABLE

warnings.simplefilter("ignore")   # k=1 is outside the theorem range

print(" k       N    phi2   bound  case         listed")
for k, n, listed_phi, listed_bound in COMPLEXITY_TABLE:
    rep = two_adic_complexity(yu_gong(k), k)
    b = theorem3_bound(k)
    print(f"{k:2d} {rep.period:7d} {rep.phi2:7d} {b.bound:7d}  {b.case:12s} {listed_phi}/{listed_bound}")

# delta = -1 gives different numbers; at k=2 the complexity lands on the floor of the bound
for k in (2, 3, 5, 6):
    rep = two_adic_complexity(yu_gong(k, -1), k)
    print(f"delta=-1 k={k}: gcd={rep.g} phi2={rep.phi2} threshold={rep.bound.threshold:.3f}")

# the same number from the FCSR side: synthesize a register from a prefix
s = yu_gong(2)
for extra in (0, 2):
    bits = 2 * s.period + extra
    print(f"{bits}-bit prefix -> complexity {complexity_by_approximation(s.bits, bits)}")
