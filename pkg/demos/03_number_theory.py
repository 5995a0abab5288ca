# The gcd facts behind the bound, and scans over k = 0 mod 4.
from yugong.adic import (
    conjecture_gcd_modular, conjecture_scan, is_probable_prime, key_factor,
    lemma2_checks, scan_prime_k,
)

for k in range(2, 9):
    rep = lemma2_checks(k)
    claims = [c.name for c in rep.clauses if c.applicable]
    print(f"k={k} a={rep.key} prime={rep.key_is_prime} gcd={rep.gcd_conjecture}"
          f" small={rep.gcd_small} ok={rep.passed} {claims}")

print("k = 0 mod 4 with a prime, k <= 40:", scan_prime_k(40))

# full-size gcds stop at the cap; the modular route keeps going
print(conjecture_scan([4, 8, 12, 16, 20]))
for k in range(4, 61, 4):
    g = conjecture_gcd_modular(k)
    print(f"k={k:2d} a has {key_factor(k).bit_length()} bits, prime={is_probable_prime(key_factor(k))}, gcd={g}")
