# Build a Yu-Gong sequence for k=2 and look at its autocorrelation.
import numpy as np

from yugong.gf2k import build_field
from yugong.seqgen import m_sequence, shift_matrix, yu_gong
from yugong.correlate import full_profile, classify_optimality, predict_yu_gong

k = 2
ctx = build_field(2 * k)          # GF(16), smallest primitive modulus
print("modulus:", hex(ctx.modulus))

b = m_sequence(ctx)               # indicator, period 15
print("m-sequence:", b.to_ascii())

e = np.array(shift_matrix(k).entries).reshape((1 << k) - 1, (1 << k) + 1)
print("shift matrix E (rows read left to right):")
print(e)

s = yu_gong(k)
w = b.period
print("sequence as a 4 x 15 matrix:")
print(s.bits.reshape(4, w))

prof = full_profile(s)
print("AC(1..20) in blocks of four:")
for j in range(1, 6):
    print(f"  S_{j}", prof.block(j))

print("off-peak values:", sorted(prof.off_peak()))
print("class:", classify_optimality(prof))

# the residue triple drives the prediction
for tau in (1, 2, 4, 20):
    c = predict_yu_gong(tau, k)
    print(f"tau={tau:2d} (x,y,v)=({c.x},{c.y},{c.v}) predicted={c.predicted:+d} measured={prof[tau]:+d}")

# weight of one period
print("weight", s.weight, "of", s.period)
