"""
Characters, time evolution and the KMS identity
===============================================

On the disjoint union of S3 acting on itself and on three points, the
arrows between the two blocks have asymmetric fibers: left weight 1,
right weight 2 in one direction and the transpose in the other.  The
character chi = left/right is then genuinely non-trivial, the time
evolution rotates those arrows, and the unit-supported weight eta
satisfies the exact KMS identity at inverse temperature 1.
"""

import math
from fractions import Fraction

from hyperq.algebra import chi, eta, kms_check, mul, sigma, sigma_imag
from hyperq.fixtures import s3_mixed_action
from hyperq.realization import orbit_atoms, weights

W = weights(orbit_atoms(s3_mixed_action()))
H = W.base

print("arrows with chi != 1:")
for g in range(H.n_arrows):
    c = chi(W, g)
    if c != 1:
        print(f"  {H.arrow_names[g]}: left={W.left[g]} right={W.right[g]} chi={c}")
print()

# sigma_t scales [g] by chi(g)^(it); at t = pi/log 2 the chi = 1/2
# arrows pick up a factor of exactly -1
g = 9
t = math.pi / math.log(2)
out = sigma(W, t, {g: Fraction(1)})
print(f"sigma_t [a9] at t = pi/log2: coefficient {out[g]:+.12f}")
print()

# the KMS identity eta([q] sigma_i([q'])) = eta([q'][q]), spot-checked
# on the cross-block pair and then over all pairs
q, qp = 9, H.star[9]
lhs = eta(W, mul(W, {q: Fraction(1)}, sigma_imag(W, {qp: Fraction(1)})))
rhs = eta(W, mul(W, {qp: Fraction(1)}, {q: Fraction(1)}))
print(f"eta([a9] sigma_i([a6])) = {lhs}   eta([a6][a9]) = {rhs}")

report = kms_check(W)
print(f"kms_check: {report.checked} pairs, {len(report.failures)} failures")
