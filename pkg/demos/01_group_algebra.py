"""
Recovering a group algebra from a free action
==============================================

S3 acting on itself by left multiplication is the simplest input the
pipeline accepts.  The orbits of the diagonal action on pairs are the
graphs of right multiplications, so there is one unit, one arrow per
group element, and every structure constant is 0 or 1: the convolution
algebra is the integral group ring of S3.
"""

from fractions import Fraction

from hyperq.algebra import chi, mul, sigma
from hyperq.fixtures import s3_regular_action
from hyperq.io import format_element
from hyperq.realization import orbit_atoms, weights

real = orbit_atoms(s3_regular_action())
W = weights(real)
H = W.base

print("units :", " ".join(H.unit_names))
print("arrows:", " ".join(H.arrow_names))
print("orbit sizes:", real.orbit_size)
print()

# The product of two basis elements is always a single basis element
# with coefficient one; laid out as a table it is a Latin square, i.e.
# the multiplication table of the group.
names = H.arrow_names
print("multiplication table:")
for a in range(H.n_arrows):
    row = []
    for b in range(H.n_arrows):
        prod = mul(W, {a: Fraction(1)}, {b: Fraction(1)})
        (c, coeff), = prod.items()
        assert coeff == 1
        row.append(names[c])
    print("  ", " ".join(row))
print()

# All weights are 1, so the character is constantly 1 and the time
# evolution fixes every element.
print("chi:", [str(chi(W, g)) for g in range(H.n_arrows)])
u = {0: Fraction(2), 3: Fraction(-1, 2)}
print("u        =", format_element(u, names))
out = sigma(W, 1.0, u)
print("sigma_1 u =", {names[g]: v for g, v in out.items()})
