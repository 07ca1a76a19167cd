"""q-deformations: Theta symbols, principal specializations and the
classical limit q -> 1 taken as a power series in eps = 1 - q.

Run: python demos/q_deformation.py
"""

from fractions import Fraction

from toeplitz_minors.biorthogonal import closed_pair_theta, kernel_closed_theta
from toeplitz_minors.closedforms import asymptotic_forms, evskew_fh, q_evskew, q_theta_determinant
from toeplitz_minors.scalar import Series
from toeplitz_minors.symbols import ThetaGD
from toeplitz_minors.toeplitz import exact_inverse, toeplitz_determinant

half = Fraction(1, 2)
print("D_N(Theta_{2,1}) at q = 1/2, closed form against elimination")
for n in range(5):
    print(f"   N={n}: {q_theta_determinant(2, 1, n, half)}  {toeplitz_determinant(ThetaGD(2, 1, half), n)}")

print("\nclosed kernel equals the inverse (N = 3):", kernel_closed_theta(2, 1, 3, half).as_lists() == exact_inverse(ThetaGD(2, 1, half), 3))
pair = closed_pair_theta(2, 1, 2, half)
print("monic p_2:", [str(c) for c in pair.p_coeffs], " q_2:", [str(c) for c in pair.q_coeffs], " norm2:", pair.norm2)

# q = 1 - eps, kept through eps^4
q = Series([1, -1], prec=5)
s = q_evskew(3, 1, 2, 1, 3, q)
print("\ns_{(3,2)/(1)}(1, q, q^2) around q = 1:", s)
print("constant term", s.constant_term(), "= evaluation at 1^3:", evskew_fh(3, 1, 2, 1, 3))

# the N -> infinity limit of an infinite principal specialization: 1/(q;q)_inf
t = Series.gen(12)
euler = asymptotic_forms("q_infinite", {"d": 1, "j": 0, "k": 0, "q": t}).value
print("\nq_infinite limit for d = 1, j = k = 0 (partition numbers):", [str(c) for c in euler.coefficient_list()])
