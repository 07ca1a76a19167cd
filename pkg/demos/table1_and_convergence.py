"""Limits of D_N^{lam,mu}(f)/D_N(f) from the Fourier data of log f, and how
fast the exact ratios approach them.

Run: python demos/table1_and_convergence.py
"""

from fractions import Fraction

from toeplitz_minors.asymptotics import TABLE1_SHAPES, convergence_table, table1
from toeplitz_minors.scalar import decimal_string
from toeplitz_minors.symbols import PureFH, ThetaGD

F = Fraction

# log f = sum_k c_k z^k; only c_-2..c_3 enter the eight shapes below
profile = {1: F(1, 2), 2: F(-1, 3), 3: F(1, 5), -1: F(3, 4), -2: F(1, 7)}
print("character sum against skew Schur sum at", {k: str(v) for k, v in profile.items()})
for row in table1(profile):
    print(f"   lam={str(tuple(row['lambda'])):7} mu={str(tuple(row['mu'])):10} {str(row['bd_sum']):>12}  equal: {row['equal']}")

print("\nPureFH(1,1), lam = (), mu = (1): the ratio is N/(N+1)")
for r in convergence_table(PureFH(1, 1), (), (1,), range(1, 8)):
    print(f"   N={r['N']}  ratio={r['ratio']}  error={r['abs_error']}")

print("\nTheta_{1,1} at q = 1/2: the error shrinks geometrically")
for r in convergence_table(ThetaGD(1, 1, F(1, 2)), (), (1,), range(1, 7)):
    print(f"   N={r['N']}  ratio={decimal_string(r['ratio'], 10)}  target={r['target']}  error={decimal_string(r['abs_error'], 3)}")

exact = sum(
    not any(r["abs_error"] for r in convergence_table(PureFH(g, d), lam, mu, range(4, 11)))
    for g in range(3) for d in range(3) for lam, mu in TABLE1_SHAPES
)
print(f"\n{exact} of 72 (gamma, delta, shape) cases with gamma, delta <= 2 already sit at the limit for N >= 4")
