# Building the power permutations of F_p and reading off their signs.
#
# For a primitive root g mod p, sigma_g sends b to g^b on {1..p-1}, and
# tau_g folds g^b back into the half system {1..(p-1)/2}.
from permsign import make_eta, make_nu, make_sigma, make_tau, primitive_roots, sign_cycles, sign_inversions
from permsign.arith import jacobi

p = 13
roots = primitive_roots(p)
print("primitive roots mod", p, ":", roots)

#--------------------------------------------------------------------------------------------------
# tau_2 on H_13 is a single 6-cycle, hence odd
tau = make_tau(2, p)
print("tau_2      =", tau.tolist(), "cycles", tau.cycle_type())
print("sign (cycles)     =", sign_cycles(tau))
print("sign (inversions) =", sign_inversions(tau))

sigma = make_sigma(2, p)
print("sigma_2    =", sigma.tolist(), "sign", sign_cycles(sigma))

# nu_g is tau_g transported to the quadratic residues by b -> b^2; same sign
nu = make_nu(2, p)
print("nu_2 (positions in sorted Q_p) =", nu.tolist(), "sign", sign_cycles(nu))

#--------------------------------------------------------------------------------------------------
# Multiplication by a on Z_h has sign equal to the Jacobi symbol (a/h) when h is odd
h = 15
for a in (1, 2, 4, 7, 8, 11):
    print(f"eta_{a} on Z_{h}: sign {sign_cycles(make_eta(a, h)):+d}  jacobi {jacobi(a, h):+d}")
