# Exact congruences mod p and the two cyclotomic products in log space.
import math

from permsign import identities as ids
from permsign.arith import half_factorial_mod

p = 13
print("prod (j^2 - i^2) mod 13 =", ids.product_j2_i2(p), " -(6!) mod 13 =", -half_factorial_mod(p) % p)
print("Wilson pairs:", ids.check_wilson_pair(p))
print("prod (j - i) identity:", ids.product_j_minus_i(p))
print("Williams-Currie at 13:", ids.check_williams_currie(p))
print("Mordell at 23:", ids.check_mordell(23))

#--------------------------------------------------------------------------------------------------
# Upsilon(zeta) has modulus ((p-1)/2)^((p-1)/4); raw complex products overflow
# long before p = 101, so the product is carried as (log|z|, arg z).
for p in (5, 13, 41, 101):
    acc = ids.upsilon_at_zeta(p)
    target = (p - 1) / 4 * math.log((p - 1) / 2)
    print(f"p={p:<4} log|Upsilon| = {acc.log_magnitude:.9f}  expected {target:.9f}"
          f"  phase {acc.phase:.6f}  ok={ids.check_upsilon_complex(p)}")

print("Petrov at 101:", ids.check_petrov_complex(101))
print("special form 163 (n=1):", ids.check_special_form_product(163, 1))
