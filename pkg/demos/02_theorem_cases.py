# One prime from each case of the sign theorem for tau_g.
from permsign import classify, verify_prime
from permsign.verify import equidistribution_counts

for p in (13, 17, 163, 7, 19, 3):
    rec = verify_prime(p)
    print(f"p={p:<4} {str(rec.case):<16} h={rec.class_number:<3} predicted {rec.predicted:<16}"
          f" even/odd {rec.roots_even}/{rec.roots_odd}  passed={rec.passed}")

# 19 = 18*1^2 + 1 is the n = 0 special form: every tau_g is odd, so the
# equidistribution statement cannot cover it.
print(classify(19), equidistribution_counts(19, "tau"))

# Kohl's sigma_g split for p = 1 mod 4
print("sigma counts at 13:", equidistribution_counts(13, "sigma"))
