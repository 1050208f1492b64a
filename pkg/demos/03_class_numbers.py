# Class numbers by reduced forms, cross-checked with the Dirichlet character sum.
from permsign.classnum import class_number, class_number_dirichlet, class_number_for_prime, reduced_forms

for D in (-4, -3, -20, -52, -68, -163):
    forms = ", ".join(str(f) for f in reduced_forms(D))
    print(f"D={D:<5} h={class_number(D)}  forms {forms}")

for D in (-20, -52, -68, -163):
    print(D, class_number(D), class_number_dirichlet(D))

# the discriminant attached to each prime: -4p for p = 1 mod 4, -p otherwise
for p in (5, 13, 17, 7, 23, 163):
    print(p, class_number_for_prime(p))
