"""Signs of permutations of F_p built from primitive roots."""
from .arith import OddPrime, as_prime, jacobi, primitive_roots
from .classnum import class_number, class_number_for_prime, reduced_forms
from .perms import Permutation, make_eta, make_nu, make_sigma, make_tau, sign_cycles, sign_inversions
from .verify import classify, scan, verify_prime

__all__ = [
    "OddPrime", "as_prime", "jacobi", "primitive_roots",
    "class_number", "class_number_for_prime", "reduced_forms",
    "Permutation", "make_eta", "make_nu", "make_sigma", "make_tau", "sign_cycles", "sign_inversions",
    "classify", "scan", "verify_prime",
]
