"""How the point ordering moves s_T of a one-point elliptic code.

For G = mO the state complexity is either the Wolf value or one less,
depending on whether the first and last m points sum to O.
"""
from agtrellis.code import permute, state_profile
from agtrellis.curves import (
    ell1_ell2,
    elliptic_create,
    elliptic_one_point_code,
    elliptic_predicted_s_T,
    idempotent_count,
    ordering_search,
)
from agtrellis.gf import field_of_order

E = elliptic_create(field_of_order(5), 0, 0, 0, 1, 1)   # y^2 = x^3 + x + 1
n = len(E.affine_points)
print(f"{n} affine points, group order {E.order}, {idempotent_count(E)} idempotent(s)")

for m in range(2, n - 1):
    C = elliptic_one_point_code(E, m)
    default = state_profile(C)
    order = ordering_search(E, m, 2, at_least=True) or ordering_search(E, m, 1, at_least=True)
    best = state_profile(permute(C, order)) if order else default
    l1, l2 = ell1_ell2(E, m, order)
    print(f"m={m}: k={C.k}, default s_T={default.s_T}, "
          f"searched s_T={best.s_T} (l1+l2={l1 + l2}, predicted {elliptic_predicted_s_T(n, m, l1, l2)})")

# n = 2m + 1 with all three 2-torsion points: the search can prove nothing helps
E4 = elliptic_create(field_of_order(5), 0, 0, 0, 4, 0)
print("delta=4, n=7, m=3 ->", ordering_search(E4, 3, 2))
