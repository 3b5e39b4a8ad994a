#!/usr/bin/env python3
"""The three counting sequences and the identities connecting them.

T counts labelled trees with the descending circular order (equivalently
connected noncrossing diagrams), S counts m-angulations of a fixed polygon
(Fuss-Catalan numbers of degree m-1), and U counts all labelled trees.
Exhaustive generators double-check each closed form at desk scale.
"""
import math

from clustercomb.core import CircularOrder
from clustercomb.counting import (
    check_convolution,
    check_gkp_identity,
    check_recursion,
    enumerate_angulations,
    enumerate_trees,
    fuss_catalan,
    s_count,
    t_count,
    u_count,
)

print("T_{k,m} for m=3..6, k=0..6:")
for m in range(3, 7):
    print(" ", [t_count(k, m) for k in range(7)])
print("S_{k,m}:")
for m in range(3, 7):
    print(" ", [s_count(k, m) for k in range(7)])
print("U_{k,m} (k>=1):")
for m in range(3, 7):
    print(" ", [u_count(k, m) for k in range(1, 7)])

print("\nU = T*(k-1)!:",
      all(u_count(k, m) == t_count(k, m) * math.factorial(k - 1)
          for k in range(1, 8) for m in range(3, 7)))
print("quadratic recursion T_k = sum S_{v-1} S_{k+1-v}:",
      all(check_recursion(k, m) for k in range(1, 21) for m in range(3, 7)))
print("T is the m-fold convolution of S:",
      all(check_convolution(k, m) for k in range(1, 13) for m in range(3, 6)))
print("binomial convolution identity on a few tuples:",
      all(check_gkp_identity(n, r, s, 2) for n in range(6) for r in (-2, 1, 3) for s in (1, 2)))

print("\nexhaustive cross-checks:")
print("  trees with sigma=(3 2 1) at k=3, m=3:",
      sum(1 for _ in enumerate_trees(3, 3, CircularOrder.descending(3))), "= T =", t_count(3, 3))
print("  all trees at k=4, m=3:",
      sum(1 for _ in enumerate_trees(4, 3)), "= U =", u_count(4, 3))
print("  triangulations of the hexagon:",
      sum(1 for _ in enumerate_angulations(4, 3)), "= C_4^2 =", fuss_catalan(4, 2))
