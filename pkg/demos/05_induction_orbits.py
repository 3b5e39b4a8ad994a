#!/usr/bin/env python3
"""The R/L induction calculus on labelled coloured trees.

R_i rewrites a maximal S_i-S_{i+1} chain: vertex labels swap across the
S_{i+1}-coloured chain edges, the two colours exchange, subtrees stay glued
to their labels.  Adjacent steps preserve the circular order, and two trees
are connected by such steps exactly when their circular orders agree, so the
orbit of a tree is its whole circular-order class, of size T_{k,m}.
Non-adjacent R_{i,j} can break the circular order.
"""
from clustercomb.core import circular_order, validate_tree
from clustercomb.counting import t_count
from clustercomb.induction import (
    apply_L,
    apply_R,
    chain_order,
    normal_form,
    orbit,
    sigma_invariance_witness,
)

tree = validate_tree([(1, 2, 1), (2, 3, 2)], k=3, m=3)
print("tree:", tree.edges, " sigma:", circular_order(tree).perm)

step = apply_R(tree, (1, 2, 3), 1, 2)
print("\nR_1 on the whole chain:", step.edges)
print("sigma preserved?", circular_order(step) == circular_order(tree))
print("L_1 undoes it?", apply_L(step, (1, 2, 3), 1, 2) == tree)

orb = orbit(tree)
print(f"\norbit size: {len(orb)} = T_3,3 = {t_count(3, 3)}")

nf, steps = normal_form(tree)
print("\nnormal form using only S_1 and S_3:", nf.edges)
print("reached by", [(s.kind, s.i, s.chain) for s in steps])

line = validate_tree([(1, 2, 1), (2, 3, 3), (3, 4, 1)], k=4, m=3)
print("\nR_{1,3} on a two-colour line has order", chain_order(line, 1, 3))

print("\nsearching for a circular-order-breaking R_{1,3} at k=6, m=3 ...")
witness = sigma_invariance_witness(6, 3, 1, 3)
tree6, chain = witness
before = circular_order(tree6)
after = circular_order(apply_R(tree6, chain, 1, 3))
print("  tree:", tree6.edges)
print("  chain:", chain.vertices)
print("  sigma before:", before.perm)
print("  sigma after: ", after.perm)
print("adjacent steps never do this:",
      sigma_invariance_witness(4, 3, 1, 2) is None)
