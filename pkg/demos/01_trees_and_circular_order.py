#!/usr/bin/env python3
"""Labelled edge-coloured trees and their circular order.

A tree on vertices 1..k carries one of m symbols S_1..S_m on each edge, with
all edges at a vertex distinctly coloured.  Every symbol acts on the vertices
as an involution (swap along the edge of that colour, fix otherwise), and the
composite S_m o ... o S_1 is a permutation called the circular order.  It is
always a single k-cycle.
"""
from clustercomb.core import (
    canonical_unlabelled,
    circular_order,
    is_k_cycle,
    maximal_chains,
    symbol_action,
    validate_tree,
)

tree = validate_tree([(1, 2, 1), (2, 3, 2), (2, 4, 3)], k=4, m=3)
print("tree edges (u, v, colour):", tree.edges)

print("\nsymbol actions at vertex 2:")
for r in (1, 2, 3):
    print(f"  S_{r}(2) = {symbol_action(tree, r, 2)}")

sigma = circular_order(tree)
print("\ncircular order sigma(v):", {v: sigma(v) for v in range(1, 5)})
print("one cycle through all vertices?", is_k_cycle(sigma))
print("cycle starting at 1:", sigma.cycle_of(1))

print("\nmaximal S_1-S_2 chains:")
for chain in maximal_chains(tree, 1, 2):
    print("  path", chain.vertices)
print("maximal S_1-S_3 chains:")
for chain in maximal_chains(tree, 1, 3):
    print("  path", chain.vertices)

relabelled = validate_tree([(4, 3, 1), (3, 1, 2), (3, 2, 3)], k=4, m=3)
print("\nsame shape under a different labelling?",
      canonical_unlabelled(tree) == canonical_unlabelled(relabelled))
