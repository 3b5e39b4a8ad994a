#!/usr/bin/env python3
"""Diagonal rotation on polygon dissections, and induction as mutation.

Removing a diagonal merges its two m-gons into a (2m-2)-gon; rotating the
diagonal one vertex step anticlockwise re-splits it.  A whole-polygon
rotation decomposes into an explicit sequence of such rotations, and snake
induction (rotate every S_{i+1}-coloured snake diagonal, then shift the
hanging subpolygons at the still ends) matches R_i on the dual tree.
"""
from clustercomb.angulations import (
    LabelledAngulation,
    MAngulation,
    colour_from_seed,
    diagonal_rotate,
    find_snakes,
    induct_R_on_labelled_angulation,
    rotate_one_step,
    shift,
)
from clustercomb.bijections import labelled_angulation_to_tree
from clustercomb.induction import apply_R

fan = MAngulation(4, 4, ((1, 4), (1, 6), (1, 8)))
print("fan 4-angulation of the 10-gon:", fan.diagonals)
print("one rotation of [1,8]:", diagonal_rotate(fan, (1, 8)).diagonals)

rotated, seq = rotate_one_step(fan)
print("\nwhole-polygon rotation result:", rotated.diagonals)
print("equal to shifting every index by -1?", rotated == shift(fan, -1))
print("realized by rotating, in order:", seq)

cur = fan
for d in seq:
    cur = diagonal_rotate(cur, d)
print("replaying the sequence reproduces it?", cur == rotated)

print("\nsnake induction on a coloured triangulation of the hexagon:")
ang = MAngulation(3, 4, ((2, 6), (2, 5), (3, 5)))
ca = colour_from_seed(ang, (1, 2), 1)
la = LabelledAngulation(ca, tuple((f, i + 1) for i, f in enumerate(ca.ang.faces)))
snake = find_snakes(ca, 2, 3)[0]
print("  snake faces:", snake.faces)
out = induct_R_on_labelled_angulation(la, snake, 2)
print("  diagonals before:", ca.ang.diagonals)
print("  diagonals after: ", out.base.ang.diagonals)

left = labelled_angulation_to_tree(out)
t0 = labelled_angulation_to_tree(la)
right = apply_R(t0, frozenset(la.label[f] for f in snake.faces), 2, 3)
print("  commutes with R_2 on the dual tree?", left == right)
