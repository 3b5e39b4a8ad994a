#!/usr/bin/env python3
"""Noncrossing arc diagrams on the base sequence (S_1 ... S_m)^k.

Each of the k circle vertices carries the m bases clockwise; arcs join equal
bases, one arc per base slot.  A diagram is noncrossing when its arcs can be
drawn as non-intersecting chords, and connected when the arcs link all the
vertices.  Among noncrossing diagrams, connected is the same as having k-1
arcs, and every connected noncrossing diagram is saturated (no arc can be
added); the converse fails, and the search below finds the smallest kind of
counterexample at k = 5, m = 3.
"""
from clustercomb.counting import enumerate_diagrams
from clustercomb.diagrams import (
    RnaDiagram,
    arc_shift,
    is_connected,
    is_noncrossing,
    is_saturated,
)

d = RnaDiagram(3, 3, (((1, 1), (3, 1)), ((1, 2), (2, 2))))
print("arcs:", d.arcs)
print("noncrossing?", is_noncrossing(d), " connected?", is_connected(d))

crossing = RnaDiagram(2, 2, (((1, 1), (2, 1)), ((1, 2), (2, 2))))
print("\ndouble arc between two vertices crosses?", not is_noncrossing(crossing))

print("\nshifting all arcs one slot anticlockwise:")
shifted = arc_shift(d, 1)
print("  before:", d.arcs)
print("  after: ", shifted.arcs)

print("\nconnected <=> k-1 arcs over all noncrossing diagrams (k=4, m=3):")
agree = all(
    is_connected(x) == (len(x.arcs) == 3)
    for x in enumerate_diagrams(4, 3, noncrossing_only=True)
)
print("  holds?", agree)

print("\nhunting a saturated but disconnected diagram at k=5, m=3 ...")
for x in enumerate_diagrams(5, 3, noncrossing_only=True):
    if len(x.arcs) < 4 and is_saturated(x) and not is_connected(x):
        print("  found:", x.arcs)
        break
