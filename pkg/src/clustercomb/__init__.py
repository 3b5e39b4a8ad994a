"""clustercomb: exact combinatorics of m-edge-coloured trees, noncrossing
RNA-style arc diagrams and polygon m-angulations, with the bijections,
counting formulas and induction dynamics connecting them.

Submodules: core (coloured trees, circular order, chains), diagrams
(arc diagrams), angulations (polygon dissections and mutation), bijections
(the maps between the families), counting (closed forms, identities and
exhaustive generators), induction (the R/L chain-rewriting calculus), cli.
"""
