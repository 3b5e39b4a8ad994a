"""Reference tables of known values for the three counting sequences.

T[m][k] counts labelled m-edge-coloured trees on k vertices with circular
order (k k-1 ... 1), equivalently connected noncrossing RNA m-diagrams of
degree k.  S[m][k] counts m-angulations of a fixed ((m-2)k+2)-gon, the
Fuss-Catalan numbers of degree m-1.  U[m][k] counts all labelled
m-edge-coloured trees on k vertices.

Known OEIS ids: T m=3 is A071724, T m=4 is A006629; S m=3..6 are
A000108, A001764, A002293, A002294; U is Gessel's formula
m*((m-1)k)!/((m-2)k+2)!.
"""
from __future__ import annotations

# k = 0..6
T_TABLE: dict[int, tuple[int, ...]] = {
    3: (1, 1, 3, 9, 28, 90, 297),
    4: (1, 1, 4, 18, 88, 455, 2448),
    5: (1, 1, 5, 30, 200, 1425, 10626),
    6: (1, 1, 6, 45, 380, 3450, 32886),
}

# k = 0..6
S_TABLE: dict[int, tuple[int, ...]] = {
    3: (1, 1, 2, 5, 14, 42, 132),
    4: (1, 1, 3, 12, 55, 273, 1428),
    5: (1, 1, 4, 22, 140, 969, 7084),
    6: (1, 1, 5, 35, 285, 2530, 23751),
}

# k = 1..6
U_TABLE: dict[int, tuple[int, ...]] = {
    3: (1, 3, 18, 168, 2160, 35640),
    4: (1, 4, 36, 528, 10920, 293760),
    5: (1, 5, 60, 1200, 34200, 1275120),
    6: (1, 6, 90, 2280, 82800, 3946320),
}
