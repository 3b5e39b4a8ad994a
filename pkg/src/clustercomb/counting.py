"""Closed-form counts, the identities connecting them, and exhaustive
generators used as independent oracles.

Everything here is exact integer (or exact rational) arithmetic; any
non-exact division in a closed form is treated as a bug and raises.

The generators are desk-scale tools.  Each call estimates the size of its
output from a closed-form bound and refuses runs whose bound exceeds the
work limit (default 1_000_000 objects, overridable through the
CLUSTERCOMB_MAX_WORK environment variable).
"""
from __future__ import annotations

import itertools
import math
import os
from fractions import Fraction
from typing import Iterator, Sequence

from .angulations import MAngulation
from .core import CircularOrder, ColouredTree, circular_order
from .diagrams import RnaDiagram, is_connected
from .errors import SizeLimitExceeded

DEFAULT_MAX_WORK = 1_000_000


def _work_limit() -> int:
    env = os.environ.get("CLUSTERCOMB_MAX_WORK")
    return int(env) if env else DEFAULT_MAX_WORK


def _guard(kind: str, bound: int) -> None:
    limit = _work_limit()
    if bound > limit:
        raise SizeLimitExceeded(
            f"{kind}: output bound {bound} exceeds work limit {limit} "
            "(set CLUSTERCOMB_MAX_WORK to override)"
        )


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-exact division {num}/{den}")
    return q


# -- closed forms ---------------------------------------------------------------

def fuss_catalan(k: int, d: int) -> int:
    """The k-th Fuss-Catalan number of degree d: binom(dk, k)/((d-1)k+1)."""
    if k == 0:
        return 1
    return _exact_div(math.comb(d * k, k), (d - 1) * k + 1)


def t_count(k: int, m: int) -> int:
    """Number of labelled m-edge-coloured trees on k vertices with circular
    order (k k-1 ... 1): m/((m-2)k+2) * binom((m-1)k, k-1)."""
    if k == 0:
        return 1
    return _exact_div(m * math.comb((m - 1) * k, k - 1), (m - 2) * k + 2)


def s_count(k: int, m: int) -> int:
    """Number of m-angulations of a fixed ((m-2)k+2)-gon: C_k^{m-1}."""
    return fuss_catalan(k, m - 1)


def u_count(k: int, m: int) -> int:
    """Total number of labelled m-edge-coloured trees on k vertices:
    m*((m-1)k)! / ((m-2)k+2)!."""
    return _exact_div(m * math.factorial((m - 1) * k), math.factorial((m - 2) * k + 2))


# -- identities ------------------------------------------------------------------

def check_recursion(k: int, m: int) -> bool:
    """T_{k,m} == sum_{v=1}^{k} S_{v-1,m} * S_{k+1-v,m}, exactly."""
    total = sum(s_count(v - 1, m) * s_count(k + 1 - v, m) for v in range(1, k + 1))
    return total == t_count(k, m)


def check_convolution(k: int, m: int) -> bool:
    """T_{k,m} equals the m-fold convolution of the S sequence at index k-1,
    i.e. the sum over k_1+...+k_m = k-1 of S_{k_1,m} *...* S_{k_m,m}."""
    s = [s_count(v, m) for v in range(k)]
    conv = [1]  # 0-fold convolution: delta at 0
    for _ in range(m):
        out = [0] * k
        for a, ca in enumerate(conv):
            if ca:
                for b in range(k - a):
                    out[a + b] += ca * s[b]
        conv = out
    return conv[k - 1] == t_count(k, m)


def _gbinom(top: int, kk: int) -> int:
    """Generalized binomial coefficient with integer (possibly negative) top."""
    if kk < 0:
        return 0
    if top >= 0:
        return math.comb(top, kk)
    return (-1) ** kk * math.comb(kk - top - 1, kk)


def _coef(k: int, r: int, t: int) -> Fraction:
    """r/(tk+r) * binom(tk+r, k) in the cancelled form (r/k)*binom(tk+r-1, k-1),
    which stays defined when tk+r vanishes; equals 1 at k = 0."""
    if k == 0:
        return Fraction(1)
    return Fraction(r, k) * _gbinom(t * k + r - 1, k - 1)


def check_gkp_identity(n: int, r: int, s: int, t: int) -> bool:
    """Exact check of the convolution identity
    sum_k r/(tk+r) binom(tk+r,k) * s/(t(n-k)+s) binom(t(n-k)+s,n-k)
        == (r+s)/(tn+r+s) binom(tn+r+s,n),
    with vanishing denominator factors cancelled into the binomials."""
    lhs = sum((_coef(k, r, t) * _coef(n - k, s, t) for k in range(n + 1)), Fraction(0))
    return lhs == _coef(n, r + s, t)


# -- exhaustive generators --------------------------------------------------------

def _motzkin(n: int) -> int:
    """Number of partial noncrossing matchings on n points; an upper bound on
    the number of noncrossing diagrams with n = k*m slots."""
    mot = [1, 1]
    for i in range(1, n):
        mot.append(mot[-1] + sum(mot[j] * mot[i - 1 - j] for j in range(i)))
    return mot[n]


def enumerate_trees(
    k: int, m: int, order: CircularOrder | Sequence[int] | None = None
) -> Iterator[ColouredTree]:
    """Yield every labelled m-edge-coloured tree on k vertices, optionally
    filtered by circular order.  Backtracks over candidate edges in the
    canonical (min endpoint, max endpoint, colour) order, keeping the partial
    edge set a properly coloured forest throughout."""
    _guard("enumerate_trees", u_count(k, m) if m >= 3 and k >= 1 else 2)
    if order is not None and not isinstance(order, CircularOrder):
        order = CircularOrder(tuple(order))
    cands = [
        (u, v, c)
        for u in range(1, k + 1)
        for v in range(u + 1, k + 1)
        for c in range(1, m + 1)
    ]
    need = k - 1
    used_colours = [0] * (k + 1)  # bitmask of colours present at each vertex

    def rec(start: int, chosen: list, parent: list) -> Iterator[ColouredTree]:
        if len(chosen) == need:
            tree = ColouredTree(k, m, tuple(chosen))
            if order is None or circular_order(tree) == order:
                yield tree
            return
        remaining = need - len(chosen)
        for idx in range(start, len(cands) - remaining + 1):
            u, v, c = cands[idx]
            bit = 1 << c
            if used_colours[u] & bit or used_colours[v] & bit:
                continue
            ru, rv = u, v
            while parent[ru] != ru:
                ru = parent[ru]
            while parent[rv] != rv:
                rv = parent[rv]
            if ru == rv:
                continue
            new_parent = parent.copy()
            new_parent[ru] = rv
            used_colours[u] |= bit
            used_colours[v] |= bit
            chosen.append((u, v, c))
            yield from rec(idx + 1, chosen, new_parent)
            chosen.pop()
            used_colours[u] &= ~bit
            used_colours[v] &= ~bit

    yield from rec(0, [], list(range(k + 1)))


def enumerate_diagrams(
    k: int,
    m: int,
    connected_only: bool = False,
    noncrossing_only: bool = False,
) -> Iterator[RnaDiagram]:
    """Yield every RNA m-diagram of degree k matching the flags, without
    duplicates.  Processes slots in position order; each slot is either left
    free or matched with a later slot carrying the same base (positions equal
    mod m)."""
    _guard("enumerate_diagrams", _motzkin(k * m))
    n = k * m

    def slot(p: int) -> tuple[int, int]:
        return ((p - 1) // m + 1, (p - 1) % m + 1)

    taken = [False] * (n + 1)
    arcs: list[tuple[int, int]] = []

    def rec(p: int) -> Iterator[RnaDiagram]:
        while p <= n and taken[p]:
            p += 1
        if p > n:
            d = RnaDiagram(k, m, tuple((slot(a), slot(b)) for a, b in arcs))
            if connected_only and not is_connected(d):
                return
            yield d
            return
        # slot p left unmatched
        taken[p] = True
        yield from rec(p + 1)
        taken[p] = False
        # slot p matched with a later equal-base slot q; all existing arcs
        # start before p, so a crossing can only be a < p < b < q
        for q in range(p + m, n + 1, m):
            if taken[q]:
                continue
            if noncrossing_only and any(b > p and b < q for _, b in arcs):
                continue
            taken[p] = taken[q] = True
            arcs.append((p, q))
            yield from rec(p + 1)
            arcs.pop()
            taken[p] = taken[q] = False

    yield from rec(1)


def enumerate_angulations(k: int, m: int) -> Iterator[MAngulation]:
    """Yield every m-angulation of the fixed ((m-2)k+2)-gon.

    Recursion on subregions: a region is a cyclically ordered vertex tuple
    whose wrap pair (last, first) is the anchor edge; the face containing the
    anchor is chosen in all valid ways and the gaps recurse."""
    _guard("enumerate_angulations", s_count(k, m))
    n = (m - 2) * k + 2

    def gap_ok(size: int) -> bool:
        return size == 2 or (size >= m and (size - 2) % (m - 2) == 0)

    def gen(region: tuple[int, ...]) -> Iterator[frozenset]:
        if len(region) == m:
            yield frozenset()
            return
        last = len(region) - 1
        for picks in itertools.combinations(range(1, last), m - 2):
            idxs = (0, *picks, last)
            gaps = []
            ok = True
            for a, b in zip(idxs, idxs[1:]):
                if not gap_ok(b - a + 1):
                    ok = False
                    break
                if b - a + 1 > 2:
                    gaps.append((a, b))
            if not ok:
                continue
            chords = frozenset(
                (min(region[a], region[b]), max(region[a], region[b])) for a, b in gaps
            )
            sub = [list(gen(region[a : b + 1])) for a, b in gaps]

            def combine(i: int, acc: frozenset) -> Iterator[frozenset]:
                if i == len(sub):
                    yield acc
                    return
                for piece in sub[i]:
                    yield from combine(i + 1, acc | piece)

            yield from combine(0, chords)

    for diagset in gen(tuple(range(1, n + 1))):
        yield MAngulation(m, k, tuple(sorted(diagset)))
