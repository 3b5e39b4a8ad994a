"""The R/L induction calculus on labelled m-edge-coloured trees.

R_{i,j} acts on a maximal S_i-S_j chain by swapping the two vertex labels
across every S_j-coloured chain edge simultaneously (proper colouring gives
each vertex at most one such edge), exchanging the colours S_i and S_j on the
chain edges, and leaving every other edge untouched, so detached subtrees
end up reattached at the vertex carrying the same label as before.  L_{i,j}
swaps across the S_i-coloured edges instead; the two maps are mutually
inverse.  R_i and L_i abbreviate the adjacent case j = i+1, the only
inductions that preserve the circular order in general.

Induction equivalence is the closure under adjacent R_i/L_i steps; the
equivalence class of a tree is exactly the set of trees sharing its circular
order, so orbits have size T_{k,m}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Chain, ColouredTree, circular_order, maximal_chains
from .errors import (
    DimensionMismatch,
    HypothesisViolated,
    NotMaximalChain,
    SizeLimitExceeded,
    SymbolMismatch,
    WrongColourSet,
)


@dataclass(frozen=True)
class InductionStep:
    kind: str  # "R" or "L"
    i: int
    j: int
    chain: tuple[int, ...]  # vertex set identifying the maximal chain

    def to_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j, "chain": list(self.chain)}

    @classmethod
    def from_dict(cls, d: dict) -> "InductionStep":
        return cls(d["kind"], d["i"], d["j"], tuple(d["chain"]))


def _resolve_chain(tree: ColouredTree, chain, i: int, j: int) -> Chain:
    if isinstance(chain, Chain):
        if (chain.i, chain.j) != (i, j):
            raise SymbolMismatch(f"chain is for colours ({chain.i},{chain.j}), not ({i},{j})")
        want = chain.vertex_set
    else:
        want = frozenset(chain)
    for c in maximal_chains(tree, i, j):
        if c.vertex_set == want:
            return c
    raise NotMaximalChain(f"{sorted(want)} is not a maximal S_{i}-S_{j} chain")


def _apply(tree: ColouredTree, chain, i: int, j: int, swap_colour: int) -> ColouredTree:
    c = _resolve_chain(tree, chain, i, j)
    path = c.vertices
    if len(path) == 1:
        return tree
    chain_edges = []
    for a, b in zip(path, path[1:]):
        chain_edges.append((a, b, tree.colour_of(a, b)))
    # simultaneous label swap across every chain edge of the swapped colour
    lab = {v: v for v in path}
    for a, b, col in chain_edges:
        if col == swap_colour:
            lab[a], lab[b] = b, a
    other = {i: j, j: i}
    new_chain = [
        (lab[a], lab[b], other[col]) for a, b, col in chain_edges
    ]
    keep = [e for e in tree.edges if frozenset((e[0], e[1])) not in
            {frozenset((a, b)) for a, b, _ in chain_edges}]
    return ColouredTree(tree.k, tree.m, tuple(keep) + tuple(new_chain))


def apply_R(tree: ColouredTree, chain, i: int, j: int | None = None) -> ColouredTree:
    """R_{i,j} on a maximal chain (j defaults to i+1)."""
    j = i + 1 if j is None else j
    return _apply(tree, chain, i, j, swap_colour=j)


def apply_L(tree: ColouredTree, chain, i: int, j: int | None = None) -> ColouredTree:
    """L_{i,j} on a maximal chain (j defaults to i+1); inverse of apply_R."""
    j = i + 1 if j is None else j
    return _apply(tree, chain, i, j, swap_colour=i)


def apply_step(tree: ColouredTree, step: InductionStep) -> ColouredTree:
    fn = apply_R if step.kind == "R" else apply_L
    return fn(tree, step.chain, step.i, step.j)


def apply_steps(tree: ColouredTree, steps: Iterable[InductionStep]) -> ColouredTree:
    for s in steps:
        tree = apply_step(tree, s)
    return tree


def _chains_within(tree: ColouredTree, i: int, j: int, inside: frozenset[int]) -> list[Chain]:
    return [
        c
        for c in maximal_chains(tree, i, j)
        if len(c.vertices) > 1 and c.vertex_set <= inside
    ]


def decompose_Rij(
    tree: ColouredTree, chain, i: int, j: int
) -> list[InductionStep]:
    """Write R_{i,j} on a chain with no incident S_{i+1}..S_{j-1} edges as a
    sequence of adjacent steps: R_l ascending on the subchains, R_{j-1} on the
    whole chain, then R_l descending.  The composition is checked against
    apply_R before returning."""
    c = _resolve_chain(tree, chain, i, j)
    inside = c.vertex_set
    for v in c.vertices:
        for col, w in tree.adjacency[v].items():
            if i < col < j and w not in inside:
                raise HypothesisViolated(
                    f"edge of colour S_{col} at vertex {v} touches the chain"
                )
    steps: list[InductionStep] = []
    cur = tree
    for l in range(i, j - 1):
        for sub in _chains_within(cur, l, l + 1, inside):
            steps.append(InductionStep("R", l, l + 1, sub.vertices))
            cur = apply_R(cur, sub, l, l + 1)
    whole = next(
        cc for cc in maximal_chains(cur, j - 1, j) if cc.vertex_set == inside
    )
    steps.append(InductionStep("R", j - 1, j, whole.vertices))
    cur = apply_R(cur, whole, j - 1, j)
    for l in range(j - 2, i - 1, -1):
        for sub in _chains_within(cur, l, l + 1, inside):
            steps.append(InductionStep("R", l, l + 1, sub.vertices))
            cur = apply_R(cur, sub, l, l + 1)
    direct = apply_R(tree, c, i, j)
    assert cur == direct, "adjacent decomposition disagrees with R_{i,j}"
    return steps


def normal_form(tree: ColouredTree) -> tuple[ColouredTree, list[InductionStep]]:
    """An induction-equivalent tree coloured only by S_1 and S_m, together
    with the adjacent R/L steps reaching it.  Stage l = 2..m-1 eliminates
    colour S_l by a breadth-first search over R_{1,l} and L_{l,l+1} moves
    (the R_{1,l} moves recorded through their adjacent decompositions)."""
    m = tree.m
    steps: list[InductionStep] = []
    cur = tree
    for l in range(2, m):
        cur, stage_steps = _eliminate_colour(cur, l)
        steps.extend(stage_steps)
    assert all(c in (1, tree.m) for _, _, c in cur.edges) or tree.k == 1
    replay = apply_steps(tree, steps)
    assert replay == cur, "normal form steps do not replay"
    return cur, steps


def _eliminate_colour(tree: ColouredTree, l: int) -> tuple[ColouredTree, list[InductionStep]]:
    """BFS over R_{1,l} and L_{l,l+1} moves until no edge is coloured S_l.
    The input must have no colours S_2..S_{l-1}; the moves never reintroduce
    them, and a result is guaranteed to exist."""

    def done(t: ColouredTree) -> bool:
        return all(c != l for _, _, c in t.edges)

    if done(tree):
        return tree, []
    frontier = [tree]
    parents: dict[ColouredTree, tuple[ColouredTree, str, Chain] | None] = {tree: None}
    while frontier:
        nxt = []
        for t in frontier:
            moves: list[tuple[str, Chain]] = []
            for c in maximal_chains(t, 1, l):
                if len(c.vertices) > 1:
                    moves.append(("R1l", c))
            for c in maximal_chains(t, l, l + 1):
                if len(c.vertices) > 1:
                    moves.append(("Lll1", c))
            for kind, c in moves:
                t2 = apply_R(t, c, 1, l) if kind == "R1l" else apply_L(t, c, l, l + 1)
                if t2 in parents:
                    continue
                parents[t2] = (t, kind, c)
                if done(t2):
                    return t2, _unwind(t2, parents, l)
                nxt.append(t2)
        frontier = nxt
    raise AssertionError(f"no S_{l}-free tree reachable; this should be impossible")


def _unwind(target, parents, l):
    rev = []
    node = target
    while parents[node] is not None:
        prev, kind, c = parents[node]
        rev.append((prev, kind, c))
        node = prev
    rev.reverse()
    steps: list[InductionStep] = []
    for prev, kind, c in rev:
        if kind == "R1l":
            steps.extend(decompose_Rij(prev, c, 1, l))
        else:
            steps.append(InductionStep("L", l, l + 1, c.vertices))
    return steps


def orbit(tree: ColouredTree, max_size: int | None = None) -> frozenset[ColouredTree]:
    """The induction equivalence class of a tree: BFS closure under all
    adjacent R_i and L_i over all maximal chains."""
    limit = max_size if max_size is not None else 1_000_000
    seen = {tree}
    frontier = [tree]
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, t.m):
                for c in maximal_chains(t, i, i + 1):
                    if len(c.vertices) == 1:
                        continue
                    for fn in (apply_R, apply_L):
                        t2 = fn(t, c, i, i + 1)
                        if t2 not in seen:
                            seen.add(t2)
                            if len(seen) > limit:
                                raise SizeLimitExceeded(
                                    f"orbit exceeded {limit} trees"
                                )
                            nxt.append(t2)
        frontier = nxt
    return frozenset(seen)


def equivalent(g: ColouredTree, g2: ColouredTree) -> bool:
    """Two trees are induction equivalent iff their circular orders agree."""
    if (g.k, g.m) != (g2.k, g2.m):
        raise DimensionMismatch(f"({g.k},{g.m}) vs ({g2.k},{g2.m})")
    return circular_order(g) == circular_order(g2)


def sigma_invariance_witness(
    k: int,
    m: int,
    i: int,
    j: int,
    require_middle_free: bool = False,
) -> tuple[ColouredTree, Chain] | None:
    """Search all trees on (k, m) for a maximal S_i-S_j chain on which R_{i,j}
    changes the circular order; returns the first witness or None.  With
    require_middle_free=True only chains with no incident middle-colour
    edges are tried (and no witness should exist)."""
    from .counting import enumerate_trees

    for tree in enumerate_trees(k, m):
        for c in maximal_chains(tree, i, j):
            if len(c.vertices) == 1:
                continue
            if require_middle_free:
                inside = c.vertex_set
                touched = any(
                    i < col < j and w not in inside
                    for v in c.vertices
                    for col, w in tree.adjacency[v].items()
                )
                if touched:
                    continue
            t2 = apply_R(tree, c, i, j)
            if circular_order(t2) != circular_order(tree):
                return tree, c
    return None


def chain_order(tree: ColouredTree, i: int, j: int) -> int:
    """Least p >= 1 with R_{i,j}^p = identity on a tree coloured only by S_i
    and S_j (a line); equals k."""
    if any(c not in (i, j) for _, _, c in tree.edges):
        raise WrongColourSet(f"tree uses colours outside {{S_{i}, S_{j}}}")
    whole = frozenset(range(1, tree.k + 1))
    cur = apply_R(tree, whole, i, j)
    p = 1
    while cur != tree:
        cur = apply_R(cur, whole, i, j)
        p += 1
        if p > 4 * tree.k + 4:
            raise AssertionError("R_{i,j} order exceeded 4k; broken involution")
    return p
