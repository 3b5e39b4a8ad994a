"""Constructive, invertible maps between the object families.

The central constructions:

* noncrossing diagrams <-> labelled coloured forests satisfying the two
  ordering conditions (arcs become equally coloured edges);
* labelled trees with descending circular order <-> rooted unlabelled trees
  (the root remembers which vertex was labelled k; the circular order
  restores the rest);
* unlabelled trees <-> diagonal-coloured m-angulations up to rotation
  (dual tree one way, clockwise slot embedding of the completed tree back);
* the chain of six equinumerous families around the set of m-angulations of
  a fixed polygon (family_chain);
* the two recursion bijections on connected noncrossing diagrams used for
  the quadratic and the m-fold convolution counting identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .angulations import (
    ColouredAngulation,
    Face,
    LabelledAngulation,
    MAngulation,
    RootedAngulation,
    canonical_rotation,
    colour_from_seed,
    labelled_dual,
)
from .core import (
    CircularOrder,
    ColouredForest,
    ColouredTree,
    UnlabelledTree,
    canonical_rooted,
    canonical_unlabelled,
    circular_order,
)
from .diagrams import RnaDiagram, is_connected, is_noncrossing
from .errors import (
    ConditionAViolated,
    ConditionBViolated,
    NotInFamily,
    WrongCircularOrder,
)

# -- diagrams <-> forests -----------------------------------------------------------

def diagram_to_forest(diagram: RnaDiagram) -> ColouredForest:
    """Arcs become edges coloured by their base; noncrossing inputs always
    yield a forest satisfying the two ordering conditions."""
    edges = tuple((a[0], b[0], a[1]) for a, b in diagram.arcs)
    return ColouredForest(diagram.k, diagram.m, edges)


def _check_condition_a(forest: ColouredForest) -> None:
    comps = forest.components()
    for x in range(len(comps)):
        for y in range(x + 1, len(comps)):
            merged = sorted(comps[x] | comps[y], reverse=True)
            blocks = 1
            for a, b in zip(merged, merged[1:]):
                if (a in comps[x]) != (b in comps[x]):
                    blocks += 1
            if blocks >= 4:
                raise ConditionAViolated(
                    f"components {sorted(comps[x])} and {sorted(comps[y])} interleave"
                )


def _check_condition_b(forest: ColouredForest) -> None:
    sigma = circular_order(forest)
    for comp in forest.components():
        for a in comp:
            lower = [x for x in comp if x < a]
            want = max(lower) if lower else max(comp)
            if sigma(a) != want:
                raise ConditionBViolated(
                    f"sigma({a}) = {sigma(a)}, expected {want} in component {sorted(comp)}"
                )


def forest_to_diagram(forest: ColouredForest) -> RnaDiagram:
    """Inverse of diagram_to_forest on forests satisfying both ordering
    conditions (checked)."""
    _check_condition_a(forest)
    _check_condition_b(forest)
    arcs = tuple(((u, c), (v, c)) for u, v, c in forest.edges)
    return RnaDiagram(forest.k, forest.m, arcs)


# -- rooted trees --------------------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    """A rooted m-edge-coloured tree without labelling, stored canonically:
    the root is vertex 1 and the other labels follow the colour-sorted DFS
    preorder (unique because sibling edges have distinct colours)."""

    tree: ColouredTree

    @classmethod
    def from_tree(cls, tree: ColouredTree, root: int) -> "RootedTree":
        return cls(canonical_rooted(tree, root))

    @property
    def root(self) -> int:
        return 1

    @property
    def k(self) -> int:
        return self.tree.k

    @property
    def m(self) -> int:
        return self.tree.m

    def root_edges(self) -> dict[int, int]:
        """colour -> neighbour at the root"""
        return dict(self.tree.adjacency[1])


def tree_to_rooted(tree: ColouredTree) -> RootedTree:
    """Forget the labels of a tree with circular order (k k-1 ... 1) but
    remember vertex k as the root."""
    if circular_order(tree) != CircularOrder.descending(tree.k):
        raise WrongCircularOrder("tree's circular order is not (k k-1 ... 1)")
    return RootedTree.from_tree(tree, tree.k)


def rooted_to_tree(rooted: RootedTree) -> ColouredTree:
    """Label the root k and sigma^i(root) with k-i; the result has circular
    order (k k-1 ... 1)."""
    t = rooted.tree
    k = t.k
    sigma = circular_order(t)
    label = {}
    v = rooted.root
    for i in range(k):
        label[v] = k - i
        v = sigma(v)
    relabelled = ColouredTree(k, t.m, tuple((label[u], label[w], c) for u, w, c in t.edges))
    assert circular_order(relabelled) == CircularOrder.descending(k)
    return relabelled


# -- trees <-> coloured angulations ---------------------------------------------------

def _embed(
    tree: ColouredTree, start_vertex: int, polygon_start: int
) -> tuple[ColouredAngulation, dict[int, Face]]:
    """Plane embedding of the completed tree: walk the contour exiting each
    vertex one colour slot clockwise of the entering slot; boundary stubs
    become polygon sides in clockwise order, tree edges become diagonals.
    Returns the coloured angulation and the face of each tree vertex."""
    k, m = tree.k, tree.m
    n = (m - 2) * k + 2
    colours: dict[tuple[int, int], int] = {}
    touch: dict[int, set[int]] = {v: set() for v in range(1, k + 1)}
    crossings: dict[frozenset, list[int]] = {}

    def norm(a: int, b: int) -> tuple[int, int]:
        a = (a - 1) % n + 1
        b = (b - 1) % n + 1
        return (a, b) if a < b else (b, a)

    cur, slot = start_vertex, m
    p = polygon_start
    for _ in range(k * m):
        slot = slot % m + 1
        w = tree.adjacency[cur].get(slot)
        if w is None:
            colours[norm(p, p + 1)] = slot
            touch[cur].update(norm(p, p + 1))
            p += 1
        else:
            crossings.setdefault(frozenset((cur, w)), []).append((p - 1) % n + 1)
            cur = w
    diagonals = []
    for e, pts in crossings.items():
        assert len(pts) == 2
        d = norm(pts[0], pts[1])
        diagonals.append(d)
        u, v = tuple(e)
        colours[d] = tree.colour_of(u, v)
        touch[u].update(d)
        touch[v].update(d)
    ang = MAngulation(m, k, tuple(sorted(diagonals)))
    cang = ColouredAngulation(ang, tuple(colours.items()))
    face_of = {v: tuple(sorted(pts)) for v, pts in touch.items()}
    assert set(face_of.values()) == set(ang.faces)
    return cang, face_of


def tree_to_angulation(utree: UnlabelledTree | ColouredTree) -> ColouredAngulation:
    """The diagonal-coloured m-angulation of an unlabelled tree, canonical up
    to rotation."""
    tree = utree.tree if isinstance(utree, UnlabelledTree) else utree
    cang, _ = _embed(tree, 1, 1)
    return canonical_rotation(cang)


def angulation_to_tree(cang: ColouredAngulation) -> UnlabelledTree:
    """The dual tree with edge colours taken from the shared diagonals."""
    tree, _ = labelled_dual(cang)
    return canonical_unlabelled(tree)


def labelled_tree_to_rooted_angulation(tree: ColouredTree) -> RootedAngulation:
    """A labelled tree with circular order (k k-1 ... 1) maps to its coloured
    angulation rooted at the face of the vertex labelled k."""
    if circular_order(tree) != CircularOrder.descending(tree.k):
        raise WrongCircularOrder("tree's circular order is not (k k-1 ... 1)")
    cang, face_of = _embed(tree, 1, 1)
    return canonical_rotation(RootedAngulation(cang, face_of[tree.k]))


def rooted_angulation_to_tree(rang: RootedAngulation) -> ColouredTree:
    """Inverse: the root face is labelled k, and sigma^i(root) gets k-i."""
    t0, labels = labelled_dual(rang.base)
    root_label = labels[tuple(rang.root)]
    sigma = circular_order(t0)
    k = t0.k
    newlab = {}
    v = root_label
    for i in range(k):
        newlab[v] = k - i
        v = sigma(v)
    tree = ColouredTree(k, t0.m, tuple((newlab[u], newlab[w], c) for u, w, c in t0.edges))
    assert circular_order(tree) == CircularOrder.descending(k)
    return tree


def labelled_tree_to_labelled_angulation(tree: ColouredTree) -> LabelledAngulation:
    """Any labelled tree maps to the m-gon-labelled coloured angulation whose
    face labels are the vertex labels, canonical up to rotation."""
    cang, face_of = _embed(tree, 1, 1)
    labels = tuple((f, v) for v, f in face_of.items())
    return canonical_rotation(LabelledAngulation(cang, labels))


def labelled_angulation_to_tree(lang: LabelledAngulation) -> ColouredTree:
    tree, _ = labelled_dual(lang.base, dict(lang.labels))
    return tree


# -- rooted complete plane trees -------------------------------------------------------

PlaneNode = tuple  # children tuple of length m-1; a leaf is None


@dataclass(frozen=True)
class PlaneTree:
    """A rooted complete (m-1)-ary plane tree: every internal node carries an
    ordered tuple of m-1 children, each an internal node or a leaf (None)."""

    m: int
    root: PlaneNode

    def internal_count(self) -> int:
        def count(node) -> int:
            if node is None:
                return 0
            return 1 + sum(count(ch) for ch in node)

        return count(self.root)

    def to_json(self) -> str:
        import json

        def conv(node):
            return None if node is None else [conv(ch) for ch in node]

        return json.dumps({"m": self.m, "plane": conv(self.root)}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PlaneTree":
        import json

        d = json.loads(text)

        def conv(node):
            return None if node is None else tuple(conv(ch) for ch in node)

        return cls(d["m"], conv(d["plane"]))


# -- the six-family chain ---------------------------------------------------------------

def _family1_check(x: RnaDiagram) -> None:
    if not is_noncrossing(x):
        raise NotInFamily(1, "diagram is crossing")
    if not is_connected(x):
        raise NotInFamily(1, "diagram is not connected")
    for (v1, r1), (v2, r2) in x.arcs:
        if (v1 == x.k and r1 != 1) or (v2 == x.k and r2 != 1):
            raise NotInFamily(1, f"last vertex carries an arc on S_{max(r1, r2)}")


def _family2_check(x: ColouredTree) -> None:
    if circular_order(x) != CircularOrder.descending(x.k):
        raise NotInFamily(2, "circular order is not (k+1 k ... 1)")
    top = x.adjacency[x.k]
    if x.k >= 2 and (len(top) != 1 or 1 not in top):
        raise NotInFamily(2, "last vertex is not a leaf on an S_1 edge")


def _family3_check(x: RootedTree) -> None:
    edges = x.root_edges()
    if x.k >= 2 and (len(edges) != 1 or 1 not in edges):
        raise NotInFamily(3, "root must have exactly one edge, coloured S_1")


def _family5_check(x: RootedTree) -> None:
    if 1 in x.root_edges():
        raise NotInFamily(5, "root has an S_1 edge")


def _family6_check(x: PlaneTree) -> None:
    def ok(node) -> bool:
        if node is None:
            return True
        return len(node) == x.m - 1 and all(ok(ch) for ch in node)

    if not ok(x.root) or x.root is None:
        raise NotInFamily(6, "not a complete (m-1)-ary plane tree")


def family1_to_2(x: RnaDiagram) -> ColouredTree:
    _family1_check(x)
    forest = diagram_to_forest(x)
    tree = ColouredTree(forest.k, forest.m, forest.edges)
    _family2_check(tree)
    return tree


def family2_to_1(x: ColouredTree) -> RnaDiagram:
    _family2_check(x)
    d = forest_to_diagram(x)
    _family1_check(d)
    return d


def family2_to_3(x: ColouredTree) -> RootedTree:
    _family2_check(x)
    r = RootedTree.from_tree(x, x.k)
    _family3_check(r)
    return r


def family3_to_2(x: RootedTree) -> ColouredTree:
    _family3_check(x)
    return rooted_to_tree(x)


def family3_to_4(x: RootedTree) -> MAngulation:
    """Delete the root m-gon and anchor the marked (formerly S_1) edge at the
    polygon side [n, 1]."""
    _family3_check(x)
    t = x.tree
    if t.k == 1:
        raise NotInFamily(3, "need at least one non-root vertex")
    child = t.adjacency[x.root][1]
    keep = [v for v in range(1, t.k + 1) if v != x.root]
    relab = {v: idx + 1 for idx, v in enumerate(keep)}
    inner = ColouredTree(
        t.k - 1,
        t.m,
        tuple((relab[u], relab[w], c) for u, w, c in t.edges if x.root not in (u, w)),
    )
    n = (t.m - 2) * (t.k - 1) + 2
    cang, _ = _embed(inner, relab[child], n)
    return cang.ang


def family4_to_3(x: MAngulation) -> RootedTree:
    """Colour the marked edge [n, 1] with S_1, take the dual, and hang a new
    root off the marked face by an S_1 edge."""
    cang = colour_from_seed(x, (1, x.n), 1)
    t0, labels = labelled_dual(cang)
    marked_face = cang.ang.face_with_edge((1, x.n))
    c0 = labels[marked_face]
    root = t0.k + 1
    big = ColouredTree(root, t0.m, t0.edges + ((c0, root, 1),))
    return RootedTree.from_tree(big, root)


def family3_to_5(x: RootedTree) -> RootedTree:
    _family3_check(x)
    t = x.tree
    child = t.adjacency[x.root][1]
    keep = [v for v in range(1, t.k + 1) if v != x.root]
    relab = {v: idx + 1 for idx, v in enumerate(keep)}
    inner = ColouredTree(
        t.k - 1,
        t.m,
        tuple((relab[u], relab[w], c) for u, w, c in t.edges if x.root not in (u, w)),
    )
    out = RootedTree.from_tree(inner, relab[child])
    _family5_check(out)
    return out


def family5_to_3(x: RootedTree) -> RootedTree:
    _family5_check(x)
    t = x.tree
    root = t.k + 1
    big = ColouredTree(root, t.m, t.edges + ((x.root, root, 1),))
    return RootedTree.from_tree(big, root)


def family5_to_6(x: RootedTree) -> PlaneTree:
    """Complete the tree, order each vertex's children clockwise from its
    parental edge colour, and drop the colours."""
    _family5_check(x)
    t = x.tree

    def node(v: int, parental: int, parent: int) -> PlaneNode:
        children = []
        for off in range(1, t.m):
            col = (parental - 1 + off) % t.m + 1
            w = t.adjacency[v].get(col)
            children.append(None if w is None or w == parent else node(w, col, v))
        return tuple(children)

    return PlaneTree(t.m, node(x.root, 1, 0))


def family6_to_5(x: PlaneTree) -> RootedTree:
    """Recolour edges from the parental colours (root parental = S_1) and
    prune the leaves."""
    _family6_check(x)
    edges = []
    counter = [1]

    def walk(node: PlaneNode, parental: int, vid: int) -> None:
        for off, child in enumerate(node, start=1):
            col = (parental - 1 + off) % x.m + 1
            if child is not None:
                counter[0] += 1
                cid = counter[0]
                edges.append((vid, cid, col))
                walk(child, col, cid)

    walk(x.root, 1, 1)
    tree = ColouredTree(counter[0], x.m, tuple(edges))
    out = RootedTree.from_tree(tree, 1)
    _family5_check(out)
    return out


_FAMILY_EDGES = {1: (2,), 2: (1, 3), 3: (2, 4, 5), 4: (3,), 5: (3, 6), 6: (5,)}
_FAMILY_MAPS = {
    (1, 2): family1_to_2,
    (2, 1): family2_to_1,
    (2, 3): family2_to_3,
    (3, 2): family3_to_2,
    (3, 4): family3_to_4,
    (4, 3): family4_to_3,
    (3, 5): family3_to_5,
    (5, 3): family5_to_3,
    (5, 6): family5_to_6,
    (6, 5): family6_to_5,
}


def family_chain(x, from_item: int, to_item: int):
    """Compose the pairwise bijections along the family graph
    1 - 2 - 3 - 4 with 3 - 5 - 6."""
    if from_item not in _FAMILY_EDGES or to_item not in _FAMILY_EDGES:
        raise NotInFamily(from_item, "family index must be in 1..6")
    # BFS route in the small family graph
    prev = {from_item: None}
    queue = [from_item]
    while queue:
        a = queue.pop(0)
        for b in _FAMILY_EDGES[a]:
            if b not in prev:
                prev[b] = a
                queue.append(b)
    path = [to_item]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    for a, b in zip(path, path[1:]):
        x = _FAMILY_MAPS[(a, b)](x)
    return x


# -- recursion bijections on connected noncrossing diagrams ------------------------------

def vertex1_decompose(diagram: RnaDiagram):
    """Split a connected noncrossing diagram by the arc at slot (1, S_1):
    ("extend", bigger) when the slot is free, else ("split", (left, right))
    cutting at the arc's far vertex."""
    arc_at = next(
        (arc for arc in diagram.arcs if (1, 1) in arc),
        None,
    )
    k, m = diagram.k, diagram.m
    if arc_at is None:
        ext = RnaDiagram(k + 1, m, diagram.arcs + (((1, 1), (k + 1, 1)),))
        return ("extend", ext)
    v = arc_at[1][0]
    left_arcs = tuple(
        a for a in diagram.arcs if a[0][0] <= v - 1 and a[1][0] <= v - 1
    ) + (((1, 1), (v, 1)),)
    left = RnaDiagram(v, m, left_arcs)
    right_raw = [
        a
        for a in diagram.arcs
        if a[0][0] >= v and a[1][0] >= v and a != ((1, 1), (v, 1)) and (1, 1) not in a
    ]
    shifted = tuple(
        (((a[0][0] - v + 1), a[0][1]), ((a[1][0] - v + 1), a[1][1])) for a in right_raw
    )
    w = k - v + 2
    right = RnaDiagram(w, m, shifted + (((1, 1), (w, 1)),))
    return ("split", (left, right))


def vertex1_recombine(value) -> RnaDiagram:
    tag, payload = value
    if tag == "extend":
        ext: RnaDiagram = payload
        arcs = tuple(a for a in ext.arcs if a[1][0] != ext.k)
        return RnaDiagram(ext.k - 1, ext.m, arcs)
    left, right = payload
    v, w = left.k, right.k
    k = v + w - 2
    arcs = list(left.arcs)  # includes the (1,S_1)-(v,S_1) arc
    for a, b in right.arcs:
        if b[0] == w and b[1] == 1 and a == (1, 1):
            continue  # the extension arc added during the split
        arcs.append(((a[0] + v - 1, a[1]), (b[0] + v - 1, b[1])))
    return RnaDiagram(k, left.m, tuple(arcs))


def sigma_decompose(diagram: RnaDiagram) -> tuple[RnaDiagram, ...]:
    """Cut a connected noncrossing diagram into the m windows traced by
    applying S_1, ..., S_m to vertex 1; window j becomes a connected
    noncrossing diagram of degree k_j + 1 whose first and last vertices are
    joined by an arc on S_j (degree 1 when S_j fixes the walk)."""
    k, m = diagram.k, diagram.m
    slot_arc = {s: arc for arc in diagram.arcs for s in arc}
    marks = [1]
    v = 1
    for r in range(1, m + 1):
        arc = slot_arc.get((v, r))
        if arc is not None:
            v = arc[0][0] if arc[1][0] == v else arc[1][0]
        marks.append(v)
    assert marks[-1] == k or k == 1, "walk must end at vertex k"

    def pos(v: int, r: int) -> int:
        return (v - 1) * m + r

    ranges = [(pos(marks[j - 1], j), pos(marks[j], j)) for j in range(1, m + 1)]
    parts = []
    for j in range(1, m + 1):
        lo, hi = ranges[j - 1]
        start = marks[j - 1]
        arcs = []
        for arc in diagram.arcs:
            p1, p2 = (pos(*arc[0]), pos(*arc[1]))
            if lo <= p1 <= hi:
                assert lo <= p2 <= hi, "arc straddles a window boundary"
                arcs.append(
                    (
                        (arc[0][0] - start + 1, arc[0][1]),
                        (arc[1][0] - start + 1, arc[1][1]),
                    )
                )
        parts.append(RnaDiagram(marks[j] - marks[j - 1] + 1, m, tuple(arcs)))
    return tuple(parts)


def sigma_recombine(parts: Sequence[RnaDiagram]) -> RnaDiagram:
    m = len(parts)
    k = sum(p.k - 1 for p in parts) + 1
    arcs = []
    offset = 0
    for p in parts:
        for a, b in p.arcs:
            arcs.append(((a[0] + offset, a[1]), (b[0] + offset, b[1])))
        offset += p.k - 1
    return RnaDiagram(k, m, tuple(arcs))
