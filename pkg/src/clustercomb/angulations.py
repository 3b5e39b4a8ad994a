"""m-angulations of an ((m-2)k+2)-gon.

Polygon vertices are 1..n clockwise.  A valid m-angulation has exactly k-1
pairwise noncrossing diagonals cutting the polygon into k m-gon faces; every
diagonal cuts off arcs of length 1 mod (m-2).  Faces are stored as ascending
vertex tuples; ascending order is the clockwise order around the polygon.

A diagonal-coloured angulation colours every edge (boundary sides and
diagonals) so that each face reads S_1, S_2, ..., S_m in clockwise order;
a colouring is determined by the colour of any single edge.  Rooted and
m-gon-labelled variants carry a distinguished face, respectively a bijection
faces -> 1..k.

Mutation is diagonal rotation: remove a diagonal, merge its two faces into a
(2m-2)-gon, and re-split one vertex step anticlockwise.  rotate_one_step
realizes the global rotation of the whole angulation as an explicit sequence
of such rotations; induct_R_on_angulation implements chain induction on the
polygon side (rotate every S_{i+1}-coloured snake diagonal, then shift the
subpolygons hanging off non-rotated snake ends one step anticlockwise).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import ColouredTree
from .errors import (
    BadDiagonalModulus,
    DiagonalsCross,
    NotADiagonal,
    NotASnake,
    SymbolOutOfRange,
    VertexOutOfRange,
    WrongDiagonalCount,
    WrongFaceShape,
)

Diagonal = tuple[int, int]
Face = tuple[int, ...]


def _split_faces(region: tuple[int, ...], diags: Iterable[Diagonal]) -> list[Face]:
    """Faces of the dissection a set of noncrossing chords induces on a
    cyclically ordered region."""
    diags = list(diags)
    out: list[Face] = []
    stack = [tuple(region)]
    while stack:
        reg = stack.pop()
        pos = {v: idx for idx, v in enumerate(reg)}
        ln = len(reg)
        cut = None
        for a, b in diags:
            pa, pb = pos.get(a), pos.get(b)
            if pa is None or pb is None:
                continue
            if pa > pb:
                pa, pb = pb, pa
            if pb - pa != 1 and not (pa == 0 and pb == ln - 1):
                cut = (pa, pb)
                break
        if cut is None:
            out.append(tuple(sorted(reg)))
        else:
            pa, pb = cut
            stack.append(reg[pa : pb + 1])
            stack.append(reg[pb:] + reg[: pa + 1])
    return out


def _face_edge_cycle(face: Face) -> list[Diagonal]:
    """Edges of a face in clockwise cyclic order (ascending vertices + wrap)."""
    m = len(face)
    return [
        (face[t], face[(t + 1) % m]) if t + 1 < m else (face[0], face[m - 1])
        for t in range(m)
    ]


def _norm_edge(a: int, b: int) -> Diagonal:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class MAngulation:
    m: int
    k: int
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "diagonals", tuple(sorted(_norm_edge(*d) for d in self.diagonals))
        )
        if self.m < 3 or self.k < 1:
            raise VertexOutOfRange("need m >= 3 and k >= 1")
        n = self.n
        if len(self.diagonals) != self.k - 1:
            raise WrongDiagonalCount(
                f"expected {self.k - 1} diagonals, got {len(self.diagonals)}"
            )
        seen = set()
        for a, b in self.diagonals:
            if not (1 <= a < b <= n):
                raise VertexOutOfRange(f"diagonal [{a},{b}] out of range")
            if b - a < 2 or b - a > n - 2:
                raise BadDiagonalModulus(f"[{a},{b}] is a polygon side, not a diagonal")
            if (b - a) % (self.m - 2) != 1 % (self.m - 2):
                raise BadDiagonalModulus(
                    f"[{a},{b}] does not cut off arcs of length 1 mod {self.m - 2}"
                )
            if (a, b) in seen:
                raise WrongDiagonalCount(f"diagonal [{a},{b}] repeated")
            seen.add((a, b))
        for i, (a, b) in enumerate(self.diagonals):
            for c, d in self.diagonals[i + 1 :]:
                if (a < c < b < d) or (c < a < d < b):
                    raise DiagonalsCross(f"[{a},{b}] crosses [{c},{d}]")
        for f in self.faces:
            if len(f) != self.m:
                raise WrongFaceShape(f"face {f} is not an {self.m}-gon")

    @property
    def n(self) -> int:
        return (self.m - 2) * self.k + 2

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(
            sorted(_split_faces(tuple(range(1, self.n + 1)), self.diagonals))
        )

    def is_boundary(self, edge: Diagonal) -> bool:
        a, b = edge
        return b - a == 1 or (a == 1 and b == self.n)

    def edges(self) -> list[Diagonal]:
        n = self.n
        sides = [(v, v + 1) for v in range(1, n)] + [(1, n)]
        return sides + list(self.diagonals)

    @cached_property
    def diagonal_faces(self) -> dict[Diagonal, tuple[Face, Face]]:
        by_diag: dict[Diagonal, list[Face]] = {d: [] for d in self.diagonals}
        for f in self.faces:
            for e in _face_edge_cycle(f):
                if e in by_diag:
                    by_diag[e].append(f)
        return {d: (fs[0], fs[1]) for d, fs in by_diag.items()}

    def face_with_edge(self, edge: Diagonal, not_face: Face | None = None) -> Face:
        edge = _norm_edge(*edge)
        for f in self.faces:
            if edge in _face_edge_cycle(f) and f != not_face:
                return f
        raise NotADiagonal(f"{edge} is not an edge of the dissection")

    def to_json(self) -> str:
        return json.dumps(
            {"m": self.m, "k": self.k, "diagonals": [list(d) for d in self.diagonals]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "MAngulation":
        d = json.loads(text)
        return cls(d["m"], d["k"], tuple(tuple(x) for x in d["diagonals"]))


def validate_angulation(raw: dict) -> MAngulation:
    return MAngulation(raw["m"], raw["k"], tuple(tuple(d) for d in raw["diagonals"]))


def _edge_key(e: Diagonal) -> str:
    return f"{e[0]}-{e[1]}"


def _face_key(f: Face) -> str:
    return "-".join(str(v) for v in f)


def _parse_key(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split("-"))


@dataclass(frozen=True)
class ColouredAngulation:
    """A diagonal-coloured m-angulation; ``colours`` maps every edge of the
    dissection (sides and diagonals) to a symbol so that each face reads
    S_1..S_m clockwise."""

    ang: MAngulation
    colours: tuple[tuple[Diagonal, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(sorted(self.colours)))
        cmap = dict(self.colours)
        expected = set(self.ang.edges())
        if set(cmap) != expected:
            raise WrongFaceShape("colouring must cover exactly the dissection's edges")
        m = self.ang.m
        for f in self.ang.faces:
            cyc = _face_edge_cycle(f)
            cols = [cmap[e] for e in cyc]
            for t in range(m):
                if cols[(t + 1) % m] != cols[t] % m + 1:
                    raise WrongFaceShape(
                        f"face {f} does not read S_1..S_m clockwise: {cols}"
                    )

    @cached_property
    def colour(self) -> dict[Diagonal, int]:
        return dict(self.colours)

    @property
    def m(self) -> int:
        return self.ang.m

    @property
    def k(self) -> int:
        return self.ang.k

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.ang.m,
                "k": self.ang.k,
                "diagonals": [list(d) for d in self.ang.diagonals],
                "colours": {_edge_key(e): c for e, c in self.colours},
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "ColouredAngulation":
        d = json.loads(text)
        ang = MAngulation(d["m"], d["k"], tuple(tuple(x) for x in d["diagonals"]))
        colours = tuple((_parse_key(e), c) for e, c in d["colours"].items())
        return cls(ang, colours)


@dataclass(frozen=True)
class RootedAngulation:
    base: ColouredAngulation
    root: Face

    def __post_init__(self):
        if tuple(self.root) not in self.base.ang.faces:
            raise WrongFaceShape(f"root {self.root} is not a face")

    def to_json(self) -> str:
        d = json.loads(self.base.to_json())
        d["root"] = _face_key(self.root)
        return json.dumps(d, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "RootedAngulation":
        d = json.loads(text)
        base = ColouredAngulation.from_json(text)
        return cls(base, _parse_key(d["root"]))


@dataclass(frozen=True)
class LabelledAngulation:
    base: ColouredAngulation
    labels: tuple[tuple[Face, int], ...]  # face -> 1..k, a bijection

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))
        faces = set(self.base.ang.faces)
        lmap = dict(self.labels)
        if set(lmap) != faces or sorted(lmap.values()) != list(
            range(1, self.base.ang.k + 1)
        ):
            raise WrongFaceShape("labels must biject faces onto 1..k")

    @cached_property
    def label(self) -> dict[Face, int]:
        return dict(self.labels)

    def to_json(self) -> str:
        d = json.loads(self.base.to_json())
        d["labels"] = {_face_key(f): l for f, l in self.labels}
        return json.dumps(d, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "LabelledAngulation":
        d = json.loads(text)
        base = ColouredAngulation.from_json(text)
        labels = tuple((_parse_key(f), l) for f, l in d["labels"].items())
        return cls(base, labels)


# -- colouring -------------------------------------------------------------------

def colour_from_seed(
    ang: MAngulation, seed_edge: Sequence[int], seed_colour: int
) -> ColouredAngulation:
    """The unique colouring extending seed_edge -> seed_colour under the
    clockwise S_1..S_m rule.  Propagation over the tree of faces is always
    consistent."""
    if not (1 <= seed_colour <= ang.m):
        raise SymbolOutOfRange(f"seed colour S_{seed_colour} out of range")
    seed = _norm_edge(int(seed_edge[0]), int(seed_edge[1]))
    cmap: dict[Diagonal, int] = {seed: seed_colour}
    start = ang.face_with_edge(seed)
    todo = [start]
    done = set()
    while todo:
        f = todo.pop()
        if f in done:
            continue
        done.add(f)
        cyc = _face_edge_cycle(f)
        known = next(t for t, e in enumerate(cyc) if e in cmap)
        base = cmap[cyc[known]]
        for off in range(1, ang.m):
            e = cyc[(known + off) % ang.m]
            cmap[e] = (base - 1 + off) % ang.m + 1
        for e in cyc:
            if e in ang.diagonal_faces:
                f1, f2 = ang.diagonal_faces[e]
                todo.append(f2 if f1 == f else f1)
    return ColouredAngulation(ang, tuple(cmap.items()))


def all_colourings(ang: MAngulation) -> list[ColouredAngulation]:
    """Exactly m colourings exist per angulation, one per seed colour."""
    seed = (1, 2)
    return [colour_from_seed(ang, seed, c) for c in range(1, ang.m + 1)]


# -- rotation machinery ------------------------------------------------------------

def _primitive_rotate(n: int, diags: set[Diagonal], d: Diagonal) -> Diagonal:
    """Rotate diagonal d one step anticlockwise inside the (2m-2)-gon obtained
    by removing it, mutating diags; returns the new diagonal."""
    d = _norm_edge(*d)
    if d not in diags:
        raise NotADiagonal(f"{d} is not a diagonal of the dissection")
    a, b = d
    others = [x for x in diags if x != d]
    span1 = tuple(range(a, b + 1))
    span2 = tuple(range(b, n + 1)) + tuple(range(1, a + 1))
    f1 = next(f for f in _split_faces(span1, others) if a in f and b in f)
    f2 = next(f for f in _split_faces(span2, others) if a in f and b in f)
    merged = sorted(set(f1) | set(f2))
    pos = {v: idx for idx, v in enumerate(merged)}
    ln = len(merged)
    new_d = _norm_edge(merged[(pos[a] - 1) % ln], merged[(pos[b] - 1) % ln])
    diags.remove(d)
    diags.add(new_d)
    return new_d


def diagonal_rotate(ang: MAngulation, diag: Sequence[int]) -> MAngulation:
    """One anticlockwise rotation of a single diagonal (a mutation step)."""
    diags = set(ang.diagonals)
    _primitive_rotate(ang.n, diags, _norm_edge(int(diag[0]), int(diag[1])))
    return MAngulation(ang.m, ang.k, tuple(sorted(diags)))


def _contiguous_run(region: tuple[int, ...], face: Face) -> list[int]:
    """Order the face's vertices along the region cycle; the face must occupy
    contiguous region positions except across its single internal edge."""
    pos = {v: idx for idx, v in enumerate(region)}
    ln = len(region)
    posset = {pos[v] for v in face}
    start = next(p for p in posset if (p - 1) % ln not in posset)
    return [region[(start + t) % ln] for t in range(len(face))]


def _rotate_region(
    n: int, m: int, diags: set[Diagonal], region: tuple[int, ...], seq: list[Diagonal]
) -> None:
    """Rotate the dissection induced on a region one vertex step anticlockwise
    (in the region's own cycle), realized as primitive diagonal rotations
    appended to seq.

    Recursive scheme: pick a face F with a single internal edge, rotate the
    fan of diagonals at F's clockwise-first corner (farthest first), rotate
    the fan of the remainder back one step clockwise, then recurse on the
    region minus the moved face."""
    pos = {v: idx for idx, v in enumerate(region)}
    ln = len(region)

    def adjacent(a: int, b: int) -> bool:
        d = abs(pos[a] - pos[b])
        return d == 1 or d == ln - 1

    def reg_pred(v: int) -> int:
        return region[(pos[v] - 1) % ln]

    internal = [d for d in diags if d[0] in pos and d[1] in pos and not adjacent(*d)]
    if not internal:
        return
    expected = {_norm_edge(reg_pred(a), reg_pred(b)) for a, b in internal}
    faces = _split_faces(region, internal)
    intset = set(internal)
    boundary_faces = [
        f for f in faces if sum(1 for e in _face_edge_cycle(f) if e in intset) == 1
    ]
    F = min(boundary_faces)
    run = _contiguous_run(region, F)
    i = run[0]
    e = _norm_edge(run[0], run[-1])

    def cdist(d: Diagonal, centre: int) -> int:
        other = d[1] if d[0] == centre else d[0]
        return (pos[other] - pos[centre]) % ln

    fan = [d for d in internal if i in d]
    moved: dict[Diagonal, Diagonal] = {}
    for d in sorted(fan, key=lambda d: -cdist(d, i)):
        moved[d] = _primitive_rotate(n, diags, d)
        seq.append(d)
    i_prev = reg_pred(i)
    back = [moved[d] for d in fan if d != e]
    # clockwise rotation of the remaining fan: nearest first, m-2 primitive
    # anticlockwise steps per diagonal
    for d in sorted(back, key=lambda d: cdist(d, i_prev)):
        cur = d
        for _ in range(m - 2):
            seq.append(cur)
            cur = _primitive_rotate(n, diags, cur)
    removed = set(run[: m - 2])
    sub = tuple(v for v in region if v not in removed)
    _rotate_region(n, m, diags, sub, seq)
    got = {d for d in diags if d[0] in pos and d[1] in pos and not adjacent(*d)}
    assert got == expected, f"region rotation drifted on {region}"


def _shift_vertex(v: int, t: int, n: int) -> int:
    return (v - 1 + t) % n + 1


def shift(ang: MAngulation, t: int) -> MAngulation:
    """Rotate the whole angulation by t vertex steps (positive = clockwise)."""
    n = ang.n
    return MAngulation(
        ang.m,
        ang.k,
        tuple(_norm_edge(_shift_vertex(a, t, n), _shift_vertex(b, t, n)) for a, b in ang.diagonals),
    )


def rotate_one_step(ang: MAngulation) -> tuple[MAngulation, tuple[Diagonal, ...]]:
    """The angulation rotated one vertex step anticlockwise (every diagonal
    [i,j] becomes [i-1,j-1] mod n), together with the sequence of primitive
    diagonal rotations realizing it."""
    diags = set(ang.diagonals)
    seq: list[Diagonal] = []
    _rotate_region(ang.n, ang.m, diags, tuple(range(1, ang.n + 1)), seq)
    result = MAngulation(ang.m, ang.k, tuple(sorted(diags)))
    expected = shift(ang, -1)
    assert result == expected, f"rotation realization drifted: {result} != {expected}"
    return result, tuple(seq)


def boundary_face_count(ang: MAngulation) -> int:
    """Number of faces with exactly m-1 polygon-boundary sides."""
    count = 0
    for f in ang.faces:
        sides = sum(1 for e in _face_edge_cycle(f) if ang.is_boundary(e))
        if sides == ang.m - 1:
            count += 1
    return count


# -- canonical rotation --------------------------------------------------------------

def _rotate_coloured(cang: ColouredAngulation, t: int) -> ColouredAngulation:
    n = cang.ang.n
    ang = shift(cang.ang, t)
    colours = tuple(
        (_norm_edge(_shift_vertex(a, t, n), _shift_vertex(b, t, n)), c)
        for (a, b), c in cang.colours
    )
    return ColouredAngulation(ang, colours)


def _rotate_face(f: Face, t: int, n: int) -> Face:
    return tuple(sorted(_shift_vertex(v, t, n) for v in f))


def canonical_rotation(obj):
    """The representative minimizing the JSON encoding over all n rotations;
    accepts any of the four angulation types."""
    if isinstance(obj, MAngulation):
        cands = [shift(obj, t) for t in range(obj.n)]
    elif isinstance(obj, ColouredAngulation):
        cands = [_rotate_coloured(obj, t) for t in range(obj.ang.n)]
    elif isinstance(obj, RootedAngulation):
        n = obj.base.ang.n
        cands = [
            RootedAngulation(_rotate_coloured(obj.base, t), _rotate_face(obj.root, t, n))
            for t in range(n)
        ]
    elif isinstance(obj, LabelledAngulation):
        n = obj.base.ang.n
        cands = [
            LabelledAngulation(
                _rotate_coloured(obj.base, t),
                tuple((_rotate_face(f, t, n), l) for f, l in obj.labels),
            )
            for t in range(n)
        ]
    else:
        raise TypeError(f"cannot canonicalize {type(obj)}")
    return min(cands, key=lambda x: x.to_json())


# -- snakes and induction --------------------------------------------------------------

@dataclass(frozen=True)
class SnakePolygon:
    """A maximal run of faces glued along diagonals coloured S_i or S_j only,
    listed in path order (a single face with no such diagonal is a valid
    snake)."""

    i: int
    j: int
    faces: tuple[Face, ...]

    @property
    def face_set(self) -> frozenset[Face]:
        return frozenset(self.faces)


def find_snakes(cang: ColouredAngulation, i: int, j: int) -> list[SnakePolygon]:
    """All maximal snakes for the colour pair (i, j); they partition the faces
    and correspond to the maximal S_i-S_j chains of the dual tree."""
    if not (1 <= i < j <= cang.m):
        raise SymbolOutOfRange(f"need 1 <= i < j <= m, got ({i},{j})")
    links: dict[Face, list[Face]] = {f: [] for f in cang.ang.faces}
    for d, (f1, f2) in cang.ang.diagonal_faces.items():
        if cang.colour[d] in (i, j):
            links[f1].append(f2)
            links[f2].append(f1)
    snakes = []
    seen: set[Face] = set()
    for f in cang.ang.faces:
        if f in seen:
            continue
        comp = {f}
        stack = [f]
        while stack:
            x = stack.pop()
            for y in links[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        ends = sorted(x for x in comp if len(links[x]) <= 1)
        path = [ends[0]]
        prev = None
        while True:
            nxt = [y for y in links[path[-1]] if y != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        snakes.append(SnakePolygon(i, j, tuple(path)))
    snakes.sort(key=lambda s: s.faces[0])
    return snakes


def _face_after_rotation(face: Face, merged: list[int]) -> Face:
    pos = {v: idx for idx, v in enumerate(merged)}
    ln = len(merged)
    return tuple(sorted(merged[(pos[v] - 1) % ln] for v in face))


def _component_region(n: int, edge: Diagonal, away_from: Face) -> tuple[int, int]:
    """The clockwise arc (start, end) of the subpolygon hanging off `edge` on
    the side not containing the face `away_from`; returned as polygon vertices
    with the arc running clockwise from start to end."""
    a, b = edge
    inner = set(range(a + 1, b))  # interior of the ascending span
    rest = set(range(1, n + 1)) - inner - {a, b}
    others = [v for v in away_from if v not in edge]
    if all(v in rest for v in others):
        return (a, b)  # component occupies the ascending span a..b
    return (b, a)  # component occupies the wrap-around span b..n..a


def _induct_core(
    cang: ColouredAngulation, snake: SnakePolygon, i: int, realize_rotations: bool
) -> tuple[ColouredAngulation, dict[Face, Face]]:
    """Shared implementation of snake induction; returns the new coloured
    angulation and the map old face -> new face."""
    m, n = cang.m, cang.ang.n
    j = i + 1
    if not (1 <= i <= m - 1):
        raise SymbolOutOfRange(f"R_{i} needs 1 <= i <= m-1")
    match = [s for s in find_snakes(cang, i, j) if s.face_set == snake.face_set]
    if not match:
        raise NotASnake("argument is not a maximal snake of this angulation")
    snake = match[0]
    faces = list(snake.faces)
    l = len(faces)
    face_map: dict[Face, Face] = {f: f for f in cang.ang.faces}
    if l == 1:
        return cang, face_map

    def shared_diag(f1: Face, f2: Face) -> Diagonal:
        common = sorted(set(f1) & set(f2))
        assert len(common) == 2
        return (common[0], common[1])

    diags_between = [shared_diag(faces[t], faces[t + 1]) for t in range(l - 1)]
    cols = [cang.colour[d] for d in diags_between]
    work = set(cang.ang.diagonals)

    # Step 1: rotate every S_{i+1}-coloured snake diagonal one step
    # anticlockwise; the two adjacent faces travel with the rotation.
    snake_diag_final: list[Diagonal] = list(diags_between)
    for t, d in enumerate(diags_between):
        if cols[t] != j:
            continue
        f1, f2 = faces[t], faces[t + 1]
        merged = sorted(set(f1) | set(f2))
        new_d = _primitive_rotate(n, work, d)
        snake_diag_final[t] = new_d
        face_map[f1] = _face_after_rotation(f1, merged)
        face_map[f2] = _face_after_rotation(f2, merged)

    # Step 2: around each snake end whose internal edge keeps its position
    # (colour S_i before the exchange), every hanging subpolygon moves one
    # edge slot anticlockwise.
    ends = []
    if cols[0] == i:
        ends.append((faces[0], diags_between[0]))
    if cols[-1] == i:
        ends.append((faces[-1], diags_between[-1]))
    for M, e in ends:
        cyc = _face_edge_cycle(M)
        a_idx = cyc.index(e)
        slot_edges = [cyc[(a_idx + r) % m] for r in range(1, m)]
        occupants: list[tuple[int, int, int] | None] = []
        for edge in slot_edges:
            if edge in work:
                start, end = _component_region(n, edge, M)
                occupants.append((start, end, (end - start) % n))
            else:
                occupants.append(None)
        if all(o is None for o in occupants):
            continue
        if realize_rotations:
            # sequential whole-subpolygon rotations, ascending slot order so
            # each component is still attached to M's current face when its
            # turn comes
            cur_face = M
            for occ in occupants:
                if occ is None:
                    continue
                start, end, _ = occ
                arc = [start]
                v = start
                while v != end:
                    v = v % n + 1
                    arc.append(v)
                region = tuple(sorted(set(arc) | set(cur_face)))
                comp_faces = [
                    f for f in _current_faces(n, work) if set(f) <= set(arc)
                ]
                seq: list[Diagonal] = []
                _rotate_region(n, m, work, region, seq)
                pos = {v: idx for idx, v in enumerate(region)}
                ln = len(region)

                def pred_shift(f: Face) -> Face:
                    return tuple(sorted(region[(pos[v] - 1) % ln] for v in f))

                shifts = {f: pred_shift(f) for f in comp_faces + [cur_face]}
                for old, new in face_map.items():
                    if new in shifts:
                        face_map[old] = shifts[new]
                cur_face = shifts[cur_face]
        else:
            # simultaneous slot shift: the occupant of slot r+1 moves to slot r
            V = _contiguous_m_cycle(M, e)
            cursor = V[1]  # e runs from V[0] to V[1] in clockwise face order
            drop: set[Diagonal] = set()
            add: set[Diagonal] = set()
            deltas: list[tuple[int, int, int]] = []  # (old_start, old_end, delta)
            new_m_verts = [V[0], V[1]]
            for occ in occupants[1:] + [None]:
                if occ is None:
                    cursor = cursor % n + 1
                    new_m_verts.append(cursor)
                    continue
                start, end, ln_arc = occ
                delta = (cursor - start) % n
                new_end = (cursor - 1 + ln_arc) % n + 1
                drop.add(_norm_edge(start, end))
                for d in work:
                    if d == _norm_edge(start, end):
                        continue
                    if _in_arc(d[0], start, end, n) and _in_arc(d[1], start, end, n):
                        drop.add(d)
                        add.add(
                            _norm_edge(
                                _shift_vertex(d[0], delta, n),
                                _shift_vertex(d[1], delta, n),
                            )
                        )
                add.add(_norm_edge(cursor, new_end))
                deltas.append((start, end, delta))
                cursor = new_end
                new_m_verts.append(cursor)
            assert cursor == V[0], "slot shift did not close up around the face"
            for old, new in face_map.items():
                for start, end, delta in deltas:
                    if all(_in_arc(v, start, end, n) for v in new):
                        face_map[old] = tuple(
                            sorted(_shift_vertex(v, delta, n) for v in new)
                        )
                        break
            face_map[M] = tuple(sorted(set(new_m_verts)))
            work -= drop
            work |= add

    new_ang = MAngulation(m, cang.k, tuple(sorted(work)))
    seed = snake_diag_final[0]
    seed_colour = i if cols[0] == j else j
    result = colour_from_seed(new_ang, seed, seed_colour)
    assert set(face_map.values()) == set(new_ang.faces), "face tracking lost a face"
    return result, face_map


def _in_arc(v: int, start: int, end: int, n: int) -> bool:
    """v lies on the clockwise arc start..end (inclusive)."""
    return (v - start) % n <= (end - start) % n


def _current_faces(n: int, diags: set[Diagonal]) -> list[Face]:
    return _split_faces(tuple(range(1, n + 1)), diags)


def _contiguous_m_cycle(face: Face, e: Diagonal) -> list[int]:
    """The face's clockwise vertex walk rotated so that edge e runs from V[0]
    to V[1]; slot r of the face is then the edge (V[r], V[r+1])."""
    m = len(face)
    idx = _face_edge_cycle(face).index(e)
    return [face[(idx + t) % m] for t in range(m)]


def induct_R_on_angulation(
    cang: ColouredAngulation,
    snake: SnakePolygon,
    i: int,
    realize_rotations: bool = False,
) -> ColouredAngulation:
    """Snake induction on a diagonal-coloured angulation (the polygon form of
    R_i on the dual tree)."""
    result, _ = _induct_core(cang, snake, i, realize_rotations)
    return result


def induct_R_on_labelled_angulation(
    lang: LabelledAngulation,
    snake: SnakePolygon,
    i: int,
    realize_rotations: bool = False,
) -> LabelledAngulation:
    """Snake induction on an m-gon-labelled angulation; labels travel with
    their faces."""
    result, face_map = _induct_core(lang.base, snake, i, realize_rotations)
    labels = tuple((face_map[f], l) for f, l in lang.labels)
    return LabelledAngulation(result, labels)


# -- dual tree -----------------------------------------------------------------------

def labelled_dual(
    cang: ColouredAngulation, labels: dict[Face, int] | None = None
) -> tuple[ColouredTree, dict[Face, int]]:
    """The dual tree of a coloured angulation: one vertex per face, edges
    coloured by the shared diagonal's colour.  Faces are labelled by `labels`
    or 1..k in sorted face order."""
    if labels is None:
        labels = {f: idx + 1 for idx, f in enumerate(cang.ang.faces)}
    edges = []
    for d, (f1, f2) in cang.ang.diagonal_faces.items():
        edges.append((labels[f1], labels[f2], cang.colour[d]))
    return ColouredTree(cang.k, cang.m, tuple(edges)), labels


def dual_tree_dot(cang: ColouredAngulation) -> str:
    """DOT text of the dual tree, faces as nodes, edges labelled by colour."""
    lines = ["graph dual_tree {"]
    for f in cang.ang.faces:
        lines.append(f'  "{_face_key(f)}";')
    for d, (f1, f2) in sorted(cang.ang.diagonal_faces.items()):
        lines.append(
            f'  "{_face_key(f1)}" -- "{_face_key(f2)}" [label="S{cang.colour[d]}"];'
        )
    lines.append("}")
    return "\n".join(lines)
