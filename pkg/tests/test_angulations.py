import itertools

import pytest

from clustercomb.angulations import (
    ColouredAngulation,
    LabelledAngulation,
    MAngulation,
    RootedAngulation,
    all_colourings,
    boundary_face_count,
    canonical_rotation,
    colour_from_seed,
    diagonal_rotate,
    dual_tree_dot,
    find_snakes,
    induct_R_on_angulation,
    induct_R_on_labelled_angulation,
    labelled_dual,
    rotate_one_step,
    shift,
    validate_angulation,
)
from clustercomb.bijections import labelled_angulation_to_tree
from clustercomb.core import maximal_chains
from clustercomb.counting import enumerate_angulations
from clustercomb.errors import (
    BadDiagonalModulus,
    DiagonalsCross,
    NotADiagonal,
    NotASnake,
    WrongDiagonalCount,
)
from clustercomb.induction import apply_R


def test_validate_examples():
    assert validate_angulation({"m": 3, "k": 1, "diagonals": []}).n == 3
    assert validate_angulation({"m": 3, "k": 2, "diagonals": [[1, 3]]}).faces == (
        (1, 2, 3),
        (1, 3, 4),
    )
    with pytest.raises(BadDiagonalModulus):
        MAngulation(4, 2, ((1, 3),))
    assert MAngulation(4, 2, ((1, 4),)).n == 6
    with pytest.raises(DiagonalsCross):
        MAngulation(3, 3, ((1, 3), (2, 4)))
    with pytest.raises(WrongDiagonalCount):
        MAngulation(3, 3, ((1, 3),))


def test_colour_from_seed():
    tri = MAngulation(3, 1, ())
    ca = colour_from_seed(tri, (1, 2), 1)
    assert ca.colour == {(1, 2): 1, (2, 3): 2, (1, 3): 3}
    sq = MAngulation(3, 2, ((1, 3),))
    ca = colour_from_seed(sq, (1, 3), 1)
    assert len(ca.colour) == 5  # all four sides determined
    assert len({c.to_json() for c in all_colourings(sq)}) == 3


def test_diagonal_rotate():
    sq = MAngulation(3, 2, ((1, 3),))
    r = diagonal_rotate(sq, (1, 3))
    assert r.diagonals == ((2, 4),)
    assert diagonal_rotate(r, (2, 4)) == sq  # m=3: rotating twice returns
    with pytest.raises(NotADiagonal):
        diagonal_rotate(sq, (2, 4))
    # 2m-2 successive rotations return the original
    for m in (3, 4):
        ang = next(iter_angs(2, m))
        cur = ang
        d = cur.diagonals[0]
        for _ in range(2 * m - 2):
            nxt = diagonal_rotate(cur, d)
            d = (set(nxt.diagonals) - set(cur.diagonals)).pop() if nxt.diagonals != cur.diagonals else d
            cur = nxt
        assert cur == ang


def test_diagonal_rotate_inverse_by_repetition():
    # repeating the rotation 2m-3 more times undoes a single step
    for m in (3, 4):
        for ang in itertools.islice(enumerate_angulations(3, m), 10):
            for d0 in ang.diagonals:
                cur = diagonal_rotate(ang, d0)
                d = (set(cur.diagonals) - set(ang.diagonals)).pop() if cur != ang else d0
                for _ in range(2 * m - 3):
                    nxt = diagonal_rotate(cur, d)
                    d = (set(nxt.diagonals) - set(cur.diagonals)).pop() if nxt != cur else d
                    cur = nxt
                assert cur == ang


def iter_angs(k, m):
    return enumerate_angulations(k, m)


def test_rotate_one_step_square():
    sq = MAngulation(3, 2, ((1, 3),))
    res, seq = rotate_one_step(sq)
    assert res.diagonals == ((2, 4),)
    assert seq == ((1, 3),)


def test_rotate_one_step_fan_sequence():
    fan = MAngulation(4, 4, ((1, 4), (1, 6), (1, 8)))
    res, seq = rotate_one_step(fan)
    assert res == shift(fan, -1)
    assert seq[:3] == ((1, 8), (1, 6), (1, 4))


def test_rotate_one_step_is_index_shift():
    for m, kmax in ((3, 5), (4, 3), (5, 2), (6, 2)):
        for k in range(1, kmax + 1):
            for ang in enumerate_angulations(k, m):
                res, seq = rotate_one_step(ang)
                assert res == shift(ang, -1)
                cur = ang
                for d in seq:
                    cur = diagonal_rotate(cur, d)
                assert cur == res


def test_rotate_full_turn_is_identity():
    for ang in enumerate_angulations(4, 3):
        cur = ang
        for _ in range(ang.n):
            cur, _seq = rotate_one_step(cur)
        assert cur == ang


def test_boundary_face_count():
    assert boundary_face_count(MAngulation(3, 2, ((1, 3),))) == 2
    fan = MAngulation(4, 4, ((1, 4), (1, 6), (1, 8)))
    assert boundary_face_count(fan) == 2
    for m, kmax in ((3, 5), (4, 5)):
        for k in range(2, kmax + 1):
            for ang in enumerate_angulations(k, m):
                assert boundary_face_count(ang) >= 2


def test_canonical_rotation():
    tri = MAngulation(3, 1, ())
    assert canonical_rotation(tri) == tri
    sq = MAngulation(3, 2, ((2, 4),))
    assert canonical_rotation(sq).diagonals == ((1, 3),)
    for ang in enumerate_angulations(3, 3):
        canon = canonical_rotation(ang)
        for t in range(ang.n):
            assert canonical_rotation(shift(ang, t)) == canon


def test_canonical_rotation_coloured_types():
    sq = MAngulation(3, 2, ((1, 3),))
    ca = colour_from_seed(sq, (1, 3), 2)
    assert canonical_rotation(canonical_rotation(ca)) == canonical_rotation(ca)
    ra = RootedAngulation(ca, (1, 2, 3))
    assert canonical_rotation(ra).base.ang.k == 2
    la = LabelledAngulation(ca, (((1, 2, 3), 1), ((1, 3, 4), 2)))
    assert canonical_rotation(la).base.ang.k == 2


def test_find_snakes():
    tri = colour_from_seed(MAngulation(3, 1, ()), (1, 2), 1)
    snakes = find_snakes(tri, 1, 2)
    assert len(snakes) == 1 and snakes[0].faces == ((1, 2, 3),)
    sq = MAngulation(3, 2, ((1, 3),))
    ca = colour_from_seed(sq, (1, 3), 1)  # the diagonal is coloured S_1
    snakes = find_snakes(ca, 1, 2)
    assert len(snakes) == 1 and len(snakes[0].faces) == 2


def test_snakes_match_dual_chains():
    # snakes correspond to the maximal chains of the labelled dual tree
    for k in range(1, 5):
        for ang in enumerate_angulations(k, 3):
            for c in (1, 2, 3):
                ca = colour_from_seed(ang, (1, 2), c)
                tree, labels = labelled_dual(ca)
                for i, j in ((1, 2), (1, 3), (2, 3)):
                    snake_sets = {
                        frozenset(labels[f] for f in s.faces)
                        for s in find_snakes(ca, i, j)
                    }
                    chain_sets = {c2.vertex_set for c2 in maximal_chains(tree, i, j)}
                    assert snake_sets == chain_sets


def test_induct_identity_on_single_face_snake():
    tri = colour_from_seed(MAngulation(3, 1, ()), (1, 2), 1)
    s = find_snakes(tri, 1, 2)[0]
    assert induct_R_on_angulation(tri, s, 1) == tri


def test_induct_two_triangles():
    sq = MAngulation(3, 2, ((1, 3),))
    # diagonal coloured S_1: R_1 swaps nothing, the diagonal is recoloured S_2
    ca = colour_from_seed(sq, (1, 3), 1)
    s = find_snakes(ca, 1, 2)[0]
    out = induct_R_on_angulation(ca, s, 1)
    assert out.ang.diagonals == ((1, 3),)
    assert out.colour[(1, 3)] == 2
    # diagonal coloured S_2: R_1 rotates it and recolours it S_1
    cb = colour_from_seed(sq, (1, 3), 2)
    s = find_snakes(cb, 1, 2)[0]
    out = induct_R_on_angulation(cb, s, 1)
    assert out.ang.diagonals == ((2, 4),)
    assert out.colour[(2, 4)] == 1
    # both match R_1 on the labelled dual
    for start in (ca, cb):
        la = LabelledAngulation(start, (((1, 2, 3), 1), ((1, 3, 4), 2)))
        s = find_snakes(start, 1, 2)[0]
        got = labelled_angulation_to_tree(induct_R_on_labelled_angulation(la, s, 1))
        want = apply_R(labelled_angulation_to_tree(la), (1, 2), 1, 2)
        assert got == want
    with pytest.raises(NotASnake):
        induct_R_on_angulation(ca, find_snakes(ca, 2, 3)[0], 1)


def test_induct_commutes_with_tree_induction():
    for k in range(1, 5):
        for ang in enumerate_angulations(k, 3):
            for c in (1, 2, 3):
                ca = colour_from_seed(ang, (1, 2), c)
                la = LabelledAngulation(
                    ca, tuple((f, idx + 1) for idx, f in enumerate(ca.ang.faces))
                )
                t0 = labelled_angulation_to_tree(la)
                for i in (1, 2):
                    for s in find_snakes(ca, i, i + 1):
                        out = induct_R_on_labelled_angulation(la, s, i)
                        left = labelled_angulation_to_tree(out)
                        chain = frozenset(la.label[f] for f in s.faces)
                        right = apply_R(t0, chain, i, i + 1)
                        assert left == right
                        # the rotation-sequence realization agrees
                        out2 = induct_R_on_labelled_angulation(
                            la, s, i, realize_rotations=True
                        )
                        assert out2 == out


def test_induct_labelled_two_triangles():
    sq = MAngulation(3, 2, ((1, 3),))
    ca = colour_from_seed(sq, (1, 3), 1)
    la = LabelledAngulation(ca, (((1, 2, 3), 1), ((1, 3, 4), 2)))
    s = find_snakes(ca, 1, 2)[0]
    out = induct_R_on_labelled_angulation(la, s, 1)
    # labels are transported with the faces across the rotation
    tree_before = labelled_angulation_to_tree(la)
    tree_after = labelled_angulation_to_tree(out)
    assert tree_after == apply_R(tree_before, (1, 2), 1, 2)


def test_induct_labelled_all_labellings_k3():
    # the labelled commuting square over every labelling, colouring and snake
    for k in (1, 2, 3):
        for ang in enumerate_angulations(k, 3):
            for c in (1, 2, 3):
                ca = colour_from_seed(ang, (1, 2), c)
                faces = ca.ang.faces
                for perm in itertools.permutations(range(1, k + 1)):
                    la = LabelledAngulation(ca, tuple(zip(faces, perm)))
                    t0 = labelled_angulation_to_tree(la)
                    for i in (1, 2):
                        for s in find_snakes(ca, i, i + 1):
                            out = induct_R_on_labelled_angulation(la, s, i)
                            left = labelled_angulation_to_tree(out)
                            chain = frozenset(la.label[f] for f in s.faces)
                            assert left == apply_R(t0, chain, i, i + 1)


def test_induct_m4_with_multiple_components():
    # end faces with two hanging subpolygons exercise the slot shift fully
    from clustercomb.angulations import _face_edge_cycle

    def end_component_counts(ca, s, i):
        faces = s.faces
        if len(faces) < 2:
            return []

        def shared(f1, f2):
            common = sorted(set(f1) & set(f2))
            return (common[0], common[1])

        dcols = [ca.colour[shared(faces[t], faces[t + 1])] for t in range(len(faces) - 1)]
        ends = []
        if dcols[0] == i:
            ends.append((faces[0], shared(faces[0], faces[1])))
        if dcols[-1] == i:
            ends.append((faces[-1], shared(faces[-2], faces[-1])))
        diags = set(ca.ang.diagonals)
        return [
            sum(1 for e in _face_edge_cycle(M) if e != d and e in diags)
            for M, d in ends
        ]

    two_component_cases = 0
    for ang in enumerate_angulations(4, 4):
        for c in (1, 2, 3, 4):
            ca = colour_from_seed(ang, (1, 2), c)
            la = LabelledAngulation(
                ca, tuple((f, idx + 1) for idx, f in enumerate(ca.ang.faces))
            )
            t0 = labelled_angulation_to_tree(la)
            for i in (1, 2, 3):
                for s in find_snakes(ca, i, i + 1):
                    out = induct_R_on_labelled_angulation(la, s, i)
                    assert labelled_angulation_to_tree(out) == apply_R(
                        t0, frozenset(la.label[f] for f in s.faces), i, i + 1
                    )
                    out2 = induct_R_on_labelled_angulation(la, s, i, realize_rotations=True)
                    assert out2 == out
                    if any(n >= 2 for n in end_component_counts(ca, s, i)):
                        two_component_cases += 1
    assert two_component_cases >= 30


def test_json_and_dot():
    sq = MAngulation(3, 2, ((1, 3),))
    assert MAngulation.from_json(sq.to_json()) == sq
    ca = colour_from_seed(sq, (1, 3), 1)
    assert ColouredAngulation.from_json(ca.to_json()) == ca
    ra = RootedAngulation(ca, (1, 2, 3))
    assert RootedAngulation.from_json(ra.to_json()) == ra
    la = LabelledAngulation(ca, (((1, 2, 3), 2), ((1, 3, 4), 1)))
    assert LabelledAngulation.from_json(la.to_json()) == la
    dot = dual_tree_dot(ca)
    assert 'label="S1"' in dot
