import pytest

from clustercomb.core import (
    CircularOrder,
    canonical_unlabelled,
    circular_order,
    maximal_chains,
    validate_tree,
)
from clustercomb.counting import enumerate_trees, t_count
from clustercomb.errors import (
    DimensionMismatch,
    HypothesisViolated,
    NotMaximalChain,
    WrongColourSet,
)
from clustercomb.induction import (
    InductionStep,
    apply_L,
    apply_R,
    apply_steps,
    chain_order,
    decompose_Rij,
    equivalent,
    normal_form,
    orbit,
    sigma_invariance_witness,
)


def test_apply_R_edgeless_chain_is_identity():
    star = validate_tree([(1, 2, 1), (1, 3, 2), (1, 4, 3)], 4, 3)
    assert apply_R(star, (4,), 1, 2) == star


def test_apply_R_concrete_path():
    t = validate_tree([(1, 2, 1), (2, 3, 2)], 3, 3)
    r = apply_R(t, (1, 2, 3), 1, 2)
    # the path becomes 1 -S_2- 3 -S_1- 2
    assert set(r.edges) == {(1, 3, 2), (2, 3, 1)}


def test_apply_R_general_chain_rewriting():
    # a_1 -S_i- a_2 -S_j- a_3 -S_i- a_4 becomes a_1 -S_j- a_3 -S_i- a_2 -S_j- a_4
    t = validate_tree([(1, 2, 1), (2, 3, 3), (3, 4, 1)], 4, 3)
    r = apply_R(t, (1, 2, 3, 4), 1, 3)
    assert set(r.edges) == {(1, 3, 3), (2, 3, 1), (2, 4, 3)}


def test_apply_L_inverts_apply_R():
    for t in enumerate_trees(4, 3):
        for i in (1, 2):
            for c in maximal_chains(t, i, i + 1):
                r = apply_R(t, c, i)
                assert apply_L(r, frozenset(c.vertices), i) == t
    t = validate_tree([(1, 3, 2), (2, 3, 1)], 3, 3)
    assert set(apply_L(t, (1, 2, 3), 1, 2).edges) == {(1, 2, 1), (2, 3, 2)}


def test_apply_R_rejects_bad_chain():
    t = validate_tree([(1, 2, 1), (2, 3, 2)], 3, 3)
    with pytest.raises(NotMaximalChain):
        apply_R(t, (1, 2), 1, 2)  # not maximal: 3 is attached by S_2


def test_subtrees_reattach_by_label():
    # the complement subtree follows its attachment label across the swap
    t = validate_tree([(1, 2, 1), (2, 3, 2), (2, 4, 3)], 4, 3)
    r = apply_R(t, (1, 2, 3), 1, 2)
    # chain 1-2-3 maps to 1 -S_2- 3 -S_1- 2; vertex 4 stays glued to label 2
    assert set(r.edges) == {(1, 3, 2), (2, 3, 1), (2, 4, 3)}


def test_decompose_single_step_when_adjacent():
    t = validate_tree([(1, 2, 1), (2, 3, 2)], 3, 3)
    steps = decompose_Rij(t, (1, 2, 3), 1, 2)
    assert len(steps) == 1 and steps[0] == InductionStep("R", 1, 2, (1, 2, 3))


def test_decompose_equals_direct_R():
    for t in enumerate_trees(4, 3):
        for c in maximal_chains(t, 1, 3):
            if len(c.vertices) == 1:
                continue
            inside = c.vertex_set
            touched = any(
                col == 2 and w not in inside
                for v in c.vertices
                for col, w in t.adjacency[v].items()
            )
            if touched:
                with pytest.raises(HypothesisViolated):
                    decompose_Rij(t, c, 1, 3)
            else:
                steps = decompose_Rij(t, c, 1, 3)
                assert apply_steps(t, steps) == apply_R(t, c, 1, 3)
                assert all(s.j == s.i + 1 for s in steps)


def test_decompose_hypothesis_violated_witness():
    t = validate_tree([(1, 2, 1), (1, 3, 2)], 3, 3)
    with pytest.raises(HypothesisViolated):
        decompose_Rij(t, (1, 2), 1, 3)


def test_normal_form_already_normal():
    t = validate_tree([(1, 2, 1), (2, 3, 3)], 3, 3)
    nf, steps = normal_form(t)
    assert nf == t and steps == []


def test_normal_form_exhaustive_k4_m3():
    for k in range(1, 5):
        for t in enumerate_trees(k, 3):
            nf, steps = normal_form(t)
            assert all(c in (1, 3) for _, _, c in nf.edges)
            assert circular_order(nf) == circular_order(t)
            assert apply_steps(t, steps) == nf
            assert all(s.j == s.i + 1 for s in steps)


def test_normal_form_m4():
    for t in list(enumerate_trees(4, 4))[::37]:
        nf, steps = normal_form(t)
        assert all(c in (1, 4) for _, _, c in nf.edges)
        assert circular_order(nf) == circular_order(t)
        assert apply_steps(t, steps) == nf


def test_orbit_sizes():
    t1 = validate_tree([], 1, 3)
    assert orbit(t1) == frozenset([t1])
    t3 = next(enumerate_trees(3, 3, CircularOrder.descending(3)))
    assert len(orbit(t3)) == t_count(3, 3) == 9
    t4 = next(enumerate_trees(4, 3, CircularOrder.descending(4)))
    assert len(orbit(t4)) == t_count(4, 3) == 28


def test_orbit_equals_sigma_class():
    for k, m in ((3, 3), (3, 4)):
        trees = list(enumerate_trees(k, m))
        by_sigma = {}
        for t in trees:
            by_sigma.setdefault(circular_order(t).perm, []).append(t)
        for sig, cls in by_sigma.items():
            orb = orbit(cls[0])
            assert orb == frozenset(cls)
            assert len(orb) == t_count(k, m)


def test_equivalent():
    t = validate_tree([(1, 2, 1), (2, 3, 2)], 3, 3)
    assert equivalent(t, t)
    other = validate_tree([(1, 2, 2), (2, 3, 1)], 3, 3)
    assert circular_order(other) != circular_order(t)
    assert not equivalent(t, other)
    with pytest.raises(DimensionMismatch):
        equivalent(t, validate_tree([(1, 2, 1)], 2, 3))


def test_equivalent_cross_checks_orbit_membership():
    trees = list(enumerate_trees(3, 3))
    orb = orbit(trees[0])
    for t in trees:
        assert equivalent(trees[0], t) == (t in orb)


def test_witness_none_for_adjacent():
    assert sigma_invariance_witness(4, 3, 1, 2) is None
    assert sigma_invariance_witness(4, 3, 2, 3) is None


def test_witness_none_on_middle_free_chains():
    assert sigma_invariance_witness(5, 3, 1, 3, require_middle_free=True) is None


def test_witness_exists_for_1_3_at_k5():
    # non-adjacent induction breaks the circular order already at k=5
    found = sigma_invariance_witness(5, 3, 1, 3)
    assert found is not None
    tree, chain = found
    assert circular_order(apply_R(tree, chain, 1, 3)) != circular_order(tree)


def test_chain_order():
    t1 = validate_tree([], 1, 3)
    assert chain_order(t1, 1, 3) == 1
    t3 = validate_tree([(1, 2, 1), (2, 3, 3)], 3, 3)
    assert chain_order(t3, 1, 3) == 3
    t4 = validate_tree([(1, 2, 1), (2, 3, 3), (3, 4, 1)], 4, 3)
    assert chain_order(t4, 1, 3) == 4
    with pytest.raises(WrongColourSet):
        chain_order(validate_tree([(1, 2, 2)], 2, 3), 1, 3)
    # other colour pairs and a larger alphabet behave the same
    for i, j in ((1, 4), (2, 4), (1, 2)):
        for k in range(1, 6):
            line = validate_tree(
                [(v, v + 1, i if v % 2 else j) for v in range(1, k)], k, 4
            )
            assert chain_order(line, i, j) == k


def test_normal_form_spot_k5():
    sample = list(enumerate_trees(5, 3))[::211]
    for t in sample:
        nf, steps = normal_form(t)
        assert all(c in (1, 3) for _, _, c in nf.edges)
        assert circular_order(nf) == circular_order(t)
        assert apply_steps(t, steps) == nf


def test_chain_order_even_k_shape_alternation():
    # for even k the unlabelled shape alternates between S and R(S)
    t4 = validate_tree([(1, 2, 1), (2, 3, 3), (3, 4, 1)], 4, 3)
    shapes = []
    cur = t4
    whole = frozenset((1, 2, 3, 4))
    for _ in range(4):
        shapes.append(canonical_unlabelled(cur))
        cur = apply_R(cur, whole, 1, 3)
    assert cur == t4
    assert shapes[0] == shapes[2] and shapes[1] == shapes[3]
    assert shapes[0] != shapes[1]
