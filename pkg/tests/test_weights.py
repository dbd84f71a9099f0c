import pytest
from hypothesis import given

from brauer.geometry import degree
from brauer.partitions import EMPTY, Partition, box_neighbors, partitions_up_to
from brauer.weights import (CIRC, CROSS, WeightDiagram, block_by_moves, case_of, circ_pairs, classify_box_move,
                            order_leq, partition_from_weight, read_by_columns, read_by_rows, same_block,
                            times_pairs, weight_diagram)
from brauer.partitions import king_root_multiplicity
from strategies import deltas, partitions, small_partitions

P = Partition


def test_empty_partition_diagrams():
    assert weight_diagram(EMPTY, 10).labels == ("o",) * 5
    assert weight_diagram(EMPTY, -9).labels == ("x",) * 5
    x = weight_diagram(EMPTY, -10)
    assert x.labels == ("v",) + ("x",) * 5 and x.zero_flag
    assert weight_diagram(EMPTY, 2).text() == "o v v v …"
    assert weight_diagram(EMPTY, 1).labels == ()


def test_odd_delta_vertices_are_half_integers():
    x = weight_diagram(P((2, 1)), 3)
    assert x.vertex(0) == "1/2" and x.pos2(2) == 5


def test_worked_example_round_trip():
    lam = P((10, 10, 9, 9, 8, 5, 3, 3))
    for delta in range(-8, 9):
        x = weight_diagram(lam, delta)
        assert read_by_columns(x) == read_by_rows(x) == lam


@given(partitions(6, 8), deltas)
def test_readings_round_trip(lam, delta):
    x = weight_diagram(lam, delta)
    assert read_by_columns(x) == lam
    assert read_by_rows(x) == lam
    assert partition_from_weight(x) == lam


@given(partitions(6, 8), deltas)
def test_circles_minus_crosses(lam, delta):
    x = weight_diagram(lam, delta)
    assert x.count(CIRC) - x.count(CROSS) == delta // 2


def test_from_labels_normalises():
    x = WeightDiagram.from_labels(["^", "o", "v", "v"], 2)
    assert x.labels == ("v", "o") and x.zero_flag
    with pytest.raises(ValueError):
        WeightDiagram.from_labels(["x"], 2)
    with pytest.raises(ValueError):
        WeightDiagram.from_labels(["q"], 2)


def test_box_move_examples():
    assert classify_box_move(EMPTY, P((1,)), 2) == "iii"
    # e_0((1)) = (1, -1, ...) is already singular, so the step to (1,1) keeps the degree
    assert degree(P((1,)), 0) == degree(P((1, 1)), 0) == 1
    assert case_of(classify_box_move(P((1,)), P((1, 1)), 0)) == "I"
    assert classify_box_move(EMPTY, P((1,)), 1) == "v"
    with pytest.raises(ValueError):
        classify_box_move(EMPTY, P((2,)), 1)


@pytest.mark.parametrize("delta", range(-6, 7))
def test_box_move_case_tracks_degree(delta):
    shift = {"I": 0, "II": 1, "III": -1}
    for lam in partitions_up_to(6):
        for mu in box_neighbors(lam)[0]:
            tag = classify_box_move(lam, mu, delta)
            assert shift[case_of(tag)] == degree(mu, delta) - degree(lam, delta)


@given(small_partitions(8), deltas)
def test_king_witnesses(lam, delta):
    pairs = times_pairs(lam, delta) + circ_pairs(lam, delta)
    assert sum(1 for *_, inside, _ in pairs if inside) == king_root_multiplicity(lam, delta)
    assert all(inside == cond for *_, inside, cond in pairs)


def test_times_pairs_of_empty():
    pairs = times_pairs(EMPTY, -2)
    assert len(pairs) == 1 and not pairs[0][2]


def test_same_block_examples():
    assert same_block(P((2, 1)), P((2, 1)), 3)
    assert not same_block(EMPTY, P((1,)), 2)


@pytest.mark.parametrize("delta", range(-4, 5))
def test_same_block_matches_move_closure(delta):
    parts = list(partitions_up_to(5))
    for lam in parts:
        orbit = block_by_moves(lam, delta, 5)
        for mu in parts:
            assert same_block(lam, mu, delta) == (mu in orbit)


@pytest.mark.parametrize("delta", [-3, -2, 1, 2, 3])
def test_order_is_a_partial_order_on_blocks(delta):
    parts = list(partitions_up_to(5))
    for lam in parts:
        assert order_leq(lam, lam, delta)
        for mu in parts:
            if mu == lam or not same_block(lam, mu, delta):
                continue
            if order_leq(lam, mu, delta):
                assert lam.size <= mu.size
                assert not order_leq(mu, lam, delta)


def test_order_needs_same_block():
    with pytest.raises(ValueError):
        order_leq(EMPTY, P((1,)), 2)
