import random

import pytest

from brauer.caps import (cap_diagram, cap_diagram_of, cap_diagram_random, d_poly, decomposition_matrix,
                         decomposition_number)
from brauer.partitions import EMPTY, Partition, labels, partitions_up_to
from brauer.weights import WeightDiagram, order_leq, same_block, weight_diagram

P = Partition


def caps_of(text, delta=3):
    return cap_diagram_of(WeightDiagram.from_labels(list(text), delta))


# hand-drawn diagrams: (labels, caps, curls, down rays up to the first slot past the labels, up ray)
HAND_DRAWN = [
    ("v^", [(0, 1)], [], [2], None),
    ("^^", [], [(0, 1)], [2], None),
    ("^^^", [], [(0, 1)], [3], 2),
    ("^v^", [(1, 2)], [], [3], 0),
    ("v^^^v", [(0, 1)], [(2, 3)], [4], None),
    ("vv^^", [(0, 3), (1, 2)], [], [4], None),
    ("vx^", [(0, 2)], [], [3], None),
    ("v^vx", [(0, 1)], [], [2, 4], None),
    ("ovv^x^^v^^^", [(1, 5), (2, 3), (7, 8)], [(6, 9)], [11], 10),
]


@pytest.mark.parametrize("text, caps, curls, rays, up_ray", HAND_DRAWN)
def test_hand_drawn(text, caps, curls, rays, up_ray):
    c = caps_of(text)
    assert list(c.caps) == caps
    assert list(c.curls) == curls
    assert list(c.rays) == rays
    assert c.up_ray == up_ray


def test_no_arcs_for_empty_partition():
    c = cap_diagram(EMPTY, 2)
    assert not c.caps and not c.curls
    assert c.chamber_of(0) == c.chamber_at(c._q(0))


def test_single_outer_chamber_without_arcs():
    c = caps_of("oxo")
    chambers = {c.chamber_of(k) for k in range(3)}
    assert len(chambers) == 1


def test_cross_inside_a_cap():
    c = caps_of("vx^v")
    inside = c.chamber_of(1)
    assert inside[0] == "arc"
    assert c.belongs_to_chamber(0, inside) and c.belongs_to_chamber(2, inside)
    assert not c.belongs_to_chamber(3, inside)
    with pytest.raises(ValueError):
        c.chamber_of(0)


def test_arcs_touch_two_chambers():
    c = caps_of("ovv^x^^v^^^")
    for k in range(c.width):
        if c.base[k] in "v^":
            assert len(c.chambers_of_vertex(k)) == 2


def test_curl_chambers():
    c = caps_of("^o^")
    # the circle sits between the two ends of a curl: inside the inner wall arc's complement
    assert c.curls == ((0, 2),)
    room = c.chamber_of(1)
    assert c.belongs_to_chamber(0, room) and c.belongs_to_chamber(2, room)


@pytest.mark.parametrize("delta", range(-5, 6))
def test_pairing_order_does_not_matter(delta):
    rng = random.Random(delta)
    for lam in partitions_up_to(7):
        x = weight_diagram(lam, delta)
        ref = cap_diagram_of(x)
        for _ in range(3):
            assert cap_diagram_random(x, rng) == ref


def test_d_poly_basics():
    for lam in partitions_up_to(5):
        assert d_poly(lam, lam, 3) == 0
    lam = EMPTY
    assert all(decomposition_number(lam, mu, 2) == (mu == lam) for mu in partitions_up_to(4))


@pytest.mark.parametrize("delta", [-3, -2, -1, 1, 2, 3, 4])
def test_nonzero_entries_respect_blocks_and_order(delta):
    parts = list(partitions_up_to(6))
    for lam in parts:
        for mu in parts:
            if decomposition_number(lam, mu, delta):
                assert same_block(lam, mu, delta)
                assert order_leq(mu, lam, delta)


def test_decomposition_matrix_is_unitriangular():
    block = [p for p in labels(4) if same_block(p, P((2,)), 1)]
    block.sort(key=lambda p: (p.size, tuple(p)))
    m = decomposition_matrix(block, 1)
    assert all(m[i][i] == 1 for i in range(len(block)))
    assert all(v in (0, 1) for row in m for v in row)
