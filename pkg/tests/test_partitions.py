from fractions import Fraction

import pytest
from hypothesis import given

from brauer.partitions import (EMPTY, Partition, addable_rows, box_neighbors, d_value, hook_length,
                               in_labels, king_polynomial, king_root_multiplicity, labels, partitions_of,
                               partitions_up_to, removable_rows, transpose)
from strategies import deltas, partitions, small_partitions

P = Partition


def test_parse_and_print():
    assert P.parse("10,10,9,9,8,5,3,3") == P((10, 10, 9, 9, 8, 5, 3, 3))
    assert P.parse("-") == EMPTY
    assert str(EMPTY) == "-"
    assert str(P((3, 1))) == "3,1"
    assert P((2, 1, 0, 0)) == P((2, 1))


def test_rejects_bad_parts():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, -1))


def test_transpose_examples():
    assert transpose(P((2,))) == P((1, 1))
    assert transpose(EMPTY) == EMPTY
    big = P((10, 10, 9, 9, 8, 5, 3, 3))
    assert transpose(big) == P((8, 8, 8, 6, 6, 5, 5, 5, 4, 2))
    assert transpose(transpose(big)) == big


@given(partitions())
def test_transpose_is_an_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


def test_box_neighbors_examples():
    assert box_neighbors(EMPTY) == ({P((1,))}, set())
    assert box_neighbors(P((1,))) == ({P((2,)), P((1, 1))}, {EMPTY})
    up, down = box_neighbors(P((2, 1)))
    assert up == {P((3, 1)), P((2, 2)), P((2, 1, 1))}
    assert down == {P((1, 1)), P((2,))}


@given(partitions())
def test_box_neighbors_are_symmetric(lam):
    up, down = box_neighbors(lam)
    assert all(lam in box_neighbors(mu)[1] for mu in up)
    assert all(lam in box_neighbors(mu)[0] for mu in down)
    assert len(up) == len(addable_rows(lam)) and len(down) == len(removable_rows(lam))
    assert len(up) == len(down) + 1


def test_partition_counts():
    assert [len(list(partitions_of(k))) for k in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert len(list(partitions_up_to(4))) == 12
    assert set(labels(4)) == {
        P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1)), P((2,)), P((1, 1)), EMPTY}
    assert in_labels(P((2,)), 4) and not in_labels(P((2,)), 3) and not in_labels(P((3,)), 1)


def test_d_values():
    assert d_value(P((1,)), 1, 1) == 1
    # the root 1 - d of the box (1, 2) of (2) is the root 1 of P_(2)
    assert d_value(P((2,)), 1, 2) == 0
    # the box (2, 1) of (1, 1) gives the root 1 of P_(1,1)
    assert d_value(P((1, 1)), 2, 1) == 0
    assert hook_length(P((2, 1)), 1, 1) == 3


def test_king_polynomials():
    assert king_polynomial(EMPTY)(Fraction(5, 7)) == 1
    p2 = king_polynomial(P((2,)))
    p21 = king_polynomial(P((2, 1)))
    p11 = king_polynomial(P((1, 1)))
    for u in (Fraction(-3), Fraction(1, 3), Fraction(11, 2)):
        assert p2(u) == (u + 2) * (u - 1) / 2
        assert p21(u) == (u + 2) * u * (u - 2) / 3
        assert p11(u) == u * (u - 1) / 2
        assert king_polynomial(P((1,)))(u) == u


def test_king_root_multiplicity_examples():
    assert all(king_root_multiplicity(EMPTY, d) == 0 for d in range(-5, 6))
    assert king_root_multiplicity(P((2,)), 1) == 1
    assert king_root_multiplicity(P((2, 1)), -2) == 1


@given(partitions())
def test_king_degree_and_denominator(lam):
    k = king_polynomial(lam)
    assert k.degree == lam.size
    # the hook product divides |lam|! (it is |lam|! / f^lam)
    from math import factorial
    assert factorial(lam.size) % k.denominator == 0


@given(small_partitions(), deltas)
def test_king_multiplicity_matches_evaluation(lam, delta):
    value = king_polynomial(lam)(Fraction(delta))
    assert (value == 0) == (king_root_multiplicity(lam, delta) > 0)
