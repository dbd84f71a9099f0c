import json
from collections import Counter

import pytest
from hypothesis import given

from brauer.caps import decomposition_number
from brauer.geometry import count_walks, degree, in_A_delta
from brauer.partitions import EMPTY, Partition, box_neighbors, in_labels, labels, partitions_up_to
from brauer.restriction import (I_set, L, ModuleLabel, STANDARD, induce_standard, lambda_pm, lambda_prime_j,
                                restrict_simple, restrict_standard, restriction_json)
from brauer.weights import order_leq, same_block, weight_diagram
from strategies import nonzero_deltas, small_partitions

P = Partition
DELTAS = [-3, -2, -1, 1, 2, 3, 4]


def test_restrict_standard_examples():
    assert restrict_standard(P((1,)), 1, 2) == [ModuleLabel(STANDARD, EMPTY, 0, 2)]
    assert restrict_standard(EMPTY, 2, 2) == [ModuleLabel(STANDARD, P((1,)), 1, 2)]
    assert len(induce_standard(P((1,)), 1, 2)) == 3
    with pytest.raises(ValueError):
        restrict_standard(P((2,)), 3, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_restrict_standard_dimensions_add_up(n):
    for lam in labels(n):
        assert count_walks(lam, n) == sum(count_walks(m.partition, n - 1) for m in restrict_standard(lam, n, 1))


def test_module_label_validation():
    assert str(L(P((2, 1)), 5, 2)) == "L_5(2,1)"
    with pytest.raises(ValueError):
        L(P((2,)), 3, 1)


@given(small_partitions(7), nonzero_deltas)
def test_plus_minus_pair(lam_prime, delta):
    try:
        plus, minus, i = lambda_pm(lam_prime, delta)
    except ValueError:
        return
    x = weight_diagram(lam_prime, delta)
    assert {x[i - 1], x[i]} == {"o", "x"}
    yp, ym = weight_diagram(plus, delta), weight_diagram(minus, delta)
    # vertex 0 may be the up/down wildcard for even delta
    assert ym.is_wild(i - 1) or (ym[i - 1], ym[i]) == ("^", "v")
    assert yp.is_wild(i - 1) or yp[i - 1] == "v"
    assert (yp[i], ym[i]) == ("^", "v")
    assert plus in box_neighbors(lam_prime)[0] and minus in box_neighbors(lam_prime)[1]
    assert degree(plus, delta) == degree(minus, delta) == degree(lam_prime, delta) - 1
    assert same_block(plus, minus, delta) and order_leq(minus, plus, delta)
    for j, rule in I_set(lam_prime, plus, delta):
        nu = lambda_prime_j(lam_prime, j, delta, i, rule)
        assert same_block(nu, plus, delta)


def test_no_plus_minus_pair():
    with pytest.raises(ValueError):
        lambda_pm(EMPTY, 2)


def test_known_sets():
    plus, minus, i = lambda_pm(P((3, 1)), 1)
    assert (plus, minus, i) == (P((3, 1, 1)), P((2, 1)), 2)
    assert I_set(P((3, 1)), plus, 1) == [(0, "left-down"), (3, "right-down")]
    assert lambda_prime_j(P((3, 1)), 0, 1, i, "left-down") == P((3, 3, 3))
    assert lambda_prime_j(P((3, 1)), 3, 1, i, "right-down") == P((4, 1, 1, 1))
    plus, _, i = lambda_pm(P((3, 2)), 1)
    assert I_set(P((3, 2)), plus, 1) == [(0, "left-up"), (3, "right-down")]


def test_restrict_simple_cases():
    # |lam'| = n: a single simple factor
    comps = restrict_simple(P((2, 1)), 3, 1)
    assert all(len(c.layers) <= 1 for c in comps.values())
    comps = restrict_simple(P((2, 1)), 5, 2)
    three = [c for c in comps.values() if c.case == "III"]
    assert three and all(c.head == c.socle and len(c.layers) == 3 for c in three)
    with pytest.raises(ValueError):
        restrict_simple(P((1,)), 3, 0)


def test_json_shape():
    data = json.loads(restriction_json(P((2, 1)), 5, 2))
    assert all(set(d) == {"block", "head", "middle", "socle", "layers"} for d in data)


@pytest.mark.parametrize("delta", DELTAS)
def test_restricted_labels_restrict_semisimply(delta):
    for n in range(1, 7):
        for lam in labels(n):
            if not in_A_delta(lam, delta) or n < 2:
                continue
            factors = Counter(m.partition for c in restrict_simple(lam, n, delta).values() for m in c.factors)
            up, down = box_neighbors(lam)
            want = Counter(mu for mu in up | down if in_labels(mu, n - 1) and in_A_delta(mu, delta))
            assert factors == want


@pytest.mark.parametrize("delta", DELTAS)
def test_restriction_commutes_with_decomposition(delta):
    """[res Delta(mu)] = sum_lam D(lam, mu) [res L(lam)] as multisets of simples."""
    for n in range(2, 6):
        labs = labels(n)
        lower = labels(n - 1)
        res_simple = {lam: Counter(m.partition for c in restrict_simple(lam, n, delta).values()
                                   for m in c.factors) for lam in labs}
        for mu in labs:
            lhs = Counter()
            for m in restrict_standard(mu, n, delta):
                for kappa in lower:
                    if decomposition_number(kappa, m.partition, delta):
                        lhs[kappa] += 1
            rhs = Counter()
            for lam in labs:
                if decomposition_number(lam, mu, delta):
                    rhs.update(res_simple[lam])
            assert lhs == rhs, (mu, n)
