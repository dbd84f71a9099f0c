"""Orthogonal-form matrices on walks, generic and specialised.

The generic matrices have entries that are square roots of rational
functions in u. At a large random u they satisfy the Brauer relations. At
u = delta the walks through delta-singular partitions split off and what is
left realises the simple module.
"""

from fractions import Fraction

import numpy as np

from brauer import Partition, check_relations, count_walks, evaluate_at, generic_matrices, simple_matrices
from brauer.oracle import gram_rank

lam, n = Partition((1,)), 3

mats = generic_matrices(lam, n)
print(f"Delta_{n}({lam}) has {mats.dim} walks:")
for w in mats.basis:
    print("  ", w)

u = Fraction(41, 3)
report = check_relations(evaluate_at(mats, u), u)
print(f"\nat u = {u}: worst residual {max(report.residuals.values()):.2e}")

for delta in (1, 2, -2):
    simple = simple_matrices(lam, n, delta)
    report = check_relations(simple, delta)
    print(f"\ndelta = {delta}: {simple.dim} of {count_walks(lam, n)} walks survive,"
          f" Gram rank {gram_rank(lam, n, delta)}, relations ok: {report.passed}")
    with np.printoptions(precision=3, suppress=True):
        print("e_1 =\n", np.array(simple.e[0]))
