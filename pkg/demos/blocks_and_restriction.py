"""Blocks, decomposition numbers and restriction for B_5 at delta = -1.

The decomposition numbers come from cap diagrams. We compare them against
Gram ranks computed from the diagram algebra itself, then restrict every
simple module to B_4 and print its predicted Loewy layers.
"""

from brauer import count_walks, restrict_simple
from brauer.caps import decomposition_matrix
from brauer.cli import _blocks
from brauer.oracle import gram_rank

n, delta = 5, -1

blocks = _blocks(n, delta)
for block in blocks:
    print("block:", "  ".join(f"({p})" for p in block))
    D = decomposition_matrix(block, delta)
    for lam, row in zip(block, D):
        print(f"  {str(lam):>10}  " + " ".join(str(v) for v in row))

    # dim Delta(mu) is the sum of dim L(lam) over the column of D
    for j, mu in enumerate(block):
        total = sum(D[i][j] * gram_rank(lam, n, delta) for i, lam in enumerate(block))
        assert total == count_walks(mu, n)
print()

for block in blocks:
    for lam in block:
        comps = restrict_simple(lam, n, delta)
        print(f"res L_{n}({lam}):")
        for mu in sorted(comps, key=lambda p: (p.size, tuple(p))):
            c = comps[mu]
            if c.is_zero:
                continue
            layers = " | ".join(" + ".join(str(m) for m in layer) for layer in c.layers)
            print(f"   case {c.case:<4} {layers}")
