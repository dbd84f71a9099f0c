"""Combinatorics and representation matrices for Brauer algebras over the complex numbers."""

from .partitions import Partition, EMPTY, king_polynomial, labels
from .geometry import embed, degree, in_A_delta, count_walks, enumerate_walks, Walk
from .weights import weight_diagram, same_block, order_leq
from .caps import cap_diagram, decomposition_number
from .restriction import restrict_simple, restrict_standard
from .leduc_ram import generic_matrices, simple_matrices, evaluate_at, check_relations

__version__ = "0.1.0"

__all__ = [
    "Partition", "EMPTY", "king_polynomial", "labels",
    "embed", "degree", "in_A_delta", "count_walks", "enumerate_walks", "Walk",
    "weight_diagram", "same_block", "order_leq",
    "cap_diagram", "decomposition_number",
    "restrict_simple", "restrict_standard",
    "generic_matrices", "simple_matrices", "evaluate_at", "check_relations",
]
