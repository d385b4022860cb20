from .dyadic import DyadicExponent, DyadicPolynomial, eval_dyadic_poly
from .graded_space import GradedSpace, ball_membership, ball_radius, fnorm, fnorm_of_values
from .grid_vector import GridVector
from .grids import CompactDiskGrid, GridSupProfile, exhaustion_grids, sup_on_grid
from .sequence_norms import SequenceNorm, SequenceSpaceProfile, sequence_norm
from .serialization import vector_from_records, vector_to_records

__all__ = [
    "DyadicExponent",
    "DyadicPolynomial",
    "eval_dyadic_poly",
    "CompactDiskGrid",
    "GridSupProfile",
    "exhaustion_grids",
    "sup_on_grid",
    "GridVector",
    "SequenceNorm",
    "SequenceSpaceProfile",
    "sequence_norm",
    "GradedSpace",
    "ball_membership",
    "ball_radius",
    "fnorm",
    "fnorm_of_values",
    "vector_from_records",
    "vector_to_records",
]
