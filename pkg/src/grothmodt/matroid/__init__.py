from ._matroid import Matroid, ElementTags, from_graph, from_plane_graph, from_matrix, uniform, popcount, bits, compress
from ._linalg import integer_rank, integer_kernel_basis, column_minor, to_matrix
