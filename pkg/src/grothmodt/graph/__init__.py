from ._multigraph import Multigraph, simplify, connected_components, find_nexi, is_cone_with_apex, delete_edge, contract_edge, subdivide_edge, dual_from_faces
from ._fatnexus import FatNexusWitness, find_fat_nexus, is_valid_witness, simplification_vanishes
from ._builders import build, builder_names, BUILDERS
from ._io import parse_edge_list, read_edge_list, format_edge_list, write_edge_list
