from dataclasses import dataclass
from typing import FrozenSet, Optional

import networkx as nx

from ._multigraph import Multigraph, simplify, connected_components, find_nexi


@dataclass(frozen=True)
class FatNexusWitness:
    """
    A fat nexus v0 together with the partition of the remaining vertices.
    """
    v0: str
    part1: FrozenSet[str]
    part2: FrozenSet[str]

    def to_dict(self) -> dict:
        return {
            "v0": self.v0,
            "part1": sorted(self.part1),
            "part2": sorted(self.part2),
        }


def _auxiliary_graph(g: Multigraph, v0: str, closed: set) -> nx.Graph:
    """
    Edges that must not cross the partition: not incident to v0 and leaving the
    closed neighborhood of v0.
    """
    result = nx.Graph()
    result.add_nodes_from(v for v in g.vertices if v != v0)
    for _, u, v in g.edges:
        if (u == v) or (v0 in (u, v)):
            continue
        if (u in closed) and (v in closed):
            continue
        result.add_edge(u, v)
    return result


def find_fat_nexus(g: Multigraph) -> Optional[FatNexusWitness]:
    """
    Looks for a fat nexus in a simple graph. Valid partitions are exactly the unions
    of components of the auxiliary graph, so each candidate needs one component search.
    A cone on at least four vertices gets its witness at the least-labeled apex, with
    part1 the first remaining vertex. Otherwise candidates are tried in vertex order and
    part1 is the component of the first remaining vertex.

    :param g: the simple graph to inspect
    :type g: Multigraph
    :return: the witness, None if there is no fat nexus
    :rtype: FatNexusWitness
    """
    if g.num_vertices >= 4:
        apexes = [v for v in g.vertices if len(g.closed_neighborhood(v)) == g.num_vertices]
        if len(apexes) > 0:
            # any split works as long as the parts differ in size
            v0 = min(apexes)
            rest = [v for v in g.vertices if v != v0]
            return FatNexusWitness(v0, frozenset(rest[:1]), frozenset(rest[1:]))
    for v0 in g.vertices:
        closed = g.closed_neighborhood(v0)
        rest = [v for v in g.vertices if v != v0]
        if (len(rest) < 2) or (len(closed) == g.num_vertices):
            continue
        components = list(nx.connected_components(_auxiliary_graph(g, v0, closed)))
        if len(components) < 2:
            continue
        first = [c for c in components if rest[0] in c][0]
        part1 = frozenset(first)
        return FatNexusWitness(v0, part1, frozenset(v for v in rest if v not in part1))
    return None


def is_valid_witness(g: Multigraph, witness: FatNexusWitness) -> bool:
    """
    Checks the defining conditions of a fat nexus partition directly.

    :param g: the graph
    :type g: Multigraph
    :param witness: the partition to check
    :type witness: FatNexusWitness
    :return: True if valid
    :rtype: bool
    """
    v0 = witness.v0
    if (len(witness.part1) == 0) or (len(witness.part2) == 0):
        return False
    if len(witness.part1 & witness.part2) > 0:
        return False
    if (witness.part1 | witness.part2 | {v0}) != set(g.vertices) or (v0 in witness.part1 | witness.part2):
        return False
    closed = g.closed_neighborhood(v0)
    for _, u, v in g.edges:
        crossing = ((u in witness.part1) and (v in witness.part2)) or ((u in witness.part2) and (v in witness.part1))
        if crossing and not ((u in closed) and (v in closed)):
            return False
    if len(closed) == g.num_vertices:
        if len(witness.part1) == len(witness.part2):
            return False
    return True


def simplification_vanishes(g: Multigraph) -> bool:
    """
    Whether the simplification of the graph has a nexus or a fat nexus (disconnected
    simplifications included), which forces [Y] = 0 mod T.

    :param g: the graph, needs an edge that is not a loop
    :type g: Multigraph
    :return: True if the torus action applies
    :rtype: bool
    """
    s = simplify(g)
    if len(connected_components(s)) > 1:
        return True
    if len(find_nexi(s)) > 0:
        return True
    return find_fat_nexus(s) is not None
