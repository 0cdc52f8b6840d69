from typing import Optional

from grothmodt.core import COMMAND_FATNEXUS, InputError
from grothmodt.graph import simplify, find_nexi, find_fat_nexus, connected_components
from grothmodt.reader import InputItem
from grothmodt.writer import Report
from ._base import Command


class FatNexusCommand(Command):

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return COMMAND_FATNEXUS

    def description(self) -> str:
        """
        Returns a description of the command.

        :return: the description
        :rtype: str
        """
        return "Simplifies the graph and reports its nexi and a fat nexus witness, if any."

    def _run(self, item: Optional[InputItem]) -> Report:
        if item.graph is None:
            raise InputError("The fatnexus command requires a graph input (--builder or --edges)")
        s = simplify(item.graph)
        components = connected_components(s)
        nexi = s.sort_vertices(find_nexi(s))
        witness = find_fat_nexus(s)
        report = Report(self.name())
        report.add("input: %s" % item.name)
        report.add("simplification: %d vertices, %d edges, %d component(s)" % (s.num_vertices, s.num_edges, len(components)))
        report.add("nexi: %s" % (", ".join(nexi) if (len(nexi) > 0) else "none"))
        if witness is None:
            report.add("fat nexus: none")
        else:
            report.add("fat nexus: %s, parts {%s} | {%s}" % (
                witness.v0, ",".join(s.sort_vertices(witness.part1)), ",".join(s.sort_vertices(witness.part2))))
        vanishes = (len(components) > 1) or (len(nexi) > 0) or (witness is not None)
        report.add("[Y] = 0 mod T by torus action: %s" % ("yes" if vanishes else "no"))
        report.data = {
            "input": item.name,
            "vertices": s.num_vertices,
            "edges": s.num_edges,
            "components": len(components),
            "nexi": nexi,
            "fatNexus": None if (witness is None) else witness.to_dict(),
            "vanishes": vanishes,
        }
        return report
