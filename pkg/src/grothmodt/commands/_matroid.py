import argparse
from typing import Optional

from wai.logging import LOGGING_WARNING

from grothmodt.core import COMMAND_MATROID
from grothmodt.reader import InputItem
from grothmodt.writer import Report
from ._base import Command, JobSpec


class MatroidCommand(Command):

    def __init__(self, job: JobSpec = None, dual: bool = False, max_bases: int = 50,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the command.

        :param job: the job to run, default options if None
        :type job: JobSpec
        :param dual: whether to report on the dual matroid
        :type dual: bool
        :param max_bases: the maximum number of bases to list
        :type max_bases: int
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__(job=job, logger_name=logger_name, logging_level=logging_level)
        self.dual = dual
        self.max_bases = max_bases

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return COMMAND_MATROID

    def description(self) -> str:
        """
        Returns a description of the command.

        :return: the description
        :rtype: str
        """
        return "Outputs the matroid of the input: rank, bases, connectivity, uniformity and element types."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("--dual", action="store_true", help="Whether to output the dual matroid instead.", required=False)
        parser.add_argument("--max_bases", type=int, help="The maximum number of bases to list.", required=False, default=50)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.dual = ns.dual
        self.max_bases = ns.max_bases

    def _run(self, item: Optional[InputItem]) -> Report:
        m = item.matroid.dual() if self.dual else item.matroid
        signature = m.uniform_signature()
        components = [m.labels_of(c) for c in m.components()]
        tags = m.classify_elements()
        bases = [m.labels_of(b) for b in sorted(m.bases)]
        report = Report(self.name())
        report.add("input: %s%s" % (item.name, " (dual)" if self.dual else ""))
        report.add("elements: %d (%s)" % (m.size, ", ".join(m.labels)))
        report.add("rank: %d, nullity: %d" % (m.rank, m.nullity))
        report.add("bases: %d" % len(bases))
        for b in bases[:self.max_bases]:
            report.add("  {%s}" % ",".join(b))
        if len(bases) > self.max_bases:
            report.add("  ... %d more" % (len(bases) - self.max_bases))
        report.add("connected: %s (%d component(s))" % ("yes" if m.is_connected() else "no", len(components)))
        report.add("uniform: %s" % ("no" if (signature is None) else "U(%d,%d)" % signature))
        report.add("loops: %s" % (", ".join(t.label for t in tags if t.loop) or "none"))
        report.add("coloops: %s" % (", ".join(t.label for t in tags if t.coloop) or "none"))
        for t in tags:
            if t.parallel or t.series:
                report.add("  %s: parallel {%s}, series {%s}" % (t.label, ",".join(t.parallel), ",".join(t.series)))
        report.data = m.to_dict()
        report.data.update({
            "input": item.name,
            "dual": self.dual,
            "nullity": m.nullity,
            "connected": m.is_connected(),
            "components": components,
            "uniform": None if (signature is None) else list(signature),
            "elements": [t.to_dict() for t in tags],
        })
        return report
