import argparse
from typing import Optional

from wai.logging import LOGGING_WARNING

from grothmodt.core import COMMAND_COUNT, IdentityViolation
from grothmodt.oracle import count_table, count_points_affine
from grothmodt.reader import InputItem
from grothmodt.writer import Report
from ._base import OracleCommand, JobSpec

HEADER = "%3s %12s %12s %12s %12s %6s %8s %8s"


class CountCommand(OracleCommand):

    def __init__(self, job: JobSpec = None, affine: bool = False, logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the command.

        :param job: the job to run, default options if None
        :type job: JobSpec
        :param affine: whether to cross-check nY with the affine count
        :type affine: bool
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__(job=job, logger_name=logger_name, logging_level=logging_level)
        self.affine = affine

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return COMMAND_COUNT

    def description(self) -> str:
        """
        Returns a description of the command.

        :return: the description
        :rtype: str
        """
        return "Counts the points of the hypersurface X, its complement Y and the torus part Y° over small prime fields."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("--affine", action="store_true", help="Whether to cross-check nY with a count of the affine cone.", required=False)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.affine = ns.affine

    def _run(self, item: Optional[InputItem]) -> Report:
        poly = item.polynomial(cap=self.job.cap)
        counts = count_table(poly, list(self.job.primes), budget=self.job.budget, graph=item.graph)
        report = Report(self.name())
        report.add("input: %s" % item.name)
        report.add(HEADER % ("p", "nProjective", "nX", "nY", "nYtorus", "p-1", "nY%", "nYtorus%"))
        for c in counts:
            line = HEADER % (c.p, c.n_projective, c.n_x, c.n_y, c.n_ytorus, c.p - 1, c.residue(c.n_y), c.residue(c.n_ytorus))
            if c.degenerate:
                line += "  (degenerate)"
            report.add(line)
        report.data = {"input": item.name, "counts": [c.to_dict() for c in counts]}
        if self.affine:
            for c in counts:
                affine = count_points_affine(poly, c.p, budget=self.job.budget, graph=item.graph)
                if affine != c.n_y:
                    raise IdentityViolation("Affine count %d differs from projective count %d over GF(%d)" % (affine, c.n_y, c.p))
            report.add("affine cross-check: ok")
            report.data["affine"] = True
        return report
