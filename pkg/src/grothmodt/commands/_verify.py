import argparse
from typing import Optional

from wai.logging import LOGGING_WARNING

from grothmodt.core import COMMAND_VERIFY, DEFAULT_CRT_BOUND, EXIT_MISMATCH, TARGET_Y, TARGET_YTORUS
from grothmodt.engine import compute_classes
from grothmodt.oracle import verify_classes, check_stratification_counts
from grothmodt.reader import InputItem
from grothmodt.writer import Report
from ._base import OracleCommand, JobSpec

CONSISTENCY_NOTE = "congruences certify consistency with the point counts, not correctness of the classes"


class VerifyCommand(OracleCommand):

    def __init__(self, job: JobSpec = None, stratification: bool = False,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the command.

        :param job: the job to run, default options if None
        :type job: JobSpec
        :param stratification: whether to check the exact count identities as well
        :type stratification: bool
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__(job=job, logger_name=logger_name, logging_level=logging_level)
        self.stratification = stratification

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return COMMAND_VERIFY

    def description(self) -> str:
        """
        Returns a description of the command.

        :return: the description
        :rtype: str
        """
        return "Derives the classes and checks them against point counts: |Y(GF(p))| must be congruent to the " \
               "class modulo p-1. Reconstructs the integers from the residues."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("--bound", type=int, help="The bound on the absolute value for the reconstruction from residues.", required=False, default=DEFAULT_CRT_BOUND)
        parser.add_argument("--stratification", action="store_true", help="Whether to also check the stratification and Cremona identities on the exact counts.", required=False)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.job.bound = ns.bound
        self.stratification = ns.stratification

    def _run(self, item: Optional[InputItem]) -> Report:
        ctx = self.job.engine_context(logging_level=self.logging_level)
        y, ytorus = compute_classes(item.matroid, ctx)
        poly = item.polynomial(cap=self.job.cap)
        result = verify_classes(poly, y.result, ytorus.result, list(self.job.primes), budget=self.job.budget,
                                bound=self.job.bound, graph=item.graph)
        report = Report(self.name())
        report.add("input: %s" % item.name)
        report.add("engine: [Y] = %s, [Y°] = %s" % (y.result, ytorus.result))
        for check in result.checks:
            if check.passed is None:
                status = "SKIP (%s)" % check.skipped
            else:
                status = "PASS" if check.passed else "FAIL"
            report.add("p=%-2d %-6s count %d = %d mod %d, claimed %s: %s" % (
                check.p, check.target, check.count, check.count % check.modulus, check.modulus,
                "unknown" if (check.claimed is None) else str(check.claimed), status))
        for target in [TARGET_Y, TARGET_YTORUS]:
            if target in result.reconstruction_errors:
                report.add("reconstructed %-6s: %s" % (target, result.reconstruction_errors[target]))
            else:
                value = result.reconstructed.get(target)
                report.add("reconstructed %-6s: %s (|n| <= %d)" % (
                    target, "none" if (value is None) else str(value), self.job.bound))
        report.data = {
            "input": item.name,
            TARGET_Y: y.result.to_json(),
            TARGET_YTORUS: ytorus.result.to_json(),
            "verification": result.to_dict(),
        }
        if self.stratification:
            reports = []
            for p in self.job.primes:
                strat = check_stratification_counts(item.configuration, p, budget=self.job.budget,
                                                    subset_cap=self.job.subset_cap)
                reports.append(strat.to_dict())
                report.add("p=%-2d stratification: nY = %d = sum of torus counts over %d subsets; Cremona: %s" % (
                    p, strat.n_y, strat.subsets,
                    strat.skipped if (strat.skipped is not None) else ("nY° = %d" % strat.n_ytorus)))
            report.data["stratification"] = reports
        report.add("note: %s" % CONSISTENCY_NOTE)
        report.data["note"] = CONSISTENCY_NOTE
        report.add("result: %s" % ("PASS" if result.passed else "FAIL"))
        if not result.passed:
            report.exit_code = EXIT_MISMATCH
        return report
