import argparse
from typing import Optional, List

from wai.logging import LOGGING_WARNING

from grothmodt.catalog import catalog_rows
from grothmodt.core import COMMAND_TABLE, EXIT_MISMATCH, GrothmodtError, TARGET_Y, TARGET_YTORUS
from grothmodt.engine import ClassModT, compute_classes
from grothmodt.graph import build
from grothmodt.reader import InputItem, graph_item
from grothmodt.writer import Report
from ._base import Command, JobSpec

ROW_FORMAT = "%-24s %-24s %10s %10s %10s %10s  %s"


def cell_matches(computed: ClassModT, expected: Optional[int], tolerate_unknown: bool = False) -> bool:
    """
    Whether a computed class agrees with the expected cell.

    :param computed: the computed class
    :type computed: ClassModT
    :param expected: the expected value, None if the cell is not checked
    :type expected: int
    :param tolerate_unknown: whether an unknown result is acceptable
    :type tolerate_unknown: bool
    :return: True if matching
    :rtype: bool
    """
    if not computed.is_known:
        return tolerate_unknown or (expected is None)
    if expected is None:
        return True
    return computed.value == expected


def _expected(value: Optional[int], tolerated: bool) -> str:
    if value is not None:
        return str(value)
    return "?" if tolerated else "-"


class TableCommand(Command):

    def __init__(self, job: JobSpec = None, sizes: List[int] = None,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the command.

        :param job: the job to run, default options if None
        :type job: JobSpec
        :param sizes: the parameters for the graph families
        :type sizes: list
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__(job=job, logger_name=logger_name, logging_level=logging_level)
        self.sizes = [3, 4, 5] if (sizes is None) else sizes

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return COMMAND_TABLE

    def description(self) -> str:
        """
        Returns a description of the command.

        :return: the description
        :rtype: str
        """
        return "Recomputes the overview of examples (graph families and fixed graphs) and compares with the expected classes."

    def requires_input(self) -> bool:
        return False

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("--sizes", type=int, nargs="+", help="The parameters to instantiate the graph families with.", required=False, default=[3, 4, 5])
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.sizes = ns.sizes

    def _run(self, item: Optional[InputItem]) -> Report:
        report = Report(self.name())
        report.add(ROW_FORMAT % ("graph", "builder", "Y° exp", "Y° got", "Y exp", "Y got", "status"))
        rows = []
        mismatches = 0
        for row in catalog_rows(self.sizes):
            self.logger().info("Computing: %s" % row.builder)
            try:
                g = build(row.builder)
                m = graph_item(g, row.builder, cap=self.job.cap).matroid
                y, ytorus = compute_classes(m, self.job.engine_context(logging_level=self.logging_level))
                y, ytorus = y.result, ytorus.result
                error = None
            except GrothmodtError as e:
                self.logger().error("Failed to compute %s: %s" % (row.builder, str(e)))
                y = ytorus = ClassModT.unknown(str(e))
                error = str(e)
            ok = (error is None) \
                and cell_matches(ytorus, row.expected_ytorus, row.tolerate_unknown) \
                and cell_matches(y, row.expected_y)
            if not ok:
                mismatches += 1
            status = "ok" if ok else ("ERROR: " + error if (error is not None) else "MISMATCH")
            report.add(ROW_FORMAT % (row.label, row.builder,
                                     _expected(row.expected_ytorus, row.tolerate_unknown), str(ytorus),
                                     _expected(row.expected_y, False), str(y), status))
            rows.append({
                "label": row.label,
                "builder": row.builder,
                "expected": {TARGET_YTORUS: row.expected_ytorus, TARGET_Y: row.expected_y},
                "computed": {TARGET_YTORUS: ytorus.to_json(), TARGET_Y: y.to_json()},
                "ok": ok,
            })
        report.add("%d rows, %d mismatches" % (len(rows), mismatches))
        report.data = {"rows": rows, "mismatches": mismatches}
        if mismatches > 0:
            report.exit_code = EXIT_MISMATCH
        return report
