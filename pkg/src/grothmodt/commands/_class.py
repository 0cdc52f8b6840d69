import argparse
from typing import Optional

from grothmodt.core import COMMAND_CLASS, TARGET_Y, TARGET_YTORUS
from grothmodt.engine import compute_classes, describe, explain
from grothmodt.reader import InputItem
from grothmodt.writer import Report
from ._base import Command


class ClassCommand(Command):

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return COMMAND_CLASS

    def description(self) -> str:
        """
        Returns a description of the command.

        :return: the description
        :rtype: str
        """
        return "Derives the classes [Y] and [Y°] modulo T of the configuration hypersurface complement."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("--trace", action="store_true", help="Whether to output the tree of rules that produced the classes.", required=False)
        parser.add_argument("--max_depth", type=int, help="The maximum depth of the trace to output.", required=False, default=None)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.job.trace = ns.trace
        self.job.max_depth = ns.max_depth

    def _run(self, item: Optional[InputItem]) -> Report:
        ctx = self.job.engine_context(logging_level=self.logging_level)
        y, ytorus = compute_classes(item.matroid, ctx)
        report = Report(self.name())
        report.add("input: %s" % item.name)
        report.add("matroid: %s" % describe(item.matroid))
        report.add("[Y]  = %s mod T" % y.result)
        if not y.result.is_known:
            report.add("       %s" % y.result.reason)
        report.add("[Y°] = %s mod T" % ytorus.result)
        if not ytorus.result.is_known:
            report.add("       %s" % ytorus.result.reason)
        report.data = {
            "input": item.name,
            TARGET_Y: y.result.to_json(),
            TARGET_YTORUS: ytorus.result.to_json(),
            "stats": dict(ctx.stats),
        }
        if not y.result.is_known:
            report.data["reasonY"] = y.result.reason
        if not ytorus.result.is_known:
            report.data["reasonYtorus"] = ytorus.result.reason
        if self.job.trace:
            report.add()
            report.add(explain(y, max_depth=self.job.max_depth))
            report.add()
            report.add(explain(ytorus, max_depth=self.job.max_depth))
            report.data["trace"] = {TARGET_Y: y.to_dict(), TARGET_YTORUS: ytorus.to_dict()}
        return report
