import abc
import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List

from seppl import Plugin
from wai.logging import LOGGING_WARNING, set_logging_level

from grothmodt.core import EXIT_OK


@dataclass
class Report:
    """
    The outcome of a command: text lines for humans, a dictionary for machines and
    the exit code.
    """
    command: str
    lines: List[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK

    def add(self, line: str = ""):
        self.lines.append(line)


class Writer(Plugin, abc.ABC):
    """
    Ancestor for plugins that output a report.
    """

    def __init__(self, output: str = None, logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the writer.

        :param output: the file to write to, stdout if None
        :type output: str
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__()
        self.output_file = output
        self.logger_name = logger_name
        self.logging_level = logging_level
        self._logger = None

    def logger(self) -> logging.Logger:
        """
        Returns the logger instance to use.

        :return: the logger
        :rtype: logging.Logger
        """
        if self._logger is None:
            name = self.logger_name if (self.logger_name is not None) else self.name()
            self._logger = logging.getLogger(name)
            set_logging_level(self._logger, self.logging_level)
        return self._logger

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("-o", "--output", type=str, help="The file to write the report to, stdout if omitted.", required=False, default=None)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.output_file = ns.output

    @abc.abstractmethod
    def render(self, report: Report) -> str:
        """
        Turns the report into text.

        :param report: the report to render
        :type report: Report
        :return: the text
        :rtype: str
        """
        raise NotImplementedError()

    def write(self, report: Report):
        """
        Renders the report and writes it to the output file or stdout.

        :param report: the report to write
        :type report: Report
        """
        text = self.render(report)
        if self.output_file is None:
            sys.stdout.write(text)
            if not text.endswith("\n"):
                sys.stdout.write("\n")
            sys.stdout.flush()
        else:
            self.logger().info("Writing report to: %s" % self.output_file)
            with open(self.output_file, "w") as fp:
                fp.write(text)
                if not text.endswith("\n"):
                    fp.write("\n")
