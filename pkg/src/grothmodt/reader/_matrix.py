import argparse
import json
import os

from wai.logging import LOGGING_WARNING

from grothmodt.core import DEFAULT_MATROID_CAP, InputError
from grothmodt.config import configuration_from_dict
from ._base import Reader, InputItem


class MatrixReader(Reader):

    def __init__(self, source: str = None, cap: int = DEFAULT_MATROID_CAP,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the reader.

        :param source: the JSON file with the matrix
        :type source: str
        :param cap: the maximum number of matroid elements
        :type cap: int
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__(cap=cap, logger_name=logger_name, logging_level=logging_level)
        self.source = source

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return "from-matrix"

    def description(self) -> str:
        """
        Returns a description of the reader.

        :return: the description
        :rtype: str
        """
        return "Reads an integer matrix of full row rank from JSON: {\"rows\": [[...], ...], \"labels\": [...]}."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("-i", "--input", type=str, help="Path to the JSON file with the matrix.", required=True)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.source = ns.input

    def read(self) -> InputItem:
        """
        Parses the matrix.

        :return: the parsed input
        :rtype: InputItem
        """
        if self.source is None:
            raise InputError("No matrix file provided")
        self.logger().info("Reading from: %s" % self.source)
        try:
            with open(self.source, "r") as fp:
                d = json.load(fp)
        except json.JSONDecodeError as e:
            raise InputError("Invalid JSON: %s" % e.msg, line=e.lineno)
        name = os.path.basename(self.source)
        w = configuration_from_dict(d, name=name)
        if w.rank == 0:
            raise InputError("Input consists of loops only: %s" % name)
        return InputItem(name=name, matroid=w.matroid(cap=self.cap), configuration=w)
