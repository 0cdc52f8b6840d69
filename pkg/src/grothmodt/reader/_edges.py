import argparse
import os

from wai.logging import LOGGING_WARNING

from grothmodt.core import DEFAULT_MATROID_CAP, InputError
from grothmodt.graph import read_edge_list
from ._base import Reader, InputItem, graph_item


class EdgeListReader(Reader):

    def __init__(self, source: str = None, cap: int = DEFAULT_MATROID_CAP,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the reader.

        :param source: the edge list file
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
        return "from-edges"

    def description(self) -> str:
        """
        Returns a description of the reader.

        :return: the description
        :rtype: str
        """
        return "Reads a multigraph from an edge list: one 'u v [label]' per line, '#' starts a comment, " \
               "'# face: e1 e2 ...' lines define faces."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("-i", "--input", type=str, help="Path to the edge list file.", required=True)
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
        Parses the edge list.

        :return: the parsed input
        :rtype: InputItem
        """
        if self.source is None:
            raise InputError("No edge list file provided")
        self.logger().info("Reading from: %s" % self.source)
        g = read_edge_list(self.source)
        return graph_item(g, os.path.basename(self.source), cap=self.cap)
