import argparse

from wai.logging import LOGGING_WARNING

from grothmodt.core import DEFAULT_MATROID_CAP, InputError
from grothmodt.graph import build, builder_names
from ._base import Reader, InputItem, graph_item


class BuilderReader(Reader):

    def __init__(self, expression: str = None, cap: int = DEFAULT_MATROID_CAP,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the reader.

        :param expression: the builder expression, e.g., "W 4" or "Dual DoubleFan 3"
        :type expression: str
        :param cap: the maximum number of matroid elements
        :type cap: int
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__(cap=cap, logger_name=logger_name, logging_level=logging_level)
        self.expression = expression

    def name(self) -> str:
        """
        Returns the name of the handler, used as sub-command.

        :return: the name
        :rtype: str
        """
        return "from-builder"

    def description(self) -> str:
        """
        Returns a description of the reader.

        :return: the description
        :rtype: str
        """
        return "Generates a graph from a builder expression. Available builders: " + ", ".join(builder_names()) \
               + "; prefix with 'Dual' for the planar dual."

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("-b", "--builder", type=str, help="The builder expression, e.g., 'W 4'.", required=True)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.expression = ns.builder

    def read(self) -> InputItem:
        """
        Builds the graph.

        :return: the parsed input
        :rtype: InputItem
        """
        if self.expression is None:
            raise InputError("No builder expression provided")
        self.logger().info("Building: %s" % self.expression)
        g = build(self.expression)
        return graph_item(g, self.expression, cap=self.cap)
