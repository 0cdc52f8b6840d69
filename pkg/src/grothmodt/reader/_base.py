import abc
import argparse
import logging
from dataclasses import dataclass
from typing import Optional

from seppl import Plugin
from wai.logging import LOGGING_WARNING, set_logging_level

from grothmodt.core import DEFAULT_MATROID_CAP, InputError
from grothmodt.config import Configuration, ConfigPolynomial, config_polynomial, incidence_configuration
from grothmodt.graph import Multigraph
from grothmodt.matroid import Matroid, from_graph, from_plane_graph


@dataclass
class InputItem:
    """
    A parsed input: the matroid for the engine and the configuration for the oracle.
    """
    name: str
    matroid: Matroid
    configuration: Configuration
    graph: Optional[Multigraph] = None

    def polynomial(self, cap: int = DEFAULT_MATROID_CAP) -> ConfigPolynomial:
        return config_polynomial(self.configuration, cap=cap)


def graph_item(g: Multigraph, name: str, cap: int = DEFAULT_MATROID_CAP) -> InputItem:
    """
    Wraps a graph, attaching the dual when the graph comes with faces.

    :param g: the graph
    :type g: Multigraph
    :param name: the name of the input
    :type name: str
    :param cap: the maximum number of edges
    :type cap: int
    :return: the item
    :rtype: InputItem
    :raises InputError: if the graph consists of loops only
    """
    if all(g.is_loop(label) for label in g.edge_labels):
        raise InputError("Input consists of loops only: %s" % name)
    m = from_plane_graph(g, cap=cap) if (g.faces is not None) else from_graph(g, cap=cap)
    return InputItem(name=name, matroid=m, configuration=incidence_configuration(g), graph=g)


class Reader(Plugin, abc.ABC):
    """
    Ancestor for plugins that turn a source into an InputItem.
    """

    def __init__(self, cap: int = DEFAULT_MATROID_CAP, logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the reader.

        :param cap: the maximum number of matroid elements
        :type cap: int
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__()
        self.cap = cap
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
        parser.add_argument("--cap", type=int, help="The maximum number of matroid elements.", required=False, default=DEFAULT_MATROID_CAP)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.cap = ns.cap

    @abc.abstractmethod
    def read(self) -> InputItem:
        """
        Loads the input.

        :return: the parsed input
        :rtype: InputItem
        """
        raise NotImplementedError()
