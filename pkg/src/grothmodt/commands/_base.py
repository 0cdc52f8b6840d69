import abc
import argparse
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from seppl import Plugin
from wai.logging import LOGGING_WARNING, set_logging_level

from grothmodt.core import DEFAULT_PRIMES, DEFAULT_CRT_BOUND, DEFAULT_MATROID_CAP, DEFAULT_SUBSET_CAP, \
    SUPPORTED_PRIMES, FORMAT_TEXT, FORMAT_JSON, FORMATS, InputError
from grothmodt.engine import EngineContext
from grothmodt.reader import Reader, InputItem, BuilderReader, EdgeListReader, MatrixReader
from grothmodt.writer import Writer, Report, TextWriter, JsonWriter


def parse_primes(value: str) -> Tuple[int, ...]:
    """
    Parses a comma-separated list of primes like "3,5,7".

    :param value: the list to parse
    :type value: str
    :return: the primes
    :rtype: tuple
    """
    try:
        result = tuple(int(x.strip()) for x in value.split(",") if len(x.strip()) > 0)
    except ValueError:
        raise InputError("Invalid list of primes: %s" % value)
    if len(result) == 0:
        raise InputError("No primes specified")
    return result


@dataclass
class JobSpec:
    """
    What to run on which input: exactly one input source plus the options shared by
    the commands.
    """
    builder: Optional[str] = None
    edges: Optional[str] = None
    matrix: Optional[str] = None
    primes: Tuple[int, ...] = DEFAULT_PRIMES
    budget: Optional[int] = None
    bound: int = DEFAULT_CRT_BOUND
    trace: bool = False
    max_depth: Optional[int] = None
    output_format: str = FORMAT_TEXT
    output: Optional[str] = None
    use_references: bool = True
    cap: int = DEFAULT_MATROID_CAP
    subset_cap: int = DEFAULT_SUBSET_CAP

    def validate(self, needs_input: bool = True):
        """
        Checks the options before any work starts.

        :param needs_input: whether the command reads an input
        :type needs_input: bool
        :raises InputError: if the options are inconsistent
        """
        sources = [x for x in [self.builder, self.edges, self.matrix] if x is not None]
        if needs_input and (len(sources) != 1):
            raise InputError("Exactly one of --builder, --edges or --matrix is required, got: %d" % len(sources))
        if (not needs_input) and (len(sources) > 0):
            raise InputError("This command does not read an input")
        for p in self.primes:
            if p not in SUPPORTED_PRIMES:
                raise InputError("Unsupported prime %d, choose from: %s" % (p, ", ".join(str(x) for x in SUPPORTED_PRIMES)))
        if self.bound < 0:
            raise InputError("Bound must be non-negative, got: %d" % self.bound)
        if (self.budget is not None) and (self.budget < 1):
            raise InputError("Budget must be positive, got: %d" % self.budget)
        if self.output_format not in FORMATS:
            raise InputError("Unknown output format: %s" % self.output_format)

    def reader(self, logging_level: str = LOGGING_WARNING) -> Reader:
        """
        Creates the reader plugin for the input source.

        :param logging_level: the logging level for the reader
        :type logging_level: str
        :return: the reader
        :rtype: Reader
        """
        if self.builder is not None:
            return BuilderReader(expression=self.builder, cap=self.cap, logging_level=logging_level)
        if self.edges is not None:
            return EdgeListReader(source=self.edges, cap=self.cap, logging_level=logging_level)
        if self.matrix is not None:
            return MatrixReader(source=self.matrix, cap=self.cap, logging_level=logging_level)
        raise InputError("No input source specified")

    def writer(self, logging_level: str = LOGGING_WARNING) -> Writer:
        """
        Creates the writer plugin for the output format.

        :param logging_level: the logging level for the writer
        :type logging_level: str
        :return: the writer
        :rtype: Writer
        """
        if self.output_format == FORMAT_JSON:
            return JsonWriter(output=self.output, logging_level=logging_level)
        return TextWriter(output=self.output, logging_level=logging_level)

    def engine_context(self, logging_level: str = LOGGING_WARNING) -> EngineContext:
        return EngineContext(subset_cap=self.subset_cap, use_references=self.use_references,
                             logging_level=logging_level)


class Command(Plugin, abc.ABC):
    """
    Ancestor for the sub-commands of the command-line tool.
    """

    def __init__(self, job: JobSpec = None, logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the command.

        :param job: the job to run, default options if None
        :type job: JobSpec
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        super().__init__()
        self.job = JobSpec() if (job is None) else job
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
            name = self.logger_name if (self.logger_name is not None) else ("grothmodt." + self.name())
            self._logger = logging.getLogger(name)
            set_logging_level(self._logger, self.logging_level)
        return self._logger

    def requires_input(self) -> bool:
        """
        Whether the command works on an input graph or matrix.

        :return: True if an input is required
        :rtype: bool
        """
        return True

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        if self.requires_input():
            parser.add_argument("--builder", type=str, help="The builder expression to generate the graph from, e.g., 'W 4' or 'Dual DoubleFan 3'.", required=False, default=None)
            parser.add_argument("--edges", type=str, help="The edge list file to read the graph from.", required=False, default=None)
            parser.add_argument("--matrix", type=str, help="The JSON file with the configuration matrix.", required=False, default=None)
            parser.add_argument("--cap", type=int, help="The maximum number of matroid elements.", required=False, default=DEFAULT_MATROID_CAP)
        parser.add_argument("--subset_cap", type=int, help="The maximum ground size for subset enumerations in the engine.", required=False, default=DEFAULT_SUBSET_CAP)
        parser.add_argument("--no_reference", action="store_true", help="Whether to ignore the classes established outside the rule calculus.", required=False)
        parser.add_argument("--json", action="store_true", help="Whether to output JSON instead of text.", required=False)
        parser.add_argument("-o", "--output", type=str, help="The file to write the report to, stdout if omitted.", required=False, default=None)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.job = JobSpec()
        if self.requires_input():
            self.job.builder = ns.builder
            self.job.edges = ns.edges
            self.job.matrix = ns.matrix
            self.job.cap = ns.cap
        self.job.subset_cap = ns.subset_cap
        self.job.use_references = not ns.no_reference
        self.job.output_format = FORMAT_JSON if ns.json else FORMAT_TEXT
        self.job.output = ns.output

    def execute(self) -> Report:
        """
        Validates the job, reads the input (if any) and runs the command.

        :return: the report
        :rtype: Report
        """
        self.job.validate(needs_input=self.requires_input())
        item = None
        if self.requires_input():
            item = self.job.reader(logging_level=self.logging_level).read()
            self.logger().info("Input: %s" % repr(item.matroid))
        return self._run(item)

    @abc.abstractmethod
    def _run(self, item: Optional[InputItem]) -> Report:
        """
        Performs the actual work.

        :param item: the input, None if the command does not need one
        :type item: InputItem
        :return: the report
        :rtype: Report
        """
        raise NotImplementedError()


class OracleCommand(Command, abc.ABC):
    """
    Ancestor for commands that count points.
    """

    def _create_argparser(self) -> argparse.ArgumentParser:
        """
        Creates an argument parser. Derived classes need to fill in the options.

        :return: the parser
        :rtype: argparse.ArgumentParser
        """
        parser = super()._create_argparser()
        parser.add_argument("--primes", type=parse_primes, help="The comma-separated primes to count over, from: " + ",".join(str(x) for x in SUPPORTED_PRIMES) + ".", required=False, default=",".join(str(x) for x in DEFAULT_PRIMES))
        parser.add_argument("--budget", type=int, help="The maximum number of polynomial evaluations per prime, default from the environment or 10^8.", required=False, default=None)
        return parser

    def _apply_args(self, ns: argparse.Namespace):
        """
        Initializes the object with the arguments of the parsed namespace.

        :param ns: the parsed arguments
        :type ns: argparse.Namespace
        """
        super()._apply_args(ns)
        self.job.primes = ns.primes
        self.job.budget = ns.budget
