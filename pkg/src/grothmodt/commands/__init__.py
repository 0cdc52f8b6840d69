from ._base import Command, OracleCommand, JobSpec, parse_primes
from ._class import ClassCommand
from ._count import CountCommand
from ._fatnexus import FatNexusCommand
from ._matroid import MatroidCommand
from ._table import TableCommand, cell_matches
from ._verify import VerifyCommand
