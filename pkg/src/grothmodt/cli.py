import argparse
import logging
import sys
import traceback
from typing import Dict, List

from wai.logging import init_logging, add_logging_level, set_logging_level, LOGGING_WARNING

from grothmodt.core import ENV_LOGLEVEL, EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_MISMATCH, COMMANDS
from grothmodt.core import GrothmodtError, InputError, CapExceededError, BudgetExceededError, CrtError, IdentityViolation
from grothmodt.commands import Command, ClassCommand, CountCommand, VerifyCommand, TableCommand, FatNexusCommand, MatroidCommand

PROG = "grothmodt"

_logger = logging.getLogger(PROG)


def available_commands(logging_level: str = LOGGING_WARNING) -> Dict[str, Command]:
    """
    Instantiates all command plugins.

    :param logging_level: the logging level for the commands
    :type logging_level: str
    :return: name -> command
    :rtype: dict
    """
    result = dict()
    for cls in [ClassCommand, CountCommand, VerifyCommand, TableCommand, FatNexusCommand, MatroidCommand]:
        cmd = cls(logging_level=logging_level)
        result[cmd.name()] = cmd
    return result


def _epilog() -> str:
    lines = ["commands:"]
    for name, cmd in available_commands().items():
        lines.append("  %-10s %s" % (name, cmd.description()))
    lines.append("")
    lines.append("Use '%s <command> --help' for the options of a command." % PROG)
    return "\n".join(lines)


def exit_code_for(e: Exception) -> int:
    """
    Maps an exception to the exit code of the tool.

    :param e: the exception
    :type e: Exception
    :return: the exit code
    :rtype: int
    """
    if isinstance(e, (CapExceededError, BudgetExceededError)):
        return EXIT_BUDGET
    if isinstance(e, (IdentityViolation, CrtError)):
        return EXIT_MISMATCH
    return EXIT_USAGE


def main(args: List[str] = None) -> int:
    """
    Runs the command-line tool.

    :param args: the command-line arguments, uses sys.argv if None
    :type args: list
    :return: the exit code
    :rtype: int
    """
    init_logging(env_var=ENV_LOGLEVEL)
    parser = argparse.ArgumentParser(
        description="Grothendieck classes modulo the torus class of configuration hypersurface complements.",
        prog=PROG,
        epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    add_logging_level(parser, short_opt="-l")
    parser.add_argument("command", choices=COMMANDS, help="The command to run.")
    parser.add_argument("options", nargs=argparse.REMAINDER, help="The options for the command.")
    try:
        ns = parser.parse_args(args)
    except SystemExit as e:
        return EXIT_OK if (e.code in (None, 0)) else EXIT_USAGE
    set_logging_level(_logger, ns.logging_level)

    cmd = available_commands(logging_level=ns.logging_level)[ns.command]
    try:
        cmd.parse_args(ns.options)
    except SystemExit as e:
        return EXIT_OK if (e.code in (None, 0)) else EXIT_USAGE
    except InputError as e:
        _logger.error(str(e))
        return exit_code_for(e)

    try:
        report = cmd.execute()
        cmd.job.writer(logging_level=ns.logging_level).write(report)
        return report.exit_code
    except InputError as e:
        _logger.error(str(e))
        return exit_code_for(e)
    except GrothmodtError as e:
        _logger.error("%s: %s" % (type(e).__name__, str(e)))
        return exit_code_for(e)


def sys_main() -> int:
    """
    Runs the main function using the system cli arguments, and
    returns a system error code.

    :return: the exit code
    :rtype: int
    """
    try:
        return main()
    except Exception:
        print(traceback.format_exc())
        return 1


if __name__ == '__main__':
    sys.exit(sys_main())
