from typing import List

from grothmodt.core import RULE_CITATIONS
from ._classes import TraceNode


def _format_coefficient(c: int) -> str:
    if c == 1:
        return "+ "
    if c == -1:
        return "- "
    return "%+d * " % c


def explain(trace: TraceNode, max_depth: int = None) -> str:
    """
    Renders the rule tree, one node per line, with the statement behind each rule.

    :param trace: the root of the trace
    :type trace: TraceNode
    :param max_depth: the maximum depth to render, None for all
    :type max_depth: int
    :return: the text
    :rtype: str
    """
    lines: List[str] = []
    _render(trace, "", "", 0, max_depth, lines)
    return "\n".join(lines)


def _render(node: TraceNode, indent: str, prefix: str, depth: int, max_depth: int, lines: List[str]):
    line = "%s%s%s(%s) = %s  [%s: %s]" % (
        indent, prefix, node.target, node.description, str(node.result), node.rule, RULE_CITATIONS.get(node.rule, "?"))
    if node.note is not None:
        line += " (%s)" % node.note
    if not node.result.is_known:
        line += " -- %s" % node.result.reason
    lines.append(line)
    if len(node.children) == 0:
        return
    if (max_depth is not None) and (depth >= max_depth):
        lines.append("%s    ..." % indent)
        return
    if node.constant != 0:
        lines.append("%s    %+d (constant)" % (indent, node.constant))
    for c, child in zip(node.coefficients, node.children):
        _render(child, indent + "    ", _format_coefficient(c), depth + 1, max_depth, lines)
