from typing import Iterable, List

from grothmodt.core import InputError
from ._multigraph import Multigraph

FACE_DIRECTIVE = "# face:"


def parse_edge_list(lines: Iterable[str], name: str = None) -> Multigraph:
    """
    Parses an edge list, one edge per line: "u v [label]". Text after "#" is ignored,
    except for "# face: e1 e2 ..." lines which declare the faces of a plane graph.
    Unlabeled edges are named e1, e2, ... by position.

    :param lines: the lines to parse
    :type lines: Iterable
    :param name: the name for the graph
    :type name: str
    :return: the graph
    :rtype: Multigraph
    """
    vertices = []
    seen = set()
    edges = []
    faces = []
    for index, line in enumerate(lines):
        line_no = index + 1
        stripped = line.strip()
        if stripped.startswith(FACE_DIRECTIVE):
            faces.append(stripped[len(FACE_DIRECTIVE):].split())
            continue
        if "#" in stripped:
            stripped = stripped[:stripped.index("#")].strip()
        if len(stripped) == 0:
            continue
        tokens = stripped.split()
        if len(tokens) not in (2, 3):
            raise InputError("Expected 'u v [label]', got: %s" % line.rstrip(), line=line_no)
        label = tokens[2] if (len(tokens) == 3) else ("e%d" % (len(edges) + 1))
        if label in [e[0] for e in edges]:
            raise InputError("Duplicate edge label: %s" % label, line=line_no)
        for v in tokens[:2]:
            if v not in seen:
                seen.add(v)
                vertices.append(v)
        edges.append((label, tokens[0], tokens[1]))
    if len(edges) == 0:
        raise InputError("No edges found")
    return Multigraph(vertices, edges, faces=faces if (len(faces) > 0) else None, name=name)


def read_edge_list(path: str) -> Multigraph:
    """
    Reads the edge list from the file.

    :param path: the file to read
    :type path: str
    :return: the graph
    :rtype: Multigraph
    """
    with open(path, "r") as fp:
        return parse_edge_list(fp.readlines(), name=path)


def format_edge_list(g: Multigraph) -> str:
    """
    Turns the graph into edge list text, faces included as directives.

    :param g: the graph to format
    :type g: Multigraph
    :return: the text
    :rtype: str
    """
    lines: List[str] = []
    if g.name is not None:
        lines.append("# %s" % g.name)
    for label, u, v in g.edges:
        lines.append("%s %s %s" % (u, v, label))
    if g.faces is not None:
        for face in g.faces:
            lines.append("%s %s" % (FACE_DIRECTIVE, " ".join(face)))
    return "\n".join(lines) + "\n"


def write_edge_list(g: Multigraph, path: str):
    with open(path, "w") as fp:
        fp.write(format_edge_list(g))
