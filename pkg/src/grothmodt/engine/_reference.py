from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from grothmodt.core import TARGET_Y
from grothmodt.graph import build
from grothmodt.matroid import Matroid, from_graph


@dataclass(frozen=True)
class ReferenceClass:
    """
    A class established outside the rule calculus, attached to the matroid of a builder
    expression. It applies to every matroid isomorphic to that one.
    """
    builder: str
    target: str
    value: int
    note: str


# computed with computer algebra (Grothendieck class of the hypersurface)
DEFAULT_REFERENCES: List[ReferenceClass] = [
    ReferenceClass("K 3 3", TARGET_Y, 1, "computer algebra"),
    ReferenceClass("octahedron", TARGET_Y, -1, "computer algebra"),
]


def reference_table(references: List[ReferenceClass]) -> Dict[Tuple, Tuple[ReferenceClass, Matroid]]:
    """
    Keys the references by (target, matroid key) of the builder's labeling.

    :param references: the references to index
    :type references: list
    :return: the lookup table, with the matroid each reference belongs to
    :rtype: dict
    """
    result = dict()
    for ref in references:
        m = from_graph(build(ref.builder))
        result[(ref.target, m.key())] = (ref, m)
    return result


def lookup_reference(table: Dict[Tuple, Tuple[ReferenceClass, Matroid]], target: str,
                     m: Matroid) -> Optional[ReferenceClass]:
    """
    Finds the reference for the matroid: by key first, then up to relabeling.

    :param table: the table generated by reference_table
    :type table: dict
    :param target: the target to look up
    :type target: str
    :param m: the matroid
    :type m: Matroid
    :return: the reference, None if there is none
    :rtype: ReferenceClass
    """
    entry = table.get((target, m.key()))
    if entry is not None:
        return entry[0]
    for (t, _), (ref, reference) in table.items():
        if (t == target) and m.is_isomorphic(reference):
            return ref
    return None
