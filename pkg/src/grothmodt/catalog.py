from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence


@dataclass(frozen=True)
class CatalogRow:
    """
    A graph with the classes expected for it. None means the cell is not checked;
    tolerate_unknown accepts an unknown result for [Y°].
    """
    label: str
    builder: str
    expected_ytorus: Optional[int]
    expected_y: Optional[int]
    tolerate_unknown: bool = False


def _sign(n: int) -> int:
    return (-1) ** (n - 1)


def family_rows(sizes: Sequence[int] = (3, 4, 5)) -> List[CatalogRow]:
    """
    The rows of the graph families, with their closed forms.

    :param sizes: the parameters to instantiate the families with
    :type sizes: Sequence
    :return: the rows
    :rtype: list
    """
    result = []
    for n in range(1, 5):
        delta = 1 if (n == 1) else 0
        result.append(CatalogRow("T_%d" % n, "T %d" % n, delta, delta))
    for n in sizes:
        result.append(CatalogRow("C_%d" % n, "C %d" % n, _sign(n), _sign(n)))
    for n in sorted(set([2] + list(sizes))):
        result.append(CatalogRow("B_%d" % n, "B %d" % n, _sign(n), 1))
    # wheel families only up to n = 4, the divided wheel on 5 spokes has 20 edges
    small = [n for n in sizes if n <= 4]
    for n in small:
        result.append(CatalogRow("W_%d" % n, "W %d" % n, -comb(n, 2), 0))
    for n in small:
        result.append(CatalogRow("Whats_%d" % n, "Whats %d" % n, -comb(n, 2), -comb(n, 2)))
    for n in small:
        result.append(CatalogRow("WhatsOverF_%d" % n, "WhatsOverF %d" % n, comb(n, 2), n - 1))
    for n in small:
        result.append(CatalogRow("WhatsOverFSplit_%d" % n, "WhatsOverFSplit %d" % n, None, -(n - 1)))
    return result


# the fixed graphs with their printed (Y°, Y) pairs
FIXED_ROWS: List[CatalogRow] = [
    CatalogRow("double fan 3", "DoubleFan 3", 10, 0),
    CatalogRow("prism", "Dual DoubleFan 3", 10, 1),
    CatalogRow("prism with chord", "prism-chord", -15, 0),
    CatalogRow("open double fan 4", "OpenDoubleFan 4", 28, 0),
    CatalogRow("dual open double fan 4", "Dual OpenDoubleFan 4", 28, 1),
    CatalogRow("double fan 4", "DoubleFan 4", -36, 0),
    CatalogRow("ladder", "ladder", -36, -2),
    CatalogRow("K_3,3", "K 3 3", 16, 1),
    CatalogRow("octahedron", "octahedron", None, -1, tolerate_unknown=True),
]


def catalog_rows(sizes: Sequence[int] = (3, 4, 5)) -> List[CatalogRow]:
    """
    All rows: the families followed by the fixed graphs.

    :param sizes: the parameters to instantiate the families with
    :type sizes: Sequence
    :return: the rows
    :rtype: list
    """
    return family_rows(sizes) + FIXED_ROWS
