import pytest

from grothmodt.catalog import CatalogRow, FIXED_ROWS, catalog_rows, family_rows
from grothmodt.commands import cell_matches
from grothmodt.engine import ClassModT, compute_classes
from grothmodt.graph import build
from grothmodt.reader import graph_item


def _compute(row: CatalogRow):
    m = graph_item(build(row.builder), row.builder).matroid
    y, ytorus = compute_classes(m)
    return y.result, ytorus.result


def test_rows():
    rows = catalog_rows([3, 4])
    assert rows[-len(FIXED_ROWS):] == FIXED_ROWS
    builders = [r.builder for r in rows]
    assert len(builders) == len(set(builders))
    for row in rows:
        build(row.builder)


def test_family_sizes():
    labels = [r.label for r in family_rows([3, 5])]
    assert "C_5" in labels
    assert "B_2" in labels
    assert "W_5" not in labels
    assert "Whats_3" in labels


def test_cell_matches():
    assert cell_matches(ClassModT.known(2), 2)
    assert not cell_matches(ClassModT.known(2), 3)
    assert cell_matches(ClassModT.known(2), None)
    assert cell_matches(ClassModT.unknown("x"), None)
    assert not cell_matches(ClassModT.unknown("x"), 1)
    assert cell_matches(ClassModT.unknown("x"), 1, tolerate_unknown=True)


@pytest.mark.parametrize("row", [r for r in family_rows([3, 4]) if r.builder.split()[0] in ("T", "C", "B", "W")],
                         ids=lambda r: r.label)
def test_small_families(row):
    y, ytorus = _compute(row)
    assert cell_matches(y, row.expected_y)
    assert cell_matches(ytorus, row.expected_ytorus, row.tolerate_unknown)


@pytest.mark.slow
@pytest.mark.parametrize("row", catalog_rows([3, 4]), ids=lambda r: r.label)
def test_catalog(row):
    y, ytorus = _compute(row)
    assert cell_matches(y, row.expected_y)
    assert cell_matches(ytorus, row.expected_ytorus, row.tolerate_unknown)
