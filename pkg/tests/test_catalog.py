import pytest

from skein4.app.errors import CatalogError
from skein4.app.services import catalog
from skein4.app.services.catalog.catalog import SHIPPED_CATALOG, catalog_path, load_catalog
from skein4.app.services.tangles import parse_tangle


def test_seeded_from_shipped_corpus(fresh_catalog):
    assert not fresh_catalog.exists()
    assert catalog_path() == fresh_catalog
    assert fresh_catalog.read_text(encoding="utf-8") == SHIPPED_CATALOG.read_text(encoding="utf-8")


def test_list_and_show(fresh_catalog):
    names = [entry.name for entry in catalog.list_entries()]
    assert {"trefoil", "4_1", "9_42"} <= set(names)
    assert catalog.show("4_1") == "N(rat(2 2))"
    assert catalog.show("trefoil") == "torus(2,3)"
    with pytest.raises(CatalogError):
        catalog.show("10_161")


def test_add_round_trip(fresh_catalog):
    entry = catalog.add("hopf", "torus(2,2)", "Hopf link")
    assert entry.to_line() == "hopf\ttorus(2,2)\tHopf link"
    assert catalog.get_entry("hopf").note == "Hopf link"
    assert parse_tangle("@hopf") == parse_tangle("torus(2,2)", use_catalog=False)
    assert fresh_catalog.read_text(encoding="utf-8").endswith("hopf\ttorus(2,2)\tHopf link\n")


@pytest.mark.parametrize(
    "name, expression",
    [("trefoil", "torus(2,3)"), ("bad name", "torus(2,3)"), ("", "torus(2,3)"), ("broken", "N(int(2)"), ("dangling", "@nowhere")],
)
def test_add_rejects(fresh_catalog, name, expression):
    with pytest.raises(CatalogError):
        catalog.add(name, expression)


def test_references_nest(fresh_catalog):
    catalog.add("knot_alias", "@trefoil")
    assert parse_tangle("@knot_alias") == parse_tangle("torus(2,3)", use_catalog=False)


def test_cyclic_references(fresh_catalog):
    catalog_path()
    with open(fresh_catalog, "a", encoding="utf-8") as handle:
        handle.write("cyc_a\t@cyc_b\ncyc_b\t@cyc_a\n")
    with pytest.raises(CatalogError):
        parse_tangle("@cyc_a")


def test_malformed_line(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("# comment\n\nonly_a_name\n", encoding="utf-8")
    with pytest.raises(CatalogError):
        load_catalog(path)


def test_comments_and_notes(tmp_path):
    path = tmp_path / "small.tsv"
    path.write_text("# name\texpression\tnote\nunknot\tN(braid2[])\n\ntwo\tN(int(0))\tunlink\n", encoding="utf-8")
    entries = load_catalog(path)
    assert list(entries) == ["unknot", "two"]
    assert entries["two"].note == "unlink"
    assert entries["unknot"].to_line() == "unknot\tN(braid2[])"


def test_shipped_entries_parse():
    for entry in load_catalog(SHIPPED_CATALOG).values():
        assert parse_tangle(entry.expression, use_catalog=False).arity == 0
