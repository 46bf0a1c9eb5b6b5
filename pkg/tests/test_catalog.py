import json

import pytest

from stabpoly.canon import canonical_form, is_isomorphic
from stabpoly.catalog import (
    H1_CENTER,
    H2_LABEL_BIJECTION,
    H2_NAMED_DELETIONS,
    CatalogEntry,
    build_h1,
    build_h2,
    build_h3,
    h2_named_deletion_graph,
    load_catalog,
    map_named_deletions,
    save_catalog,
)
from stabpoly.errors import DomainError
from stabpoly.graphs import Graph, bits
from stabpoly.modular import is_prime
from stabpoly.polytope import full_facets, has_clique_cutset
from stabpoly.recognition import is_p6_triangle_free, is_triangle_free


def folded_5cube():
    edges = [
        (a, b)
        for a in range(16)
        for b in range(a + 1, 16)
        if ((a ^ b).bit_count() in (1, 4))
    ]
    return Graph(16, edges)


def test_h2_basic_structure():
    h2 = build_h2()
    assert h2.n == 16 and h2.edge_count() == 40
    assert all(h2.degree(v) == 5 for v in range(16))
    assert is_p6_triangle_free(h2)
    assert is_prime(h2)
    assert h2.labels == H2_LABEL_BIJECTION


def test_h2_is_folded_5cube():
    assert is_isomorphic(build_h2(), folded_5cube())


def test_h1_basic_structure():
    h1 = build_h1()
    assert h1.n == 16 and h1.is_connected()
    assert is_prime(h1)
    assert not is_triangle_free(h1)  # the superposition carries triangles
    assert h1.degree(H1_CENTER) == 5


def test_h3_basic_structure():
    h3 = build_h3()
    assert h3.n == 15 and h3.is_connected()
    assert is_prime(h3)
    assert is_triangle_free(h3)


def test_named_deletion_graphs():
    h2 = build_h2()
    assert h2_named_deletion_graph("G2") == h2
    g3 = h2_named_deletion_graph("G3")
    assert g3.n == 15
    # every one-vertex deletion is isomorphic (vertex-transitive H2)
    assert canonical_form(g3) == canonical_form(h2.delete([0]))
    sizes = {nm: 16 - len(dels) for nm, dels in H2_NAMED_DELETIONS.items()}
    assert sizes == {
        "G2": 16, "G3": 15, "G4": 14, "G5": 13, "G6": 13, "G7": 12,
        "G8": 12, "G9": 12, "G10": 11, "G11": 11, "G12": 10, "G13": 9,
    }


def test_catalog_contents(catalog):
    names = [e.name for e in catalog]
    assert names[:2] == ["K2", "C5"]
    assert {f"G{i}" for i in range(1, 14)} <= set(names)
    assert len(catalog) == len(set(names))
    by_name = {e.name: e for e in catalog}
    assert by_name["K2"].graph.n == 2
    assert by_name["C5"].graph.n == 5
    assert by_name["G1"].graph.n == 8
    assert by_name["G2"].graph.n == 16
    for e in catalog:
        assert e.phi, e.name
        assert is_p6_triangle_free(e.graph)
        assert is_prime(e.graph)
        assert e.graph.is_connected()
        assert has_clique_cutset(e.graph) is None
        e.validate()


def test_catalog_matches_structure_space(catalog):
    from stabpoly.structure import enumerate_structure_space

    audit = enumerate_structure_space()
    assert set(audit) == {e.canonical for e in catalog}


def test_catalog_small_classes_match_brute_force(catalog):
    from stabpoly.families import triangle_free_graphs
    from stabpoly.recognition import contains_induced_path

    for n in (8, 9):
        brute = set()
        for g in triangle_free_graphs(n):
            if not g.is_connected() or contains_induced_path(g, 6):
                continue
            if is_prime(g) and full_facets(g):
                brute.add(canonical_form(g))
        ours = {e.canonical for e in catalog if e.graph.n == n}
        assert brute == ours


def test_map_named_deletions(catalog):
    report = map_named_deletions(catalog)
    for nm in H2_NAMED_DELETIONS:
        assert report[nm] == nm  # the published H2 deletions keep their names
    # the published H3 deletion sizes are NOT realizable; see decisions ledger
    assert report["h3-deletion-sizes-ok"] is False


def test_phi_of_g2_matches_h2_hull(catalog):
    h2 = build_h2()
    by_name = {e.name: e for e in catalog}
    g2 = by_name["G2"]
    assert len(g2.phi) == len(full_facets(h2))


def test_save_load_round_trip(tmp_path, catalog):
    path = tmp_path / "catalog.json"
    save_catalog(catalog, path)
    again = load_catalog(path)
    assert len(again) == len(catalog)
    for a, b in zip(catalog, again):
        assert a.name == b.name
        assert a.canonical == b.canonical
        assert a.phi == b.phi
        assert a.source == b.source
    # malformed files are rejected
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    with pytest.raises(DomainError):
        load_catalog(bad)
    trunc = tmp_path / "trunc.json"
    trunc.write_text(path.read_text()[:100])
    with pytest.raises(DomainError):
        load_catalog(trunc)


def test_h2_single_deletions_all_isomorphic():
    h2 = build_h2()
    forms = {canonical_form(h2.delete([v])) for v in range(16)}
    assert len(forms) == 1
