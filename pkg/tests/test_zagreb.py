import itertools
import json
from fractions import Fraction

import pytest

from conftest import family_group, group_of
from supercomm import (
    FamilySpec,
    Graph,
    NotInCatalog,
    build_form,
    complete,
    conjugacy_partition,
    edge_count_form,
    empty_graph,
    equality_partition,
    hansen_check,
    lemma_closed_form,
    m1,
    m2,
    normalize,
    paper_polynomials,
    super_commuting_graph,
    zagreb_closed_form,
)
from supercomm.zagreb import report_from_values
from test_structure import all_forms


def star_plus_triangle():
    edges = [(0, i) for i in range(1, 6)] + [(6, 7), (6, 8), (7, 8)]
    return Graph.from_edges(9, edges)


def test_direct_indices_examples():
    assert (m1(complete(4)), m2(complete(4))) == (36, 54)
    d6 = family_group("dihedral", n=3)
    es = super_commuting_graph(d6, equality_partition(d6))
    assert (m1(es), m2(es)) == (36, 39)
    g = star_plus_triangle()
    assert (m1(g), m2(g)) == (42, 37)
    assert (m1(empty_graph(3)), m2(empty_graph(3))) == (0, 0)


def test_closed_form_examples():
    assert zagreb_closed_form(normalize(1, [1, 1, 1, 2])) == (36, 39)
    for k in range(1, 9):
        assert zagreb_closed_form(normalize(k)) == (k * (k - 1) ** 2, k * (k - 1) // 2 * (k - 1) ** 2)
    f = normalize(2, [3, 3, 4])
    g = build_form(f)
    assert zagreb_closed_form(f) == (m1(g), m2(g))


def test_closed_form_matches_direct_on_all_small_forms():
    for f in all_forms(10):
        g = build_form(f)
        assert zagreb_closed_form(f) == (m1(g), m2(g))
        assert edge_count_form(f) == g.n_edges
        assert int(g.degrees.sum()) == 2 * g.n_edges


def test_edge_count_examples():
    assert edge_count_form(normalize(1, [1, 1, 1, 2])) == 6
    assert edge_count_form(normalize(7)) == 21
    f = normalize(2, [6, 4, 4])
    # C(2,2) + 2*14 + C(6,2) + 2*C(4,2)
    assert edge_count_form(f) == build_form(f).n_edges == 56


def test_lemma_matches_generalized_formula():
    for a, b, c, d in itertools.product(range(1, 7), repeat=4):
        f = normalize(a, [b] * d + [c])
        assert lemma_closed_form(a, b, c, d) == zagreb_closed_form(f)


def test_hansen_examples():
    r = hansen_check(complete(6))
    assert (r.margin_numerator, r.holds, r.strict) == (0, True, False)
    r = hansen_check(star_plus_triangle())
    assert r.margin_numerator == 37 * 9 - 42 * 8 == -3
    assert not r.holds
    d6 = family_group("dihedral", n=3)
    r = hansen_check(super_commuting_graph(d6, equality_partition(d6)))
    assert r.margin_numerator == 39 * 6 - 36 * 6 == 18
    assert r.holds and r.strict


def test_hansen_vacuous_and_invalid():
    r = hansen_check(empty_graph(1))
    assert r.vacuous and r.holds and r.margin_numerator == 0
    with pytest.raises(ValueError):
        hansen_check(empty_graph(0))


def test_report_json_uses_exact_strings():
    big = 10 ** 30
    r = report_from_values(3, 2, big, big + 1)
    data = json.loads(json.dumps(r.to_json()))
    assert data["m1"] == str(big)
    assert int(data["margin_numerator"]) == (big + 1) * 3 - big * 2
    assert data["holds"] is True


def test_paper_polynomial_examples():
    q = paper_polynomials(FamilySpec.of("quaternion", n=2), "equality")
    assert q.m1 == 8 * 8 + 16 * 4 + 12 * 2 == 152
    d = paper_polynomials(FamilySpec.of("dihedral", n=3), "equality")
    assert d.as_tuple() == (36, 39, 6, 6)
    with pytest.raises(NotInCatalog):
        paper_polynomials(FamilySpec.of("m2mn", m=3, n=1), "order")


def _direct(spec, relation, partition):
    G = group_of(spec)
    g = super_commuting_graph(G, partition(G))
    return (m1(g), m2(g), g.n_vertices, g.n_edges)


@pytest.mark.parametrize("family,n,relation", [
    ("dihedral", 5, "conjugacy"),
    ("dihedral", 6, "conjugacy"),
    ("quaternion", 4, "conjugacy"),
    ("v8n", 3, "conjugacy"),
    ("semidihedral", 3, "conjugacy"),
    ("u6n", 2, "equality"),
])
def test_printed_values_agree(family, n, relation):
    spec = FamilySpec.of(family, n=n)
    partition = conjugacy_partition if relation == "conjugacy" else equality_partition
    assert paper_polynomials(spec, relation).as_tuple() == _direct(spec, relation, partition)


def test_printed_values_that_disagree():
    # hand-checked against the built graphs; the printed expressions are off
    d8 = paper_polynomials(FamilySpec.of("dihedral", n=4), "conjugacy")
    assert (d8.m2, _direct(FamilySpec.of("dihedral", n=4), "conjugacy", conjugacy_partition)[1]) == (332, 328)
    q12 = paper_polynomials(FamilySpec.of("quaternion", n=3), "conjugacy")
    assert (q12.m1, zagreb_closed_form(normalize(2, [4, 6]))[0]) == (588, 636)
    u6 = paper_polynomials(FamilySpec.of("u6n", n=1), "conjugacy")
    assert u6.e == Fraction(13, 2)
    assert edge_count_form(normalize(1, [2, 3])) == 9
