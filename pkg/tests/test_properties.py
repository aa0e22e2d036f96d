from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import family_group
from supercomm import (
    CliqueJoinForm,
    Graph,
    Partition,
    Presentation,
    build_form,
    complete,
    conjugacy_partition,
    generalized_composition,
    hansen_check,
    m1,
    m2,
    normalize,
    order_partition,
    parse_presentation,
    recognize_form,
    super_commuting_graph,
    zagreb_closed_form,
)
from supercomm.presentation import free_reduce

symbols = st.lists(st.from_regex(r"[a-z][a-z0-9_]{0,3}", fullmatch=True), min_size=1, max_size=4, unique=True)


@st.composite
def presentations(draw):
    gens = draw(symbols)
    k = len(gens)
    letter = st.integers(1, k).flatmap(lambda i: st.sampled_from([i, -i]))
    words = st.lists(letter, min_size=1, max_size=12)
    rels = draw(st.lists(words, min_size=1, max_size=5))
    rels = [free_reduce(tuple(r)) for r in rels]
    rels = [r for r in rels if r] or [(1,)]
    return Presentation(tuple(gens), tuple(rels))


@given(presentations())
def test_render_parse_round_trip(p):
    assert parse_presentation(p.render()) == p


forms = st.builds(
    lambda a, parts: normalize(a, parts),
    st.integers(0, 8),
    st.lists(st.integers(1, 9), max_size=6),
).filter(lambda f: f.n_vertices > 0)


@given(forms)
def test_form_round_trip_and_closed_form(f):
    g = build_form(f)
    assert recognize_form(g) == f
    assert zagreb_closed_form(f) == (m1(g), m2(g))


@given(forms, st.randoms(use_true_random=False))
def test_recognition_is_label_free(f, rnd):
    g = build_form(f)
    perm = list(range(g.n_vertices))
    rnd.shuffle(perm)
    shuffled = Graph(g.adjacency[np.ix_(perm, perm)])
    assert recognize_form(shuffled) == f
    assert (m1(shuffled), m2(shuffled)) == (m1(g), m2(g))


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_indices_match_definitions(g):
    deg = [len(g.neighbors(v)) for v in range(g.n_vertices)]
    edges = g.edges()
    assert m1(g) == sum(d * d for d in deg)
    assert m2(g) == sum(deg[u] * deg[v] for u, v in edges)
    assert sum(deg) == 2 * len(edges) == 2 * g.n_edges


@given(graphs())
def test_hansen_verdict_is_exact(g):
    r = hansen_check(g)
    if g.n_edges == 0:
        assert r.vacuous and r.holds and r.margin_numerator == 0
    else:
        lhs = Fraction(r.m2, r.n_edges)
        rhs = Fraction(r.m1, r.n_vertices)
        assert r.holds == (lhs >= rhs)
        assert r.strict == (lhs > rhs)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=30))
def test_partition_from_labels(labels):
    p = Partition.from_labels(labels)
    assert sorted(x for b in p.blocks for x in b) == list(range(len(labels)))
    for b in p.blocks:
        assert len({labels[x] for x in b}) == 1
    assert [b[0] for b in p.blocks] == sorted(b[0] for b in p.blocks)


@given(st.integers(1, 5), st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_composition_of_cliques_over_complete_is_complete(k, sizes):
    parts = [complete(s) for s in sizes[:k]] + [complete(1)] * max(0, k - len(sizes))
    g = generalized_composition(complete(k), parts)
    assert g.same_as(complete(sum(p.n_vertices for p in parts)))


GROUPS = [("dihedral", {"n": 6}), ("quaternion", {"n": 3}), ("v8n", {"n": 3}), ("u6n", {"n": 3}), ("m2mn", {"m": 6, "n": 2})]


@settings(max_examples=60)
@given(st.sampled_from(GROUPS), st.data())
def test_group_laws_on_random_elements(choice, data):
    G = family_group(choice[0], **choice[1])
    x, y, z = (data.draw(st.integers(0, G.size - 1)) for _ in range(3))
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    assert G.mul(x, G.inverse(x)) == G.identity
    cl, od = conjugacy_partition(G), order_partition(G)
    conj = G.mul(G.mul(x, y), G.inverse(x))
    assert cl.block_of[conj] == cl.block_of[y]
    assert od.block_of[conj] == od.block_of[y]
    assert G.orders[conj] == G.orders[y]


@settings(max_examples=40)
@given(st.sampled_from(GROUPS), st.lists(st.integers(0, 10 ** 6), min_size=1, max_size=40))
def test_coarser_partition_gives_more_edges(choice, labels):
    G = family_group(choice[0], **choice[1])
    fine = conjugacy_partition(G)
    # merge conjugacy classes by a random labelling to get a coarser partition
    tag = [labels[b % len(labels)] % 3 for b in range(len(fine))]
    coarse = Partition.from_labels([tag[int(fine.block_of[x])] for x in range(G.size)])
    assert fine.refines(coarse)
    assert super_commuting_graph(G, fine).is_subgraph_of(super_commuting_graph(G, coarse))


def test_form_type_is_hashable_and_ordered():
    assert len({CliqueJoinForm(1, (2, 1)), normalize(1, [1, 2])}) == 1
    assert CliqueJoinForm(1, ()) < CliqueJoinForm(2, ())
