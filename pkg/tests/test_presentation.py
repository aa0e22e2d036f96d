from collections import deque

import numpy as np
import pytest

from supercomm import (
    Family,
    FamilySpec,
    InvalidParams,
    PresentationSyntaxError,
    UnknownGenerator,
    enumerate_group,
    family_presentation,
    parse_presentation,
    sweep_specs,
)
from supercomm.presentation import free_reduce, invert


def test_parse_dihedral_d6():
    p = parse_presentation("<a,b | a^3=b^2=1, b*a*b^-1=a^-1>")
    assert p.generators == ("a", "b")
    assert len(p.relators) == 3
    # the chain a^3 = b^2 = 1 expands pairwise
    assert p.relators[0] == (1, 1, 1, -2, -2)
    assert p.relators[1] == (2, 2)
    # b a b^-1 (a^-1)^-1
    assert p.relators[2] == (2, 1, -2, 1)


def test_parse_trivial():
    p = parse_presentation("<a | a=1>")
    assert p.generators == ("a",)
    assert p.relators == ((1,),)


def test_parse_q8():
    p = parse_presentation("<a,b | a^4=1, a^2=b^2, b*a*b^-1=a^-1>")
    assert p.relators == ((1, 1, 1, 1), (1, 1, -2, -2), (2, 1, -2, 1))
    assert enumerate_group(p).size == 8


def test_juxtaposition_and_whitespace():
    a = parse_presentation("<a,b|a^3=b^2=1,bab^-1=a^-1>")
    b = parse_presentation(" < a , b | a ^ 3 = b ^ 2 = 1 , b a b^-1 = a^-1 > ")
    assert a == b


def test_bare_word_means_identity():
    assert parse_presentation("<x | x^5>").relators == ((1,) * 5,)


def test_multichar_generators_prefer_longest():
    p = parse_presentation("<x, xy | xy^2, x^3>")
    assert p.relators == ((2, 2), (1, 1, 1))


@pytest.mark.parametrize("text", [
    "a,b | a^2>",
    "<a,b a^2>",
    "<a | a^>",
    "<a | a^2",
    "<a | a^2> extra",
    "<a,a | a>",
    "<a | >",
    "<a | a*>",
    "<a | 1>",
])
def test_syntax_errors(text):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert info.value.position >= 0


def test_unknown_generator():
    with pytest.raises(UnknownGenerator) as info:
        parse_presentation("<a,b | a^2=c>")
    assert info.value.symbol == "c"
    assert info.value.position == 11


def test_free_reduce_and_invert():
    assert free_reduce((1, 2, -2, -1, 1)) == (1,)
    assert invert((1, -2, 2, 2)) == (-2, -2, 2, -1)


@pytest.mark.parametrize("spec", sweep_specs(max_order=60), ids=str)
def test_render_round_trip(spec):
    p = family_presentation(spec)
    assert parse_presentation(p.render()) == p


def test_family_presentation_d10():
    p = family_presentation(FamilySpec.of("dihedral", n=5))
    assert p == parse_presentation("<a,b | a^5=b^2=1, b*a*b^-1=a^-1>")
    assert FamilySpec.of("dihedral", n=5).expected_order() == 10


def test_family_presentation_qd16():
    spec = FamilySpec.of("qd", m=4)
    assert family_presentation(spec) == parse_presentation("<a,b | a^8=b^2=1, b*a*b^-1=a^3>")
    assert spec.expected_order() == 16


@pytest.mark.parametrize("family,kw", [
    ("m2mn", {"m": 4, "n": 1}),
    ("m2mn", {"m": 2, "n": 1}),
    ("m2mn", {"m": 3, "n": 0}),
    ("dihedral", {"n": 2}),
    ("quaternion", {"n": 1}),
    ("semidihedral", {"n": 1}),
    ("qd", {"m": 3}),
    ("v8n", {"n": 1}),
    ("u6n", {"n": 0}),
    ("dihedral", {}),
])
def test_invalid_params(family, kw):
    with pytest.raises(InvalidParams):
        FamilySpec.of(family, **kw)


def test_invalid_params_names_bound():
    with pytest.raises(InvalidParams, match="m = 4"):
        FamilySpec.of("m2mn", m=4, n=1)


def test_family_aliases():
    assert Family.parse("D") is Family.DIHEDRAL
    assert Family.parse("dicyclic") is Family.QUATERNION
    assert Family.parse("quasidihedral") is Family.QUASIDIHEDRAL
    with pytest.raises(InvalidParams):
        Family.parse("cyclic")


@pytest.mark.parametrize("spec", sweep_specs(max_order=96), ids=str)
def test_enumerated_order_matches(spec):
    assert enumerate_group(family_presentation(spec), spec.expected_order()).size == spec.expected_order()


def test_sweep_is_sorted_and_bounded():
    specs = sweep_specs(max_order=400)
    assert all(s.expected_order() <= 400 for s in specs)
    order = [list(Family).index(s.family) for s in specs]
    assert order == sorted(order)
    assert len(set(specs)) == len(specs)
    assert FamilySpec(Family.M2MN, (4, 1)) not in specs


def _homomorphism(G, H, images):
    """Extend generator images to a map G -> H by walking words; None if ill-defined."""
    phi = {G.identity: H.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for sym, g in G.generator_map.items():
            y, target = G.mul(x, g), H.mul(phi[x], images[sym])
            if y in phi:
                if phi[y] != target:
                    return None
            else:
                phi[y] = target
                queue.append(y)
    return phi


@pytest.mark.parametrize("m", [4, 5, 6])
def test_sd_and_qd_isomorphic(m):
    qd = enumerate_group(family_presentation(FamilySpec.of("qd", m=m)))
    sd = enumerate_group(family_presentation(FamilySpec.of("semidihedral", n=2 ** (m - 3))))
    assert qd.size == sd.size == 2 ** m
    phi = _homomorphism(qd, sd, {"a": sd.generator_map["a"], "b": sd.generator_map["b"]})
    assert phi is not None
    assert sorted(phi.values()) == list(range(sd.size))
    f = np.array([phi[x] for x in range(qd.size)])
    assert np.array_equal(f[qd.table], sd.table[np.ix_(f, f)])
