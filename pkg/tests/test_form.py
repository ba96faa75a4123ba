from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from gradus.errors import FiniteModulus, OnWall
from gradus.facets import alcove_classes
from gradus.form import build_form_space, pairing_yy, tau
from gradus.laurent import FieldScalar, LaurentScalar, as_field, parse_laurent
from gradus.linalg import q_rank
from gradus.rootsys import INF, Grading, RootSystem, grading_from_cocharacter

P = parse_laurent


def grading(label, y=None, m=1):
    s = RootSystem.from_cartan_type(label)
    return grading_from_cocharacter(s, y if y is not None else [0] * s.dim_Y, m)


A1 = grading("A1")


def tau_oracle(y, y2, g, delta=1):
    s = g.system
    p = [s.pair(y, a) for a in s.roots]
    q = [s.pair(y2, a) for a in s.roots]
    if g.finite:
        first = [i for i in range(s.n_roots) if g.degrees[i] == 1 % g.m]
        a = sum(1 for i in first if (p[i] - 1) * (q[i] - 1) < 0)
    else:
        a = sum(1 for i in range(s.n_roots) if g.degrees[i] == delta and p[i] * q[i] < 0)
    b = sum(1 for i in range(s.n_roots) if g.degrees[i] == 0 and p[i] * q[i] < 0)
    return a - b


def pairing_oracle(y, y2, g):
    W0 = g.W0
    total = LaurentScalar()
    for k in range(len(W0)):
        total = total + LaurentScalar.monomial(tau_oracle(y, W0.act(k, y2), g))
    return W0.poincare() * total


def rank_at(rows, x=F(2, 7)):
    # rank of a specialization; equals the generic rank for all but finitely many x
    return q_rank([[c.evaluate(x) for c in r] for r in rows])


def test_tau_a1():
    h = F(1, 2)
    assert tau([h], [h], A1) == 0
    assert tau([h], [-h], A1) == -2
    assert tau([h], [3 * h], A1) == 1
    with pytest.raises(OnWall):
        tau([1], [h], A1)


def test_pairing_a1():
    inner, outer = [F(1, 2)], [F(3, 2)]
    assert pairing_yy(inner, inner, A1) == P("1 + v^2") * P("1 + v^-2")
    assert pairing_yy(inner, outer, A1) == P("1 + v^2") * P("v^-1 + v")


def test_pairing_a2_small_alcove():
    g = grading("A2")
    e = g.system.weyl_group().poincare()
    y = (F(1, 3), F(1, 3))
    assert pairing_yy(y, y, g) == P("v^-6") * e * e


points = st.tuples(st.integers(-13, 13), st.integers(-13, 13)).map(lambda t: (F(t[0], 5) + F(1, 17), F(t[1], 5) + F(1, 29)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A2", [0, 0], 1), ("B2", [1, 0], 2), ("A2", [1, 1], 3), ("B2", [1, 1], INF),
                        ("G2", [0, 1], 2)]), points, points)
def test_pairing_matches_direct_sum(case, y, y2):
    g = grading(*case)
    assert pairing_yy(y, y2, g) == pairing_oracle(y, y2, g)
    assert pairing_yy(y, y2, g) == pairing_yy(y2, y, g)
    assert tau(y, y2, g) == tau_oracle(y, y2, g)
    W0 = g.W0
    for k in range(len(W0)):
        assert tau(y, W0.act(k, y2), g) == tau(y2, W0.act(W0.inverse(k), y), g)
    if not g.finite:
        assert tau(y, y2, g, 1) == tau(y, y2, g, -1)


def test_form_space_a1():
    V = build_form_space(A1)
    assert (V.family_size, V.dim, V.radical_dim) == (3, 2, 1)
    assert V.express_point([F(3, 2)]) == V.express_point([F(-3, 2)])
    for k, b in enumerate(V.basis):
        assert V.express_class(b) == V.unit(k)


def test_form_space_a2_small_alcoves_are_a_basis():
    g = grading("A2")
    V = build_form_space(g)
    assert V.dim == 3
    xs = [V.express_point((F(k, 3), F(k, 3))) for k in (1, 2, 4)]
    gram = [[V.form(a, b) for b in xs] for a in xs]
    assert rank_at(gram) == 3


def test_form_space_empty():
    V = build_form_space(Grading(RootSystem.from_cartan_type("", dim=1), 1, []))
    assert V.dim == 1


CASES = [("A1", [0], 1), ("A2", [0, 0], 1), ("B2", [0, 0], 1), ("A2", [1, 1], 2),
         ("B2", [1, 1], 3), ("A1", [1], INF), ("A2", [1, 1], INF), ("B2", [1, 1], INF)]


@pytest.mark.parametrize("case", CASES)
def test_gram_symmetric_and_rank(case):
    g = grading(*case)
    V = build_form_space(g)
    G = V.gram
    assert all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(len(G)))
    assert rank_at(G) == rank_at(G, F(-5, 3)) == V.dim
    assert rank_at(V.gram_basis) == V.dim


@pytest.mark.parametrize("case", [c for c in CASES if c[2] != INF])
def test_gram_independent_of_representative(case):
    g = grading(*case)
    V = build_form_space(g)
    for c in alcove_classes(g):
        for other in c.members[:3]:
            assert V.row_of_point(other.point) == V.row_of_point(c.representative)


@pytest.mark.parametrize("case", CASES)
def test_beta(case):
    g = grading(*case)
    V = build_form_space(g)
    v = as_field(LaurentScalar.monomial(1))
    for i in range(V.family_size):
        x = V.express_class(i)
        assert V.beta(x) == x
        assert V.beta(x * v) == x * as_field(LaurentScalar.monomial(-1))
    y = V.express_class(0) * FieldScalar(P("v^3 - 2"), P("1 + v"))
    assert V.beta(V.beta(y)) == y


def test_beta_fixes_a1_canonical_element():
    V = build_form_space(A1)
    a = V.express_point([F(1, 2)]) * FieldScalar(LaurentScalar(1), P("v + v^-1"))
    assert V.beta(a) == a


@pytest.mark.parametrize("case", [c for c in CASES if c[2] == INF])
@pytest.mark.parametrize("delta", [1, -1])
def test_bar_identity_for_z_gradings(case, delta):
    g = grading(*case)
    V = build_form_space(g)
    n = len(g.part(delta))
    shift = as_field(LaurentScalar.monomial(-n))
    for i in range(V.family_size):
        for j in range(V.family_size):
            x, y = V.express_class(i), V.express_class(j)
            assert V.form(V.beta(x), V.beta(y)).bar() == shift * V.form(x, V.sigma(y))


def test_sigma():
    g = grading("A2", [1, 1], INF)
    V = build_form_space(g)
    for i, y in enumerate(V.points):
        x = V.express_class(i)
        assert V.sigma(x) == V.express_point(tuple(-a for a in y))
        assert V.sigma(V.sigma(x)) == x
    with pytest.raises(FiniteModulus):
        build_form_space(A1).sigma(build_form_space(A1).unit(0))


def test_sigma_trivial_z_grading_a1():
    g = Grading(RootSystem.from_cartan_type("A1"), INF, [0, 0])
    V = build_form_space(g)
    assert V.family_size == 2 and V.dim == 1
    assert V.sigma(V.unit(0)) == V.unit(0)
