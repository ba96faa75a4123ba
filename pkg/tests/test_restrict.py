from fractions import Fraction as F

import pytest

from gradus.bases import assemble_bases, lattice_coords
from gradus.errors import InvalidGrading
from gradus.laurent import FieldScalar, as_field, parse_laurent
from gradus.restrict import (Restriction, branching_constants, coset_reps, f_prime, levi_from_point,
                             levi_from_simple, res, standard_levis)
from gradus.rootsys import RootSystem, grading_from_cocharacter

P = parse_laurent


def trivial(label):
    s = RootSystem.from_cartan_type(label)
    return grading_from_cocharacter(s, [0] * s.dim_Y, 1)


A1 = trivial("A1")


def test_coset_reps_small():
    s = A1.system
    assert len(coset_reps(s, [])) == 2
    assert coset_reps(s, [0, 1]) == [0]
    s2 = RootSystem.from_cartan_type("A2")
    a = s2.simple[0]
    assert len(coset_reps(s2, [a, s2.neg(a)])) == 3


@pytest.mark.parametrize("label", ["A2", "B2", "A3"])
@pytest.mark.parametrize("longest", [False, True])
def test_cosets_factor_the_group(label, longest):
    s = RootSystem.from_cartan_type(label)
    W = s.weyl_group()
    for lev in standard_levis(s):
        reps = coset_reps(s, lev.roots, longest)
        Wp = s.weyl_group(lev.roots)
        assert len(reps) * len(Wp) == len(W)
        products = [tuple(u[W.elements[e][i]] for i in range(s.n_roots)) for u in Wp.elements for e in reps]
        assert sorted(products) == sorted(W.elements)
        lengths = [W.lengths[e] for e in reps]
        best = min if not longest else max
        for e in reps:
            coset = [W.index_of(tuple(u[W.elements[e][i]] for i in range(s.n_roots))) for u in Wp.elements]
            assert W.lengths[e] == best(W.lengths[k] for k in coset)
        assert lengths == sorted(lengths)


def test_f_prime_a1():
    lev = levi_from_point(A1.system, [1])
    assert lev.roots == () and len(lev.reps) == 2
    y = [F(1, 2)]
    ident, s = lev.reps
    assert f_prime(ident, lev, y) == 1
    assert f_prime(s, lev, y) == -1
    full = levi_from_point(A1.system, [0])
    assert [f_prime(e, full, y) for e in full.reps] == [0]


def test_restriction_a1_to_torus():
    lev = levi_from_point(A1.system, [1])
    r = Restriction(A1, lev)
    one = r.target.unit(0)
    assert r.of_point([F(1, 2)]) == one * as_field(P("v + v^-1"))
    assert r.of_point([F(3, 2)]) == one * 2
    x = r.source.express_point([F(1, 2)]) * as_field(P("v^3")) + r.source.express_point([F(-3, 2)])
    assert r.apply(x) == one * as_field(P("v^2 + v^4 + 2"))
    assert res(x, lev) == r.apply(x)
    tab = branching_constants(A1, lev)
    assert tab.constants == [[1, 1]]


def test_restriction_to_whole_system_is_identity():
    for label in ["A1", "A2"]:
        g = trivial(label)
        lev = levi_from_point(g.system, [0] * g.system.dim_Y)
        r = Restriction(g, lev)
        for i in range(r.source.family_size):
            assert r.apply(r.source.express_class(i)).coords == r.source.express_class(i).coords
        k = len(assemble_bases(g).canonical)
        assert branching_constants(g, lev).constants == [[int(i == j) for j in range(k)] for i in range(k)]


def test_restriction_is_linear():
    g = trivial("A2")
    lev = levi_from_simple(g.system, [g.system.simple[0]])
    r = Restriction(g, lev)
    V = r.source
    a, b = as_field(P("v - 2v^3")), FieldScalar(P("1"), P("1 + v^2"))
    x, y = V.express_class(0), V.express_class(V.family_size - 1)
    assert r.apply(x * a + y * b) == r.apply(x) * a + r.apply(y) * b


def test_modulus_must_be_one():
    s = RootSystem.from_cartan_type("A1")
    g = grading_from_cocharacter(s, [1], 2)
    with pytest.raises(InvalidGrading):
        Restriction(g, levi_from_point(s, [1]))


def in_Zv(c):
    return not c or (c.is_laurent() and c.as_laurent().is_integral())


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_branching_constants(label):
    g = trivial(label)
    fam = assemble_bases(g)
    for lev in standard_levis(g.system):
        sub = assemble_bases(lev.sub_grading)
        tab = branching_constants(g, lev, fam, sub)
        assert tab.nonnegative
        # the lattice spanned by the PBW basis goes into the Levi lattice
        r = Restriction(g, lev)
        for z in fam.pbw:
            assert all(in_Zv(c) for c in lattice_coords(r.apply(z), sub.pbw))
        other = levi_from_simple(g.system, lev.simple, longest=True)
        assert branching_constants(g, other, fam, sub).constants == tab.constants


def test_branching_a2_values():
    g = trivial("A2")
    s = g.system
    consts = {lev.simple: branching_constants(g, lev).constants for lev in standard_levis(s)}
    assert consts[()] == [[1, 2, 1]]
    assert consts[(s.simple[0],)] == [[1, 1, 0], [0, 1, 1]]
    assert consts[(s.simple[1],)] == [[1, 1, 0], [0, 1, 1]]
