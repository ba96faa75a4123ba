import json
from collections import Counter
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from gradus.bases import assemble_bases
from gradus.errors import AmbiguousMatching, InfeasibleMatching, ParseError, UnsupportedType
from gradus.laurent import as_field, parse_laurent
from gradus.restrict import levi_from_simple, standard_levis
from gradus.rootsys import Grading, RootSystem, grading_from_cocharacter
from gradus.springer import (IrrepLabel, b_from_pairing, b_invariant, bipartitions, characters_of,
                             decompose, eta0, f_n, ff_n, load_table, match_bijection, n_of, normalize,
                             omega_table, partitions, proposition_check, recover_from_f,
                             restriction_multiplicities, sigma)


def system(label):
    return RootSystem.from_cartan_type(label)


def trivial(label):
    s = system(label)
    return grading_from_cocharacter(s, [0] * s.dim_Y, 1)


def p_count(n):
    # partition numbers by the pentagonal recurrence
    p = [1] + [0] * n
    for k in range(1, n + 1):
        j, s = 1, 0
        while True:
            for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
                if g <= k:
                    s += (-1) ** (j + 1) * p[k - g]
            if j * (3 * j - 1) // 2 > k:
                break
            j += 1
        p[k] = s
    return p[n]


def hook_dimension(lam):
    n = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, r in enumerate(lam):
        for j in range(r):
            prod *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def test_partition_lists():
    for n in range(9):
        ps = partitions(n)
        assert len(ps) == len(set(ps)) == p_count(n)
        assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in ps)
    assert len(bipartitions(3)) == sum(p_count(k) * p_count(3 - k) for k in range(4))
    assert normalize([3, 2, 1, 0]) == (3, 2, 1)
    for bad in ([2, -1], [1, 3]):
        with pytest.raises(ParseError):
            normalize(bad)


def test_f_examples():
    assert f_n([2, 1]) == Counter({(1, 1): 1, (2,): 1})
    assert f_n([5]) == Counter({(4,): 1})
    assert f_n([]) == Counter()
    assert ff_n(((1,), (1,))) == Counter({((), (1,)): 1, ((1,), ()): 1})
    assert ff_n(((4,), ())) == Counter({((3,), ()): 1})


@pytest.mark.parametrize("n", [1, 3, 4, 5, 6, 7, 8])
def test_partition_recoverable_from_f(n):
    for lam in partitions(n):
        assert recover_from_f(f_n(lam)) == lam
    images = [tuple(sorted(f_n(lam).items())) for lam in partitions(n)]
    assert len(set(images)) == len(images)


def test_two_boxes_are_not_recoverable():
    # both partitions of 2 lose a box to [1]; b tells them apart instead
    assert f_n([2]) == f_n([1, 1])
    ch = characters_of(system("A1"))
    assert sorted(ch.b_invariant(l) for l in ch.labels) == [0, 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_ff_commutes_with_swap(n):
    for bp in bipartitions(n):
        assert sigma(ff_n(bp)) == ff_n(sigma(bp))


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D3", "G2", "A1xA1", "A1xB2"])
def test_characters_are_orthonormal(label):
    ch = characters_of(system(label))
    W = ch.W
    vals = {lab: [ch.value(lab, k) for k in range(len(W))] for lab in ch.labels}
    assert sum(ch.dimension(l) ** 2 for l in ch.labels) == len(W)
    for a in ch.labels:
        for b in ch.labels:
            ip = F(sum(x * y for x, y in zip(vals[a], vals[b])), len(W))
            assert ip == (1 if a == b else 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_type_a_dimensions_and_b(n):
    ch = characters_of(system(f"A{n - 1}"))
    for lab in ch.labels:
        lam = lab.parts[0]
        assert ch.dimension(lab) == hook_dimension(lam)
        assert ch.b_invariant(lab) == sum(i * x for i, x in enumerate(lam))
    assert ch.b_invariant(ch.trivial()) == 0
    assert ch.b_invariant(ch.sign()) == n * (n - 1) // 2
    assert ch.trivial().parts == ((n,),)


@pytest.mark.parametrize("n", [2, 3])
def test_type_b_b_invariants(n):
    ch = characters_of(system(f"B{n}"))
    for lab in ch.labels:
        lam, mu = lab.parts[0]
        assert ch.b_invariant(lab) == 2 * n_of(lam) + 2 * n_of(mu) + sum(mu)


def test_g2_two_dimensional_b_values():
    ch = characters_of(system("G2"))
    two = [l for l in ch.labels if ch.dimension(l) == 2]
    assert sorted(ch.b_invariant(l) for l in two) == [1, 2]
    assert b_invariant(ch.trivial(), system("G2")) == 0


def test_unsupported_type():
    for label in ["F4", "E6"]:
        with pytest.raises(UnsupportedType):
            characters_of(system(label))
    ch = characters_of(system("D4"))
    split = [l for l in ch.labels if len(l.parts[0]) == 3]
    assert len(split) == 4
    with pytest.raises(UnsupportedType):
        ch.value(split[0], 0)


def test_decompose_products():
    kinds = sorted((c.kind, c.rank) for c in decompose(system("A2xB2xG2")))
    assert kinds == [("A", 2), ("B", 2), ("G", 2)]


def test_restriction_s3_to_s2():
    s = system("A2")
    lev = levi_from_simple(s, [s.simple[0]])
    lab = IrrepLabel(((2, 1),), ("A",))
    got = {str(k): v for k, v in restriction_multiplicities(lab, s, lev.subsystem).items()}
    assert got == {"[2]": 1, "[1,1]": 1}
    triv = characters_of(s).trivial()
    assert {str(k): v for k, v in restriction_multiplicities(triv, s, lev.subsystem).items()} == {"[2]": 1}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_type_a_branching_is_f(n):
    s = system(f"A{n - 1}")
    lev = levi_from_simple(s, list(s.simple[:-1]))
    ch = characters_of(s)
    for lab in ch.labels:
        got = {k.parts[0]: v for k, v in ch.restrict(lab, lev.subsystem).items()}
        assert Counter(got) == f_n(lab.parts[0])


@pytest.mark.parametrize("n", [2, 3])
def test_type_b_branching_is_ff(n):
    s = system(f"B{n}")
    lev = levi_from_simple(s, list(s.simple[1:]))
    ch = characters_of(s)
    for lab in ch.labels:
        got = {k.parts[0] if k.parts else ((), ()): v for k, v in ch.restrict(lab, lev.subsystem).items()}
        want = ff_n(lab.parts[0])
        if n == 2:
            # W(B1) labels are bipartitions of 1
            assert sum(got.values()) == sum(want.values())
        else:
            assert Counter(got) == want


@pytest.mark.parametrize("label", ["A3", "B2", "B3", "C3"])
def test_proposition(label):
    assert proposition_check(system(label)) == []


def test_b_from_pairing():
    assert b_from_pairing(as_field(parse_laurent("2v^4 + v^6"))) == (2, 2)
    for bad in ["v^3", "-v^2", "v^-2 + 1", "0", "v + v^2"]:
        with pytest.raises(InfeasibleMatching):
            b_from_pairing(as_field(parse_laurent(bad)))


def labels_of(label):
    fam = assemble_bases(trivial(label))
    m = match_bijection(fam)
    return fam, m


def test_matching_empty_system():
    fam = assemble_bases(Grading(RootSystem.from_cartan_type("", dim=1), 1, []))
    m = match_bijection(fam)
    assert [str(l) for l in m.labels] == ["triv"]


def test_matching_a1():
    fam, m = labels_of("A1")
    e0 = eta0(fam)
    assert fam.d_values[e0] == 2
    assert str(m.labels[e0]) == "[2]"
    assert [r["b"] for r in m.rows()] == [1, 0]
    assert fam.space.form(fam.canonical[0], fam.canonical[e0]) == as_field(parse_laurent("v^2"))


def test_matching_a2():
    fam, m = labels_of("A2")
    e0 = eta0(fam)
    assert fam.d_values[e0] == 6
    assert {str(l): b for l, b in zip(m.labels, m.b)} == {"[3]": 0, "[2,1]": 1, "[1,1,1]": 3}
    assert str(m.labels[e0]) == "[3]"
    part = m.partition
    assert sorted(str(l) for ls in part.values() for l in ls) == sorted(str(l) for l in characters_of(fam.grading.system).labels)


def test_matching_with_table_agrees():
    fam, m = labels_of("A2")
    s = fam.grading.system
    ch = characters_of(s)
    S = list(s.simple)
    res = {}
    for lev in standard_levis(s):
        key = ",".join(str(S.index(x) + 1) for x in lev.simple)
        res[key] = {str(l): {str(k): v for k, v in ch.restrict(l, lev.subsystem).items()} for l in ch.labels}
    text = json.dumps({"labels": [str(l) for l in ch.labels], "b": [ch.b_invariant(l) for l in ch.labels],
                       "restrictions": res})
    out = match_bijection(fam, load_table(text))
    assert [str(l) for l in out.labels] == [str(l) for l in m.labels]
    with pytest.raises(ParseError):
        load_table('{"labels": [], "b": [], "extra": 1}')


def test_type_d_splits_are_reported():
    # the check happens before any basis data is used
    from types import SimpleNamespace
    fake = SimpleNamespace(grading=trivial("D4"), space=None, canonical=[])
    with pytest.raises(AmbiguousMatching):
        match_bijection(fake)


def test_omega_bijection_a1():
    fam = assemble_bases(trivial("A1"))
    table = omega_table(fam)
    assert [[str(l) for l in ob.labels] for ob in table] == [["[1,1]"], ["[2]"]]
    # the distinguished orbit sees a single representation
    assert len(table[eta0(fam)].labels) == 1


def test_omega_bijection_a1_mod_2():
    g = grading_from_cocharacter(system("A1"), [1], 2)
    fam = assemble_bases(g)
    table = omega_table(fam)
    assert sum(len(ob.elements) for ob in table) == fam.space.dim == 3
    assert sorted(k for ob in table for k in ob.elements) == [0, 1, 2]
    assert [[str(l) for l in ob.labels] for ob in table] == [["triv"], ["[2]"], ["[2]"]]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_f_preserves_size_and_count(lam):
    out = f_n(lam)
    assert all(sum(p) == sum(lam) - 1 for p in out)
    corners = sum(1 for i, x in enumerate(lam) if i + 1 == len(lam) or lam[i + 1] < x)
    assert sum(out.values()) == corners
