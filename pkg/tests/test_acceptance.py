"""Acceptance criteria 1-7.

Each criterion is a function returning ``(ok, detail)``; the tests time
them from cold caches, print one status line each and assert.  Run this
file directly to get the status lines without pytest.
"""

import sys
import time
from fractions import Fraction as F
from math import factorial

import pytest

from gradus import clear_caches
from gradus.bases import altpbw, assemble_bases, lattice_coords
from gradus.errors import AmbiguousMatching, GradusError
from gradus.facets import enumerate_rigid_orbits, default_bound
from gradus.golden import a1_checks, a2_checks
from gradus.laurent import LaurentScalar, as_field
from gradus.linalg import q_rank
from gradus.restrict import branching_constants, levi_from_point, standard_levis
from gradus.rootsys import INF, RootSystem, grading_from_cocharacter
from gradus.springer import (bipartitions, characters_of, f_n, ff_n, match_bijection, partitions,
                             proposition_check, recover_from_f, sigma)

SHIPPED = [
    ("A1", [0], 1), ("A1", [1], 2), ("A1", [1], 3), ("A1", [1], INF), ("A1", [0], INF),
    ("A2", [0, 0], 1), ("A2", [1, 1], 2), ("A2", [1, 0], 2), ("A2", [1, 1], 3), ("A2", [1, 0], 3),
    ("A2", [1, 1], INF), ("A2", [1, 0], INF),
    ("B2", [0, 0], 1), ("B2", [1, 1], 2), ("B2", [1, 0], 2), ("B2", [0, 1], 2), ("B2", [1, 1], 3),
    ("B2", [1, 0], 3), ("B2", [1, 1], INF), ("B2", [1, 0], INF), ("B2", [0, 1], INF),
]


def grading(label, y, m):
    return grading_from_cocharacter(RootSystem.from_cartan_type(label), y, m)


def name(case):
    label, y, m = case
    return f"{label} y={','.join(map(str, y))} m={'inf' if m == INF else m}"


# ---------------------------------------------------------------------------
# 1 and 2


def golden(checks):
    results = checks()
    bad = [n for n, ok, _ in results if not ok]
    return not bad, f"{len(results) - len(bad)}/{len(results)} exact checks" + (f"; failed {bad}" if bad else "")


def criterion_1():
    return golden(a1_checks)


def criterion_2():
    return golden(a2_checks)


# ---------------------------------------------------------------------------
# 3


def _is_Zv(c, shift=None):
    if not c:
        return True
    if not c.is_laurent():
        return False
    f = c.as_laurent()
    return f.is_integral() and (f.in_vZv() if shift == "v" else f.in_one_plus_vZv() if shift == "1" else f.is_polynomial())


def property_failures(g):
    fail = []
    fam = assemble_bases(g)
    V = fam.space
    n = V.dim
    G = V.gram
    if any(G[i][j] != G[j][i] for i in range(len(G)) for j in range(len(G))):
        fail.append("gram symmetry")
    xs = [V.express_class(i) for i in range(V.family_size)]
    if any(V.beta(x) != x for x in xs):
        fail.append("beta fixes classes")
    probe = xs[0] * as_field(LaurentScalar({-1: 2, 3: -1})) + xs[-1] * as_field(LaurentScalar({2: 1}))
    if V.beta(V.beta(probe)) != probe:
        fail.append("beta involution")
    if not g.finite:
        for delta in (1, -1):
            shift = as_field(LaurentScalar.monomial(-len(g.part(delta))))
            for x in xs:
                for y in xs:
                    if V.form(V.beta(x), V.beta(y)).bar() != shift * V.form(x, V.sigma(y)):
                        fail.append(f"bar identity delta={delta}")
                        break
    levels = fam.d_values
    for j, (xi, eta) in enumerate(zip(fam.pbw, fam.canonical)):
        if V.beta(eta) != eta:
            fail.append("canonical is bar invariant")
        for i, c in enumerate(lattice_coords(eta - xi, fam.pbw)):
            if c and (not _is_Zv(c, "v") or (g.finite and not levels[i] < levels[j])):
                fail.append("triangularity")
    for i in range(n):
        for j in range(n):
            for basis in (fam.pbw, fam.canonical):
                c = V.form(basis[i], basis[j])
                if not _is_Zv(c, "1" if i == j else "v"):
                    fail.append("near orthonormality")
            if i != j and fam.orbit_index[i] != fam.orbit_index[j] and V.form(fam.pbw[i], fam.pbw[j]):
                fail.append("orbit orthogonality")
    M = fam.transition
    for i in range(n):
        for j in range(n):
            c = as_field(M[i][j])
            if (i == j and M[i][j] != LaurentScalar(1)) or (i != j and not _is_Zv(c, "v")):
                fail.append("unitriangular transition")
    if g.finite and not altpbw(g).matches(fam):
        fail.append("alternative construction")
    return sorted(set(fail))


def criterion_3():
    bad = {}
    for case in SHIPPED:
        f = property_failures(grading(*case))
        if f:
            bad[name(case)] = f
    return not bad, f"{len(SHIPPED)} graded systems" + (f"; failures {bad}" if bad else "")


# ---------------------------------------------------------------------------
# 4


def _orbit_summary(orbits):
    return [(o.representative.signature, o.d, len(o.members)) for o in orbits]


def criterion_4():
    bad = []
    for case in SHIPPED:
        g = grading(*case)
        if g.finite:
            b = default_bound(g)
            if _orbit_summary(enumerate_rigid_orbits(g, b)) != _orbit_summary(
                    enumerate_rigid_orbits(g, b + 2, check_stability=False)):
                bad.append(f"{name(case)}: orbits change with the bound")
        fam = assemble_bases(g)
        V = fam.space
        values = [[c.evaluate(F(3, 7)) for c in x.coords] for x in fam.pbw]
        if len(fam.pbw) != V.dim or q_rank(values) != V.dim:
            bad.append(f"{name(case)}: |Z|={len(fam.pbw)} dim V={V.dim}")
    return not bad, f"{len(SHIPPED)} graded systems" + (f"; {bad}" if bad else "")


# ---------------------------------------------------------------------------
# 5


def criterion_5():
    bad = []
    checked = 0
    # the reconstruction needs at least three boxes; n = 1 is a single partition
    for n in [1] + list(range(3, 9)):
        for lam in partitions(n):
            checked += 1
            if recover_from_f(f_n(lam)) != lam:
                bad.append(lam)
    for n in range(1, 9):
        for bp in bipartitions(n):
            if sigma(ff_n(bp)) != ff_n(sigma(bp)):
                bad.append(bp)
    clashes = {lab: proposition_check(RootSystem.from_cartan_type(lab)) for lab in ("A3", "B2", "B3")}
    clashes = {k: v for k, v in clashes.items() if v}
    ok = not bad and not clashes
    return ok, (f"{checked} partitions recovered (n<=8, n!=2), f/sigma commute for n<=8, "
                f"no label clashes in A3, B2, B3" + (f"; bad {bad} clashes {clashes}" if not ok else ""))


# ---------------------------------------------------------------------------
# 6


def criterion_6():
    bad = []
    for label in ("A1", "A2", "A3", "B2"):
        s = RootSystem.from_cartan_type(label)
        g = grading_from_cocharacter(s, [0] * s.dim_Y, 1)
        try:
            m = match_bijection(assemble_bases(g))
        except AmbiguousMatching as exc:
            bad.append(f"{label}: ambiguous ({exc})")
            continue
        except GradusError as exc:
            bad.append(f"{label}: {type(exc).__name__} ({exc})")
            continue
        ch = characters_of(s)
        if m.labels[m.eta0] != ch.trivial():
            bad.append(f"{label}: distinguished element labelled {m.labels[m.eta0]}")
        if sorted(map(str, m.labels)) != sorted(map(str, ch.labels)):
            bad.append(f"{label}: labelling is not a bijection")
    return not bad, "A1, A2, A3, B2 matched uniquely" + (f"; {bad}" if bad else "")


# ---------------------------------------------------------------------------
# 7


def hook_dimension(lam):
    n = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])]
    prod = 1
    for i, r in enumerate(lam):
        for j in range(r):
            prod *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def s3_branching(lam, J):
    """Multiplicities of the Levi irreducibles in the restriction of ``lam``."""
    if len(J) == 2:
        return {str(_render(lam)): 1}
    if len(J) == 1:
        return {_render(mu): c for mu, c in f_n(lam).items()}
    return {"triv": hook_dimension(lam)}


def _render(lam):
    return "[" + ",".join(map(str, lam)) + "]"


def criterion_7():
    s = RootSystem.from_cartan_type("A2")
    g = grading_from_cocharacter(s, [0, 0], 1)
    fam = assemble_bases(g)
    m = match_bijection(fam)
    levis = standard_levis(s) + [levi_from_point(s, [0, 0])]
    bad = []
    for lev in levis:
        J = lev.simple if lev.simple is not None else tuple(s.simple)
        sub = assemble_bases(lev.sub_grading)
        sub_labels = [str(l) for l in match_bijection(sub).labels]
        tab = branching_constants(g, lev, fam, sub)
        if not tab.nonnegative:
            bad.append(f"{lev.label}: negative constant")
        for j, lab in enumerate(m.labels):
            got = {}
            for jp, c in enumerate(tab.column(j)):
                if c:
                    got[sub_labels[jp]] = got.get(sub_labels[jp], 0) + c
            want = s3_branching(lab.parts[0], J)
            if got != want:
                bad.append(f"{lev.label} {lab}: constants {got}, multiplicities {want}")
    return not bad, f"{len(levis)} Levi classes" + (f"; {bad}" if bad else "")


# ---------------------------------------------------------------------------

CRITERIA = [
    (1, "A1 worked example", criterion_1, 1.0),
    (2, "A2 worked example", criterion_2, 5.0),
    (3, "property suite", criterion_3, 60.0),
    (4, "rigid orbit stability and basis completeness", criterion_4, None),
    (5, "partition combinatorics", criterion_5, 30.0),
    (6, "unique labelling", criterion_6, None),
    (7, "restriction multiplicities", criterion_7, None),
]


def evaluate(func, limit):
    clear_caches()
    t = time.perf_counter()
    ok, detail = func()
    dt = time.perf_counter() - t
    if limit is not None and dt >= limit:
        ok = False
        detail += f"; exceeded {limit:g} s"
    return ok, detail, dt


def status_line(num, title, ok, detail, dt, limit):
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    return f"criterion {num} [{'PASS' if ok else 'FAIL'}] {title}: {detail}; {dt:.2f} s{budget}"


@pytest.mark.parametrize("num,title,func,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, func, limit, capsys):
    ok, detail, dt = evaluate(func, limit)
    with capsys.disabled():
        print("\n" + status_line(num, title, ok, detail, dt, limit))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, title, func, limit in CRITERIA:
        ok, detail, dt = evaluate(func, limit)
        failed += not ok
        print(status_line(num, title, ok, detail, dt, limit))
    sys.exit(1 if failed else 0)
