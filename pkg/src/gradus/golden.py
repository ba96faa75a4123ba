"""Worked rank-one and rank-two examples with known exact answers (modulus 1)."""

from __future__ import annotations

from fractions import Fraction as F
from typing import Callable, List, Tuple

from .laurent import FieldScalar, LaurentScalar, as_field, parse_laurent
from .rootsys import RootSystem, grading_from_cocharacter

Check = Tuple[str, bool, str]


def _eq(name: str, got, want) -> Check:
    got, want = as_field(got), as_field(want)
    return name, got == want, f"got {got}, want {want}"


def a1_checks() -> List[Check]:
    from .bases import assemble_bases
    from .form import build_form_space
    g = grading_from_cocharacter(RootSystem.from_cartan_type("A1"), [0], 1)
    V = build_form_space(g)
    inner, outer = V.express_point([F(1, 2)]), V.express_point([F(3, 2)])
    out = [
        _eq("A1 (I_in:I_in)", V.form(inner, inner), parse_laurent("1 + v^2") * parse_laurent("1 + v^-2")),
        _eq("A1 (I_in:I_out)", V.form(inner, outer), parse_laurent("1 + v^2") * parse_laurent("v^-1 + v")),
        _eq("A1 (I_out:I_out)", V.form(outer, outer), parse_laurent("2 + 2v^2")),
    ]
    A = inner * FieldScalar(LaurentScalar(1), parse_laurent("v + v^-1"))
    B = outer
    fam = assemble_bases(g)
    out.append(("A1 canonical basis {A, B-A}", set(fam.canonical) == {A, B - A}, ""))
    out.append(_eq("A1 (A:A)", V.form(A, A), 1))
    out.append(_eq("A1 (B-A:B-A)", V.form(B - A, B - A), 1))
    out.append(_eq("A1 (A:B-A)", V.form(A, B - A), parse_laurent("v^2")))
    z = A * as_field(parse_laurent("-v^2")) + (B - A)
    out.append(("A1 PBW basis {A, -v^2 A + (B-A)}", set(fam.pbw) == {A, z}, ""))
    return out


def a2_checks() -> List[Check]:
    from .bases import assemble_bases
    from .form import build_form_space
    sysm = RootSystem.from_cartan_type("A2")
    g = grading_from_cocharacter(sysm, [0, 0], 1)
    V = build_form_space(g)
    e = sysm.weyl_group().poincare()
    I = [V.express_point([F(k, 3), F(k, 3)]) for k in (1, 2, 4)]
    want = {
        (0, 0): parse_laurent("v^-6") * e * e,
        (0, 1): parse_laurent("v^-5") * e * e,
        (0, 2): parse_laurent("v^-3") * e * e,
        (1, 1): parse_laurent("v^-4 + 2v^-2 + 3") * e,
        (1, 2): parse_laurent("v^-2 + 4 + v^2") * e,
        (2, 2): parse_laurent("6") * e,
    }
    out = [_eq(f"A2 (I_{i}:I_{j})", V.form(I[i], I[j]), w) for (i, j), w in want.items()]
    fam = assemble_bases(g)
    canon = set(fam.canonical)
    b0 = I[0] * FieldScalar(LaurentScalar.monomial(3), e)
    b1 = I[1] - b0 * as_field(parse_laurent("v^-2 + 2 + v^2"))
    b2 = I[2] - b1 * 2 - b0
    out.append(("A2 canonical basis from I_0, I_1, I_2", {b0, b1, b2} == canon and len(canon) == 3, ""))
    z0 = b0
    z1 = b1 - z0 * as_field(parse_laurent("v^4 + v^2"))
    z2 = b2 - z1 * as_field(parse_laurent("v^2")) - z0 * as_field(parse_laurent("v^6"))
    out.append(("A2 PBW basis from the canonical basis", {z0, z1, z2} == set(fam.pbw), ""))
    return out


SUITES: List[Tuple[str, Callable[[], List[Check]]]] = [("A1", a1_checks), ("A2", a2_checks)]


def run_all() -> List[Check]:
    out = []
    for _, f in SUITES:
        out.extend(f())
    return out
