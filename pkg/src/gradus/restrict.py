"""Restriction from V to the space of a Levi subsystem (modulus 1).

A Levi datum is given by a point ``y'``; the subsystem ``R'`` consists of
the roots vanishing on it.  The map sends the class of an alcove
containing ``y`` to

    sum over coset representatives e of v^f'(e) [class of e(y) for R']

with f'(e) = -sum sg(y', a) over roots a with (y', a) != 0 and
(e(y), a) outside [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidGrading, NonLatticeCoefficient, RadicalNotMapped
from .facets import _SpanSolver
from .form import FormSpace, VElement, build_form_space
from .laurent import LaurentScalar, as_field
from .rootsys import Grading, RootSystem, Vec, vec


def coset_reps(system: RootSystem, sub_roots: Sequence[int], longest: bool = False) -> List[int]:
    """One element of each coset ``W' w`` in ``W``, as indices into ``system.weyl_group()``.

    The default picks the shortest element of each coset (ties broken by
    index); ``longest=True`` picks the longest, which is only used to
    check that nothing depends on the choice.
    """
    W = system.weyl_group()
    Wp = system.weyl_group(frozenset(sub_roots))
    seen = set()
    reps = []
    for k in range(len(W)):
        if k in seen:
            continue
        coset = sorted({W.index_of(_compose(u, W.elements[k])) for u in Wp.elements},
                       key=lambda j: (W.lengths[j], j))
        seen.update(coset)
        reps.append(coset[-1] if longest else coset[0])
    return sorted(reps, key=lambda j: (W.lengths[j], j))


def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


@dataclass
class LeviDatum:
    system: RootSystem
    point: Vec
    roots: Tuple[int, ...]
    reps: Tuple[int, ...]
    simple: Optional[Tuple[int, ...]] = None

    @cached_property
    def subsystem(self) -> RootSystem:
        return self.system.subsystem(self.roots)

    @cached_property
    def sub_grading(self) -> Grading:
        return Grading(self.subsystem, 1, [0] * len(self.roots), validate=False)

    @property
    def label(self) -> str:
        if self.simple is not None:
            return "J=" + ",".join(str(self.system.simple.index(i) + 1) for i in self.simple) if self.simple else "J=()"
        return "y'=" + ",".join(str(x) for x in self.point)

    def to_json(self) -> dict:
        return {
            "point": [str(x) for x in self.point],
            "roots": list(self.roots),
            "cosets": len(self.reps),
        }


def levi_from_point(system: RootSystem, point: Sequence, longest: bool = False) -> LeviDatum:
    y = vec(point)
    p = system.pairings(y)
    roots = tuple(i for i, x in enumerate(p) if x == 0)
    return LeviDatum(system, y, roots, tuple(coset_reps(system, roots, longest)))


def levi_from_simple(system: RootSystem, J: Sequence[int], longest: bool = False) -> LeviDatum:
    """Standard Levi for a set ``J`` of simple roots (indices into ``system.roots``)."""
    S = list(system.simple)
    rhs = [Fraction(0) if s in J else Fraction(1) for s in S]
    y = _SpanSolver(system, S).solve(rhs)
    lev = levi_from_point(system, y, longest)
    lev.simple = tuple(sorted(J, key=S.index))
    return lev


def standard_levis(system: RootSystem) -> List[LeviDatum]:
    """Levis for every proper subset of the simple roots, smallest first."""
    S = list(system.simple)
    out = []
    for k in range(len(S)):
        for J in combinations(S, k):
            out.append(levi_from_simple(system, J))
    return out


def f_prime(eps: int, levi: LeviDatum, y: Sequence[Fraction]) -> int:
    sysm = levi.system
    W = sysm.weyl_group()
    ey = W.act(eps, y)
    q = sysm.pairings(levi.point)
    p = sysm.pairings(ey)
    s = 0
    for i in range(sysm.n_roots):
        if q[i] != 0 and (p[i] < 0 or p[i] > 1):
            s += 1 if q[i] > 0 else -1
    return -s


def _require_unit_modulus(grading: Grading):
    if not grading.finite or grading.m != 1:
        raise InvalidGrading("restriction is defined for modulus 1")


class Restriction:
    """The linear map V -> V_{R'} attached to a Levi datum."""

    def __init__(self, grading: Grading, levi: LeviDatum):
        _require_unit_modulus(grading)
        self.grading = grading
        self.levi = levi
        self.source: FormSpace = build_form_space(grading)
        self.target: FormSpace = build_form_space(levi.sub_grading)
        src = self.source
        self.images = [self.of_point(src.points[b]) for b in src.basis]
        for i in range(src.family_size):
            if self.apply(src.express_class(i)) != self.of_point(src.points[i]):
                raise RadicalNotMapped("restriction is not compatible with the radical")

    def of_point(self, y) -> VElement:
        """Image of the class of the alcove containing ``y``."""
        W = self.levi.system.weyl_group()
        out = self.target.zero()
        for e in self.levi.reps:
            f = f_prime(e, self.levi, y)
            out = out + self.target.express_point(W.act(e, y)) * as_field(LaurentScalar.monomial(f))
        return out

    def apply(self, x: VElement) -> VElement:
        out = self.target.zero()
        for c, img in zip(x.coords, self.images):
            if c:
                out = out + img * c
        return out


def res(x: VElement, levi: LeviDatum) -> VElement:
    return Restriction(x.space.grading, levi).apply(x)


@dataclass
class BranchingTable:
    levi: LeviDatum
    # constants[j'][j]: constant attached to the canonical element j of the
    # big system and the element j' of the Levi
    constants: List[List[int]]
    coefficients: List[List[LaurentScalar]]

    @property
    def nonnegative(self) -> bool:
        return all(c >= 0 for row in self.constants for c in row)

    def column(self, j: int) -> List[int]:
        return [row[j] for row in self.constants]

    def to_json(self) -> dict:
        return {"levi": self.levi.to_json(), "constants": self.constants}


def branching_constants(grading: Grading, levi: LeviDatum, family=None, sub_family=None) -> BranchingTable:
    """Expand restricted canonical elements over the Levi canonical basis; keep constant terms."""
    from .bases import assemble_bases, lattice_coords
    _require_unit_modulus(grading)
    fam = family or assemble_bases(grading)
    sub = sub_family or assemble_bases(levi.sub_grading)
    r = Restriction(grading, levi)
    k, kp = len(fam.canonical), len(sub.canonical)
    consts = [[0] * k for _ in range(kp)]
    coeffs = [[LaurentScalar()] * k for _ in range(kp)]
    for j, eta in enumerate(fam.canonical):
        c = lattice_coords(r.apply(eta), sub.canonical)
        for jp, a in enumerate(c):
            a = as_field(a)
            if a:
                if not (a.is_laurent() and a.as_laurent().is_integral() and a.as_laurent().is_polynomial()):
                    raise NonLatticeCoefficient(
                        f"restricted canonical element {j} has a coefficient outside Z[v]")
                f = a.as_laurent()
            else:
                f = LaurentScalar()
            coeffs[jp][j] = f
            consts[jp][j] = int(f.coeff(0))
    return BranchingTable(levi, consts, coeffs)
