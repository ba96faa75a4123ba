"""The pairing on alcoves, the space V and its involutions.

``V`` is represented by coordinates over a chosen subfamily of alcove
classes whose Gram minor is nonsingular.  In that basis the semilinear
involution fixing every class is coefficientwise bar.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence

from .errors import FiniteModulus, InconsistentRow, OnWall
from .facets import alcove_classes, chamber_points, class_signature
from .laurent import FieldScalar, FONE, FZERO, LaurentScalar, as_field, format_field
from .linalg import greedy_independent_rows, inverse, mat_vec
from .rootsys import Grading


# ---------------------------------------------------------------------------
# tau and the pairing of points


def _check_generic(p: Sequence[Fraction], grading: Grading):
    if grading.finite:
        m = grading.m
        for x, d in zip(p, grading.degrees):
            if x.denominator == 1 and (int(x) - d) % m == 0:
                raise OnWall("point lies on a wall of the arrangement")
    else:
        if any(x == 0 for x in p):
            raise OnWall("point lies on a root hyperplane")


def _tau_from_pairings(p, q, grading: Grading, delta: int = 1) -> int:
    if grading.finite:
        a = sum(1 for i in grading.R1 if (p[i] - 1) * (q[i] - 1) < 0)
    else:
        a = sum(1 for i in grading.part(delta) if p[i] * q[i] < 0)
    b = sum(1 for i in grading.R0 if p[i] * q[i] < 0)
    return a - b


def tau(y, y2, grading: Grading, delta: int = 1) -> int:
    sysm = grading.system
    p, q = sysm.pairings(y), sysm.pairings(y2)
    _check_generic(p, grading)
    _check_generic(q, grading)
    return _tau_from_pairings(p, q, grading, delta)


class _Pairer:
    """Evaluates ``e * sum_w v^tau(y, w y')`` from root pairings."""

    def __init__(self, grading: Grading):
        self.grading = grading
        W0 = grading.W0
        n = grading.system.n_roots
        invs = []
        for perm in W0.elements:
            inv = [0] * n
            for k, j in enumerate(perm):
                inv[j] = k
            invs.append(inv)
        self.invs = invs
        self.e = grading.e_W0
        g = grading
        if g.finite:
            self.A = list(g.R1)
            self.shift = 1
        else:
            self.A = list(g.part(1))
            self.shift = 0
        self.B = list(g.R0)

    def __call__(self, p, q) -> LaurentScalar:
        c: Dict[int, int] = {}
        A, B, s = self.A, self.B, self.shift
        for inv in self.invs:
            # (w y', alpha) = (y', w^{-1} alpha)
            t = 0
            for i in A:
                if (p[i] - s) * (q[inv[i]] - s) < 0:
                    t += 1
            for i in B:
                if p[i] * q[inv[i]] < 0:
                    t -= 1
            c[t] = c.get(t, 0) + 1
        return self.e * LaurentScalar(c)


def pairing_yy(y, y2, grading: Grading) -> LaurentScalar:
    sysm = grading.system
    p, q = sysm.pairings(y), sysm.pairings(y2)
    _check_generic(p, grading)
    _check_generic(q, grading)
    return _pairer(grading)(p, q)


def _pairer(grading: Grading) -> _Pairer:
    pr = grading.__dict__.get("_pairer")
    if pr is None:
        pr = grading.__dict__["_pairer"] = _Pairer(grading)
    return pr


# ---------------------------------------------------------------------------


class VElement:
    """An element of V: coordinates over the chosen basis classes."""

    __slots__ = ("space", "coords")

    def __init__(self, space: "FormSpace", coords: Sequence[FieldScalar]):
        self.space = space
        self.coords = tuple(as_field(c) for c in coords)

    def __add__(self, other: "VElement") -> "VElement":
        return VElement(self.space, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "VElement") -> "VElement":
        return VElement(self.space, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return VElement(self.space, [-a for a in self.coords])

    def __mul__(self, c) -> "VElement":
        c = as_field(c)
        return VElement(self.space, [c * a if a else FZERO for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(not a for a in self.coords)

    def __repr__(self):
        return "VElement(" + ", ".join(format_field(c) for c in self.coords) + ")"

    def to_json(self):
        return [format_field(c) for c in self.coords]


class FormSpace:
    """``V`` for a graded root system, built from a finite spanning family."""

    def __init__(self, grading: Grading):
        self.grading = grading
        sysm = grading.system
        pr = _pairer(grading)
        if grading.finite:
            classes = alcove_classes(grading)
            self.signatures = [c.signature for c in classes]
            self.points = [c.representative for c in classes]
        else:
            pts = chamber_points(sysm)
            by_sig = {}
            for y in pts:
                s = _chamber_signature(sysm.pairings(y))
                by_sig.setdefault(s, y)
            self.signatures = sorted(by_sig)
            self.points = [by_sig[s] for s in self.signatures]
        self._sig_index = {s: i for i, s in enumerate(self.signatures)}
        self.pairings = [sysm.pairings(y) for y in self.points]
        # orbits of W0 on the family: conjugate classes have equal rows
        W0 = grading.W0
        orbit_of = [-1] * len(self.points)
        reps: List[int] = []
        for i, y in enumerate(self.points):
            if orbit_of[i] >= 0:
                continue
            o = len(reps)
            reps.append(i)
            for k in range(len(W0)):
                j = self._sig_index.get(self._signature(sysm.pairings(W0.act(k, y))))
                if j is not None and orbit_of[j] < 0:
                    orbit_of[j] = o
        self.orbit_of = orbit_of
        self.orbit_reps = reps
        small = [[None] * len(reps) for _ in reps]
        for a in range(len(reps)):
            for b in range(a, len(reps)):
                val = as_field(pr(self.pairings[reps[a]], self.pairings[reps[b]]))
                small[a][b] = small[b][a] = val
        self._small = small
        rep_rows = [small[a] for a in range(len(reps))]
        chosen_orbits = greedy_independent_rows(rep_rows)
        self.basis = [reps[a] for a in chosen_orbits]
        self._basis_orbits = chosen_orbits
        gb = [[small[a][b] for b in chosen_orbits] for a in chosen_orbits]
        self.gram_basis = gb
        self._gb_inv = inverse(gb) if gb else []

    # -- signatures ----------------------------------------------------------
    def _signature(self, pairings) -> tuple:
        if self.grading.finite:
            return class_signature(pairings, self.grading)
        return _chamber_signature(pairings)

    def signature_of_point(self, y) -> tuple:
        return self._signature(self.grading.system.pairings(y))

    # -- basic data ----------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def family_size(self) -> int:
        return len(self.points)

    @property
    def radical_dim(self) -> int:
        return self.family_size - self.dim

    def gram_entry(self, i: int, j: int) -> FieldScalar:
        return self._small[self.orbit_of[i]][self.orbit_of[j]]

    @cached_property
    def gram(self) -> List[List[FieldScalar]]:
        n = self.family_size
        return [[self.gram_entry(i, j) for j in range(n)] for i in range(n)]

    # -- elements ------------------------------------------------------------
    def zero(self) -> VElement:
        return VElement(self, [FZERO] * self.dim)

    def unit(self, k: int) -> VElement:
        return VElement(self, [FONE if i == k else FZERO for i in range(self.dim)])

    def _express_row(self, row_orbits: Sequence[FieldScalar]) -> VElement:
        """Coordinates from the row of pairings against orbit representatives."""
        rhs = [row_orbits[a] for a in self._basis_orbits]
        coords = mat_vec(self._gb_inv, rhs)
        # consistency against the whole family
        for b in range(len(self.orbit_reps)):
            s = FZERO
            for k, a in enumerate(self._basis_orbits):
                if coords[k]:
                    s = s + coords[k] * self._small[a][b]
            if s != row_orbits[b]:
                raise InconsistentRow("class row is not in the span of the chosen basis rows")
        return VElement(self, coords)

    def express_class(self, i: int) -> VElement:
        cache = self.__dict__.setdefault("_expr", {})
        o = self.orbit_of[i]
        if o not in cache:
            cache[o] = self._express_row(self._small[o])
        return cache[o]

    def express_point(self, y) -> VElement:
        """The image in V of the alcove containing ``y``."""
        sysm = self.grading.system
        p = sysm.pairings(y)
        _check_generic(p, self.grading)
        j = self._sig_index.get(self._signature(p))
        if j is not None:
            return self.express_class(j)
        pr = _pairer(self.grading)
        row = [as_field(pr(p, self.pairings[r])) for r in self.orbit_reps]
        return self._express_row(row)

    def row_of_point(self, y) -> List[FieldScalar]:
        p = self.grading.system.pairings(y)
        pr = _pairer(self.grading)
        return [as_field(pr(p, self.pairings[r])) for r in self.orbit_reps]

    def form(self, x: VElement, y: VElement) -> FieldScalar:
        gb = self.gram_basis
        s = FZERO
        for i, a in enumerate(x.coords):
            if not a:
                continue
            row = gb[i]
            t = FZERO
            for j, b in enumerate(y.coords):
                if b:
                    t = t + row[j] * b
            if t:
                s = s + a * t
        return s

    def beta(self, x: VElement) -> VElement:
        return VElement(self, [c.bar() for c in x.coords])

    @cached_property
    def _sigma_images(self) -> List[VElement]:
        return [self.express_point(tuple(-a for a in self.points[b])) for b in self.basis]

    def sigma(self, x: VElement) -> VElement:
        if self.grading.finite:
            raise FiniteModulus("sigma is defined for Z-gradings only")
        out = self.zero()
        for c, img in zip(x.coords, self._sigma_images):
            if c:
                out = out + img * c
        return out

    def describe(self) -> dict:
        return {
            "family_size": self.family_size,
            "dim": self.dim,
            "radical_dim": self.radical_dim,
            "basis": [list(self.signatures[i]) if not isinstance(self.signatures[i][0], tuple)
                      else [list(t) for t in self.signatures[i]] for i in self.basis],
        }


def _chamber_signature(pairings) -> tuple:
    return tuple(1 if p > 0 else -1 for p in pairings)


_SPACES: Dict[tuple, FormSpace] = {}


def space_key(grading: Grading) -> tuple:
    return (grading.system.dim_Y, grading.system.roots, grading.m, grading.degrees)


def build_form_space(grading: Grading) -> FormSpace:
    """Memoized constructor; equal graded systems share one space."""
    key = space_key(grading)
    sp = _SPACES.get(key)
    if sp is None:
        sp = _SPACES[key] = FormSpace(grading)
    return sp


def express_I(gamma, space: FormSpace) -> VElement:
    """``gamma`` is a family index or a point."""
    if isinstance(gamma, int):
        return space.express_class(gamma)
    return space.express_point(gamma)


def beta(x: VElement, space: Optional[FormSpace] = None) -> VElement:
    return (space or x.space).beta(x)


def sigma(x: VElement, space: Optional[FormSpace] = None) -> VElement:
    return (space or x.space).sigma(x)
