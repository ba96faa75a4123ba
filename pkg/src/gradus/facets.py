"""Facets of the graded affine arrangement, alcove classes and rigid orbits.

A facet is identified by its signature: for finite ``m`` the pair
``(k, on_wall)`` per root, where ``k`` is the largest level congruent to
the root degree not exceeding the pairing; for ``m = INF`` the sign of
the pairing.  Representatives are carried along but never compared.

Exact points in every alcove are produced once per root system by a
breadth-first walk over affine reflections starting from a point of the
fundamental alcove (see :class:`AlcoveCloud`).  These points avoid every
integer-level hyperplane, hence lie in ``Y'`` for every modulus.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import warn_bound
from .linalg import q_rank, q_solve_any
from .rootsys import INF, Grading, RootSystem, Vec, y_star


def _floor_level(p: Fraction, deg: int, m: int) -> int:
    """Largest N <= p with N = deg (mod m)."""
    f = math.floor(p)
    return f - ((f - deg) % m)


def signature_from_pairings(pairings: Sequence[Fraction], grading: Grading) -> tuple:
    if grading.finite:
        m = grading.m
        out = []
        for p, d in zip(pairings, grading.degrees):
            k = _floor_level(p, d, m)
            out.append((k, p == k))
        return tuple(out)
    return tuple((p > 0) - (p < 0) for p in pairings)


@dataclass(frozen=True)
class Facet:
    m: object
    signature: tuple
    point: Vec = field(compare=False, hash=False)

    def on_wall(self) -> Tuple[int, ...]:
        """Root indices whose hyperplane contains the facet."""
        if self.m == INF:
            return tuple(i for i, s in enumerate(self.signature) if s == 0)
        return tuple(i for i, (_, w) in enumerate(self.signature) if w)

    def is_alcove(self) -> bool:
        return not self.on_wall()

    def levels(self) -> Tuple[int, ...]:
        if self.m == INF:
            raise ValueError("levels are defined for finite moduli")
        return tuple(k for k, _ in self.signature)

    def to_json(self) -> dict:
        if self.m == INF:
            sig = list(self.signature)
        else:
            sig = [[k, w] for k, w in self.signature]
        return {"signature": sig, "point": [str(x) for x in self.point]}


def facet_of(y: Sequence[Fraction], grading: Grading) -> Facet:
    y = tuple(Fraction(x) for x in y)
    return Facet(grading.m, signature_from_pairings(grading.system.pairings(y), grading), y)


def subsystem_of(rho: Facet, grading: Grading) -> Grading:
    """The Z-graded subsystem of roots on walls through ``rho``."""
    idx = rho.on_wall()
    sub = grading.system.subsystem(idx)
    if grading.finite:
        degs = [rho.signature[i][0] for i in idx]
    else:
        degs = [grading.degrees[i] for i in idx]
    return Grading(sub, INF, degs, validate=False)


def realizing_point(sub: Grading) -> Vec:
    """``y`` of a Z-graded subsystem (cached on the grading)."""
    y = sub.__dict__.get("_ystar")
    if y is None:
        y = y_star(sub)
        sub.__dict__["_ystar"] = y
    return y


def act_on_point(W, k: int, y: Sequence[Fraction]) -> Vec:
    return W.act(k, y)


def d_statistic(y: Sequence[Fraction], grading: Grading) -> int:
    """Count of degree-0 roots negative at ``y`` plus degree-1 roots at least 1."""
    p = grading.system.pairings(y)
    r0 = sum(1 for i in grading.R0 if p[i] < 0)
    r1 = sum(1 for i in grading.R1 if p[i] >= 1)
    return r0 + r1


# ---------------------------------------------------------------------------
# exact points in every alcove


def _span_basis(vectors):
    basis = []
    for c in vectors:
        if q_rank(basis + [c]) > len(basis):
            basis.append(c)
    return basis


def _independent_subsets(system: RootSystem, indices: Sequence[int], size: int):
    for combo in itertools.combinations(indices, size):
        if q_rank([system.roots[i] for i in combo]) == size:
            yield combo


class _SpanSolver:
    """Solve ``(y, alpha_i) = b_i`` for ``y`` in the span of the chosen coroots."""

    def __init__(self, system: RootSystem, combo: Sequence[int]):
        self.system = system
        self.combo = combo
        cor = [system.coroots[i] for i in combo]
        n = len(combo)
        c = [[system.pair(cor[k], system.roots[i]) for k in range(n)] for i in combo]
        # invert n x n rational matrix
        inv = []
        for j in range(n):
            e = [Fraction(1 if i == j else 0) for i in range(n)]
            inv.append(q_solve_any(c, e))
        self.inv_cols = inv  # inv_cols[j] = C^{-1} e_j
        self.cor = cor

    def solve(self, rhs: Sequence[Fraction]) -> Vec:
        n = len(self.combo)
        coef = [sum((self.inv_cols[j][k] * rhs[j] for j in range(n) if rhs[j]), Fraction(0))
                for k in range(n)]
        d = self.system.dim_Y
        return tuple(sum((coef[k] * self.cor[k][i] for k in range(n) if coef[k]), Fraction(0))
                     for i in range(d))


def arrangement_vertices(system: RootSystem, levels=(-1, 0, 1)) -> List[Vec]:
    """Vertices (inside the coroot span) of ``{(y, alpha) = k}`` over positive roots."""
    pos = list(system.positive)
    r = system.coroot_span_rank
    if r == 0:
        return []
    out = set()
    for combo in _independent_subsets(system, pos, r):
        solver = _SpanSolver(system, combo)
        for ks in itertools.product(levels, repeat=r):
            out.add(solver.solve([Fraction(k) for k in ks]))
    return sorted(out)


@dataclass
class CloudPoint:
    point: Vec
    pairings: Tuple[Fraction, ...]
    vertices: Tuple[Vec, ...]


class AlcoveCloud:
    """One exact point in each alcove of the integer arrangement inside a box.

    The box is ``|(y, alpha)| < K`` for all roots, with ``K`` exceeding the
    pairings of every vertex of the arrangement with levels -1, 0, 1 by at
    least one.  Every region of any arrangement built from those levels
    then meets the box in a full alcove.
    """

    def __init__(self, system: RootSystem, extra: int = 0):
        self.system = system
        verts = arrangement_vertices(system)
        if verts:
            mx = max(abs(p) for v in verts for p in system.pairings(v))
        else:
            mx = Fraction(0)
        self.K = int(math.ceil(mx)) + 1 + extra
        h = system.max_height + 1
        self.p0 = tuple(x / h for x in system.regular_coweight)
        self.points: List[CloudPoint] = []
        self._walk()

    def _base_vertices(self) -> Tuple[Vec, ...]:
        sysm = self.system
        pos = list(sysm.positive)
        r = sysm.coroot_span_rank
        if r == 0:
            return (self.p0,)
        p0p = sysm.pairings(self.p0)
        base = [Fraction(math.floor(p0p[i])) for i in range(sysm.n_roots)]
        out = set()
        for combo in _independent_subsets(sysm, pos, r):
            solver = _SpanSolver(sysm, combo)
            for ks in itertools.product((0, 1), repeat=r):
                rhs = [base[i] + k - p0p[i] for i, k in zip(combo, ks)]
                dy = solver.solve(rhs)
                y = tuple(a + b for a, b in zip(self.p0, dy))
                pp = sysm.pairings(y)
                if all(base[i] <= pp[i] <= base[i] + 1 for i in pos):
                    out.add(y)
        return tuple(sorted(out))

    def _walk(self):
        sysm = self.system
        K = self.K
        start = CloudPoint(self.p0, sysm.pairings(self.p0), self._base_vertices())
        seen = {self.p0}
        self.points.append(start)
        frontier = [start]
        pos = list(sysm.positive)
        while frontier:
            nxt = []
            for cp in frontier:
                for i in pos:
                    p = cp.pairings[i]
                    for k in (math.floor(p), math.ceil(p)):
                        ny = _affine_reflect(sysm, i, k, cp.point)
                        if ny in seen:
                            continue
                        npair = sysm.pairings(ny)
                        if any(abs(x) >= K for x in npair):
                            continue
                        seen.add(ny)
                        verts = tuple(_affine_reflect(sysm, i, k, v) for v in cp.vertices)
                        q = CloudPoint(ny, npair, verts)
                        self.points.append(q)
                        nxt.append(q)
            frontier = nxt


def _affine_reflect(system: RootSystem, i: int, k: int, y: Vec) -> Vec:
    c = system.pair(y, system.roots[i]) - k
    if not c:
        return y
    return tuple(a - c * b for a, b in zip(y, system.coroots[i]))


def alcove_cloud(system: RootSystem, extra: int = 0) -> AlcoveCloud:
    cache = system.__dict__.setdefault("_clouds", {})
    if extra not in cache:
        cache[extra] = AlcoveCloud(system, extra)
    return cache[extra]


def closure_points(cp: CloudPoint):
    """Barycenters of all nonempty vertex subsets of the alcove of ``cp``."""
    vs = cp.vertices
    d = len(cp.point)
    for r in range(1, len(vs) + 1):
        for combo in itertools.combinations(vs, r):
            yield tuple(sum((v[i] for v in combo), Fraction(0)) / r for i in range(d))


# ---------------------------------------------------------------------------
# alcove classes (regions of the level-one walls of degree-one roots)


@dataclass
class AlcoveClass:
    signature: Tuple[int, ...]
    representative: Vec
    members: List[CloudPoint] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {"signature": list(self.signature), "point": [str(x) for x in self.representative]}


def class_signature(pairings: Sequence[Fraction], grading: Grading) -> Tuple[int, ...]:
    return tuple(1 if pairings[i] > 1 else -1 for i in grading.R1)


def alcove_classes(grading: Grading) -> List[AlcoveClass]:
    """Classes sorted by signature, each with a representative in ``Y'``."""
    if not grading.finite:
        raise ValueError("alcove classes are defined for finite moduli")
    cache = grading.__dict__.get("_classes")
    if cache is not None:
        return cache
    cloud = alcove_cloud(grading.system)
    by_sig: Dict[tuple, AlcoveClass] = {}
    for cp in cloud.points:
        s = class_signature(cp.pairings, grading)
        c = by_sig.get(s)
        if c is None:
            c = by_sig[s] = AlcoveClass(s, cp.point)
        c.members.append(cp)
    out = [by_sig[s] for s in sorted(by_sig)]
    grading.__dict__["_classes"] = out
    return out


def class_min_d(cls: AlcoveClass, grading: Grading) -> int:
    """Minimum of the d statistic over facets in the closure of alcoves of the class."""
    best = None
    seen = set()
    for cp in cls.members:
        for y in closure_points(cp):
            if y in seen:
                continue
            seen.add(y)
            d = d_statistic(y, grading)
            if best is None or d < best:
                best = d
                if d == 0:
                    return 0
    return best


# ---------------------------------------------------------------------------
# chambers of the linear arrangement


def chamber_points(system: RootSystem) -> List[Vec]:
    """One point in each chamber: the Weyl orbit of a regular point."""
    W = system.weyl_group()
    base = tuple(system.regular_coweight)
    return [W.act(k, base) for k in range(len(W))]


# ---------------------------------------------------------------------------
# f_rho


def _lcm(xs):
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)


def f_rho_point(rho: Facet, grading: Grading, y1: Sequence[Fraction],
                base: Optional[Vec] = None) -> Vec:
    """A point of the alcove ``f_rho(gamma)`` for ``y1`` in the chamber ``gamma``.

    ``base`` is a point of ``rho``; by default the realizing point of the
    subsystem (finite ``m``) or the facet representative (``m = INF``).
    """
    sysm = grading.system
    if base is None:
        base = realizing_point(subsystem_of(rho, grading)) if grading.finite else rho.point
    y = tuple(Fraction(x) for x in base)
    p = sysm.pairings(y)
    if not grading.finite:
        # rescale inside the facet so pairings are integral
        s = _lcm([x.denominator for x in p])
        y = tuple(s * x for x in y)
        r = 1
    else:
        r = _lcm([x.denominator for x in p])
    q = sysm.pairings(y1)
    mx = max((abs(x) for x in q), default=Fraction(0))
    t = Fraction(1) / (1 + mx)
    return tuple(a + t * b / r for a, b in zip(y, y1))


# ---------------------------------------------------------------------------
# rigid orbits


@dataclass
class FacetOrbit:
    representative: Facet
    members: Tuple[Facet, ...]
    rigid: bool
    d: Optional[int]
    subsystem: Grading = field(repr=False, compare=False, default=None)

    def to_json(self) -> dict:
        sub = self.subsystem
        out = {
            "facet": self.representative.to_json(),
            "size": len(self.members),
            "rigid": self.rigid,
            "d": self.d,
        }
        if sub is not None:
            out["subsystem_roots"] = [[str(x) for x in r] for r in sub.system.roots]
            out["subsystem_degrees"] = list(sub.degrees)
        return out


def orbit_of(rho: Facet, grading: Grading) -> Tuple[Facet, ...]:
    W0 = grading.W0
    seen = {}
    for k in range(len(W0)):
        f = facet_of(W0.act(k, rho.point), grading)
        seen.setdefault(f.signature, f)
    return tuple(seen[s] for s in sorted(seen))


def default_bound(grading: Grading) -> int:
    m = grading.m if grading.finite else 0
    return m + grading.system.max_height


def _candidate_points(grading: Grading, bound: int):
    sysm = grading.system
    pos = list(sysm.positive)
    r = sysm.coroot_span_rank
    m = grading.m
    seen = set()
    yield tuple(Fraction(0) for _ in range(sysm.dim_Y))
    for size in range(1, r + 1):
        for combo in _independent_subsets(sysm, pos, size):
            solver = _SpanSolver(sysm, combo)
            choices = []
            for i in combo:
                d = grading.degrees[i]
                lo = -bound + ((d + bound) % m)
                choices.append([Fraction(n) for n in range(lo, bound + 1, m)])
            for ns in itertools.product(*choices):
                y = solver.solve(ns)
                if y not in seen:
                    seen.add(y)
                    yield y


def _default_rigidity(sub: Grading) -> bool:
    from .bases import is_rigid
    return is_rigid(sub)


def enumerate_rigid_orbits(grading: Grading, bound: Optional[int] = None,
                           is_rigid: Optional[Callable[[Grading], bool]] = None,
                           check_stability: bool = True) -> List[FacetOrbit]:
    """Orbits of rigid facets, sorted by ``d`` and canonical signature."""
    if not grading.finite:
        from .bases import rigid_orbits_infinite
        return rigid_orbits_infinite(grading)
    if bound is None:
        bound = default_bound(grading)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    is_rigid = is_rigid or _default_rigidity
    out = _rigid_orbits(grading, bound, is_rigid)
    if check_stability:
        wider = _rigid_orbits(grading, bound + 1, is_rigid)
        if [o.representative.signature for o in wider] != [o.representative.signature for o in out]:
            warn_bound(f"rigid orbit set changed when the bound was raised from {bound} to {bound + 1}")
            out = wider
    return out


def _rigid_orbits(grading: Grading, bound: int, is_rigid) -> List[FacetOrbit]:
    known = {}
    orbits = []
    for y in _candidate_points(grading, bound):
        rho = facet_of(y, grading)
        if rho.signature in known:
            continue
        members = orbit_of(rho, grading)
        for f in members:
            known[f.signature] = True
        sub = subsystem_of(rho, grading)
        sub.__dict__["_ystar"] = y
        rep = members[0]
        rigid = is_rigid(sub)
        if not rigid:
            continue
        # realizing point of the canonical member
        rep_sub = subsystem_of(rep, grading)
        rep_y = realizing_point(rep_sub)
        rep = Facet(rep.m, rep.signature, rep_y)
        orbits.append(FacetOrbit(rep, members, True, d_statistic(rep_y, grading), rep_sub))
    orbits.sort(key=lambda o: (o.d, o.representative.signature))
    return orbits
