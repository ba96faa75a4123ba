"""PBW bases, canonical bases and the transition matrix.

For a Z-graded system the PBW sets are built by recursion on the number
of roots: every proper facet whose shifted realizing point lies in it
contributes the image of the ``[0]`` part of its own subsystem, and the
``[0]`` part of the whole system is obtained by lifting residues to
bar-invariant elements and projecting away from the proper part.

For a finite modulus the PBW basis is the union over rigid orbits of
the induced ``[0]`` parts, and the canonical basis is its bar-invariant
lift, computed in increasing order of ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (LiftFailure, NonPolynomialEntry, NotABasis, RadicalNotMapped,
                     RigidityMismatch, SignedBasisSearchExhausted)
from .facets import (Facet, FacetOrbit, _independent_subsets, class_min_d, enumerate_rigid_orbits,
                     f_rho_point, facet_of, orbit_of, realizing_point, subsystem_of)
from .form import FormSpace, VElement, build_form_space, space_key
from .laurent import FieldScalar, FONE, FZERO, LaurentScalar, as_field, format_field
from .linalg import SpanCoordinates, inverse, mat_vec, q_rank
from .rootsys import Grading


# ---------------------------------------------------------------------------
# induction along a facet


class Induction:
    """The linear map from the subsystem space into ``V`` attached to a facet."""

    def __init__(self, rho: Facet, grading: Grading, sub: Optional[Grading] = None,
                 base=None):
        self.rho = rho
        self.grading = grading
        self.sub = sub if sub is not None else subsystem_of(rho, grading)
        self.source = build_form_space(self.sub)
        self.target = build_form_space(grading)
        src = self.source
        if base is None and not grading.finite:
            base = rho.point
        self.base = base

        def image(y):
            return self.target.express_point(f_rho_point(rho, grading, y, base))

        self.images = [image(src.points[i]) for i in src.basis]
        # the map must send radical to radical: every family member agrees
        for i in range(src.family_size):
            img = image(src.points[i])
            expr = src.express_class(i)
            if self._apply_coords(expr.coords) != img:
                raise RadicalNotMapped("induced map is not compatible with the radical")

    def _apply_coords(self, coords) -> VElement:
        out = self.target.zero()
        for c, img in zip(coords, self.images):
            if c:
                out = out + img * c
        return out

    def apply(self, x: VElement) -> VElement:
        return self._apply_coords(x.coords)


def induce(rho: Facet, x: VElement, grading: Grading) -> VElement:
    return Induction(rho, grading).apply(x)


# ---------------------------------------------------------------------------
# bar-invariant lifting


def _split_antisymmetric(a: FieldScalar) -> LaurentScalar:
    """``p`` in vZ[v] with ``a = p - bar(p)``; LiftFailure otherwise."""
    if not a.is_laurent():
        raise LiftFailure("correction coefficient is not a Laurent polynomial")
    f = a.as_laurent()
    if not f.is_integral():
        raise LiftFailure("correction coefficient is not integral")
    if not (f + f.bar()).is_zero():
        raise LiftFailure("correction coefficient is not bar-antisymmetric")
    return LaurentScalar({k: c for k, c in f.items() if k > 0})


@dataclass
class LiftResult:
    lifts: List[VElement]
    # coefficient matrix: lifts[j] = sum_i coeff[j][i] * elements[i]
    coeff: List[List[FieldScalar]]
    order: List[int]


def bar_lift(elements: Sequence[VElement], space: FormSpace,
             levels: Optional[Sequence] = None) -> LiftResult:
    """Bar-invariant lifts ``x + sum p x'`` with ``p`` in vZ[v].

    With ``levels`` the correction may only involve elements of strictly
    smaller level; otherwise the order is read off from the support of
    the matrix of the involution and must be acyclic.
    """
    k = len(elements)
    if k == 0:
        return LiftResult([], [], [])
    try:
        span = SpanCoordinates([e.coords for e in elements])
    except ValueError as exc:
        raise LiftFailure("lattice generators are dependent") from exc
    r = []
    for e in elements:
        c = span.coords(space.beta(e).coords)
        if c is None:
            raise LiftFailure("the involution does not preserve the span of the generators")
        r.append(c)
    for j in range(k):
        if r[j][j] != FONE:
            raise LiftFailure("involution matrix is not unitriangular")
    if levels is not None:
        for j in range(k):
            for i in range(k):
                if i != j and r[j][i] and not levels[i] < levels[j]:
                    raise LiftFailure("involution is not triangular for the given order")
        order = sorted(range(k), key=lambda i: (levels[i], i))
    else:
        order = _topological(k, [[i for i in range(k) if i != j and r[j][i]] for j in range(k)])
    coeff: List[Optional[List[FieldScalar]]] = [None] * k
    done: List[int] = []
    for j in order:
        target = list(r[j])
        target[j] = target[j] - FONE
        a = {}
        for i in reversed(done):
            if target[i]:
                ai = target[i]
                a[i] = ai
                lc = coeff[i]
                target = [t - ai * x if x else t for t, x in zip(target, lc)]
        if any(target):
            raise LiftFailure("involution correction involves elements that are not lower")
        cj = [FZERO] * k
        cj[j] = FONE
        for i, ai in a.items():
            p = _split_antisymmetric(ai)
            if p.is_zero():
                continue
            pf = as_field(p)
            cj = [c + pf * x if x else c for c, x in zip(cj, coeff[i])]
        coeff[j] = cj
        done.append(j)
    lifts = []
    for j in range(k):
        x = space.zero()
        for c, e in zip(coeff[j], elements):
            if c:
                x = x + e * c
        if space.beta(x) != x:
            raise LiftFailure("lift is not fixed by the involution")
        lifts.append(x)
    return LiftResult(lifts, coeff, order)


def _topological(k: int, below: List[List[int]]) -> List[int]:
    """Order with every ``below[j]`` entry placed before ``j``; smallest index first."""
    indeg = [len(set(b)) for b in below]
    above: List[List[int]] = [[] for _ in range(k)]
    for j, bs in enumerate(below):
        for i in set(bs):
            above[i].append(j)
    ready = sorted(j for j in range(k) if indeg[j] == 0)
    out = []
    while ready:
        j = ready.pop(0)
        out.append(j)
        for t in above[j]:
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
        ready.sort()
    if len(out) != k:
        raise LiftFailure("support of the involution matrix is cyclic")
    return out


def lattice_coords(x: VElement, basis: Sequence[VElement]) -> List[FieldScalar]:
    span = SpanCoordinates([b.coords for b in basis])
    c = span.coords(x.coords)
    if c is None:
        raise NotABasis("element is outside the span of the basis")
    return c


def _in_vZv(c: FieldScalar) -> bool:
    return c.is_laurent() and c.as_laurent().is_integral() and c.as_laurent().in_vZv()


def _in_Zv(c: FieldScalar) -> bool:
    return c.is_laurent() and c.as_laurent().is_integral() and c.as_laurent().is_polynomial()


# ---------------------------------------------------------------------------
# the recursion for Z-graded systems


def flats(system) -> List[frozenset]:
    """Proper root subsets cut out by subspaces spanned by roots (including empty)."""
    pos = list(system.positive)
    r = system.coroot_span_rank
    out = {frozenset()}
    for size in range(1, r):
        for combo in _independent_subsets(system, pos, size):
            basis = [system.roots[i] for i in combo]
            t = frozenset(i for i in range(system.n_roots)
                          if q_rank(basis + [system.roots[i]]) == size)
            out.add(t)
    return sorted(out, key=lambda t: (len(t), sorted(t)))


@dataclass
class FacetContribution:
    facet: Facet
    canonical_signature: tuple
    members: Tuple[Facet, ...]
    sub: Grading
    elements: List[VElement]


@dataclass
class RecursionResult:
    grading: Grading
    space: FormSpace
    contributions: Dict[int, List[FacetContribution]] = field(default_factory=dict)
    proper: Dict[int, List[VElement]] = field(default_factory=dict)
    zero_part: Dict[int, List[VElement]] = field(default_factory=dict)
    canonical: List[VElement] = field(default_factory=list)
    # lift_index[delta][k] = index in canonical of the lift of pbw[delta][k]
    lift_index: Dict[int, List[int]] = field(default_factory=dict)

    def pbw(self, delta: int = 1) -> List[VElement]:
        return self.proper[delta] + self.zero_part[delta]

    def rigid(self, delta: int = 1) -> bool:
        return bool(self.zero_part[delta])


_REC: Dict[tuple, RecursionResult] = {}


def pbw_recursion(grading: Grading, delta: int = 1) -> RecursionResult:
    """Run the recursion (both signs are always computed)."""
    if grading.finite:
        raise ValueError("the recursion applies to Z-gradings")
    key = space_key(grading)
    res = _REC.get(key)
    if res is None:
        res = _recursion(grading)
        _REC[key] = res
    return res


_RIGID: Dict[tuple, bool] = {}


def graded_type_key(grading: Grading) -> tuple:
    """Isomorphism invariant of a Z-graded system.

    Simple roots are taken for the positive system where a root is
    positive when its degree is, ties broken by the regular coweight; the
    key is the least relabeling of the Cartan matrix with degrees.
    """
    from itertools import permutations
    sysm = grading.system
    deg = grading.degrees
    ht = sysm.heights
    pos = {i for i in range(sysm.n_roots) if deg[i] > 0 or (deg[i] == 0 and ht[i] > 0)}
    dec = {k for (i, j), k in sysm.sums.items() if i in pos and j in pos}
    simple = sorted(pos - dec)
    n = len(simple)
    cart = [[int(sysm.pair(sysm.coroots[a], sysm.roots[b])) for b in simple] for a in simple]
    best = None
    for perm in permutations(range(n)):
        k = (tuple(tuple(cart[perm[i]][perm[j]] for j in range(n)) for i in range(n)),
             tuple(deg[simple[perm[i]]] for i in range(n)))
        if best is None or k < best:
            best = k
    return (n,) + (best or ())


def is_rigid(sub: Grading) -> bool:
    key = graded_type_key(sub)
    r = _RIGID.get(key)
    if r is None:
        r = _RIGID[key] = pbw_recursion(sub).rigid(1)
    return r


def _recursion(grading: Grading) -> RecursionResult:
    V = build_form_space(grading)
    sysm = grading.system
    res = RecursionResult(grading, V)
    if not sysm.roots or grading.is_trivial():
        # one-dimensional space spanned by the unique chamber class
        if V.dim != 1:
            raise NotABasis("trivially graded space is not one-dimensional")
        coef = FieldScalar(LaurentScalar.monomial(sysm.n_roots // 2), grading.e_W0)
        z = V.express_class(0) * coef
        for d in (1, -1):
            res.contributions[d] = []
            res.proper[d] = []
            res.zero_part[d] = [z]
            res.lift_index[d] = [0]
        res.canonical = [z]
        return res

    y_s = realizing_point(grading)
    candidates = flats(sysm)
    for delta in (1, -1):
        seen = set()
        contribs = []
        for t in candidates:
            sub_t = grading.restrict(sorted(t))
            y_t = realizing_point(sub_t)
            p = tuple(delta * (a - b) for a, b in zip(y_t, y_s))
            rho = facet_of(p, grading)
            if rho.signature in seen:
                continue
            if frozenset(rho.on_wall()) != t:
                continue
            members = orbit_of(rho, grading)
            seen.update(f.signature for f in members)
            # both signs agree on rigidity
            if not is_rigid(sub_t):
                continue
            rec_t = pbw_recursion(sub_t)
            ind = Induction(rho, grading, sub_t, base=p)
            elems = [ind.apply(z) for z in rec_t.zero_part[delta]]
            contribs.append(FacetContribution(rho, members[0].signature, members, sub_t, elems))
        res.contributions[delta] = contribs
        res.proper[delta] = [e for c in contribs for e in c.elements]

    lifted = {d: bar_lift(res.proper[d], V) for d in (1, -1)}
    canonical: List[VElement] = []
    index_of: Dict[VElement, int] = {}
    for d in (1, -1):
        for x in lifted[d].lifts:
            if x not in index_of:
                index_of[x] = len(canonical)
                canonical.append(x)
    if len(canonical) != V.dim:
        raise NotABasis(f"{len(canonical)} bar-invariant lifts for a space of dimension {V.dim}")
    try:
        SpanCoordinates([b.coords for b in canonical])
    except ValueError as exc:
        raise NotABasis("bar-invariant lifts are dependent") from exc
    res.canonical = canonical

    # each generator is congruent to its lift modulo v times the lattice
    for d in (1, -1):
        for x, b in zip(res.proper[d], lifted[d].lifts):
            c = lattice_coords(x - b, canonical)
            if not all(not a or _in_vZv(a) for a in c):
                raise LiftFailure("generator is not congruent to its lift")

    for d in (1, -1):
        proper = res.proper[d]
        own = {index_of[x] for x in lifted[d].lifts}
        zero = []
        zero_lift = []
        if proper:
            g = [[V.form(a, b) for b in proper] for a in proper]
            ginv = inverse(g)
            if ginv is None:
                raise NotABasis("form is degenerate on the proper part")
        for k, b in enumerate(canonical):
            if k in own:
                continue
            hat = b
            if proper:
                rhs = [V.form(a, b) for a in proper]
                c = mat_vec(ginv, rhs)
                for ck, a in zip(c, proper):
                    if ck:
                        hat = hat - a * ck
            diff = lattice_coords(b - hat, canonical)
            if not all(not a or _in_vZv(a) for a in diff):
                raise LiftFailure("projected element is not congruent to its lift")
            zero.append(hat)
            zero_lift.append(k)
        res.zero_part[d] = zero
        res.lift_index[d] = [index_of[x] for x in lifted[d].lifts] + zero_lift
        pbw = res.pbw(d)
        if len(pbw) != V.dim:
            raise NotABasis(f"PBW set has {len(pbw)} elements for a space of dimension {V.dim}")
        try:
            SpanCoordinates([x.coords for x in pbw])
        except ValueError as exc:
            raise NotABasis("PBW set is dependent") from exc
    if res.rigid(1) != res.rigid(-1):
        raise RigidityMismatch("the two signs disagree on rigidity of [0]")
    return res


def rigid_orbits_infinite(grading: Grading) -> List[FacetOrbit]:
    """Rigid orbits (sign +1) of a Z-graded system; ``d`` is left undefined."""
    res = pbw_recursion(grading)
    out = []
    if res.rigid(1):
        zero = facet_of([0] * grading.system.dim_Y, grading)
        out.append(FacetOrbit(zero, (zero,), True, None, grading))
    for c in res.contributions[1]:
        rep = c.members[0]
        out.append(FacetOrbit(rep, c.members, True, None, subsystem_of(rep, grading)))
    return out


# ---------------------------------------------------------------------------
# finite modulus


@dataclass
class BasisFamily:
    grading: Grading
    space: FormSpace
    orbits: List[FacetOrbit]
    pbw: List[VElement]
    canonical: List[VElement]
    orbit_index: List[int]
    transition: List[List[LaurentScalar]]
    # origin[k]: position of pbw[k] in the [0] part of its orbit's subsystem
    origin: List[int] = field(default_factory=list)

    @property
    def d_values(self) -> List[Optional[int]]:
        return [self.orbits[o].d for o in self.orbit_index]

    def pbw_of_orbit(self, o: int) -> List[VElement]:
        return [x for x, t in zip(self.pbw, self.orbit_index) if t == o]

    def canonical_of_orbit(self, o: int) -> List[VElement]:
        return [x for x, t in zip(self.canonical, self.orbit_index) if t == o]

    def to_json(self) -> dict:
        return {
            "dim": self.space.dim,
            "orbits": [o.to_json() for o in self.orbits],
            "pbw": [{"orbit": t, "coords": x.to_json()} for x, t in zip(self.pbw, self.orbit_index)],
            "canonical": [{"orbit": t, "coords": x.to_json()} for x, t in zip(self.canonical, self.orbit_index)],
            "transition": [[format_field(as_field(e)) for e in row] for row in self.transition],
        }


def _render_key(x: VElement):
    return tuple(format_field(c) for c in x.coords)


_FAMILIES: Dict[tuple, BasisFamily] = {}


def assemble_bases(grading: Grading, bound: Optional[int] = None,
                   check_stability: bool = True) -> BasisFamily:
    """PBW and canonical bases (finite modulus) or their sign +1 analogues (Z-gradings)."""
    key = (space_key(grading), bound)
    fam = _FAMILIES.get(key)
    if fam is not None:
        return fam
    if grading.finite:
        fam = _assemble_finite(grading, bound, check_stability)
    else:
        fam = _assemble_infinite(grading)
    _FAMILIES[key] = fam
    return fam


def _assemble_finite(grading, bound, check_stability) -> BasisFamily:
    V = build_form_space(grading)
    theta = enumerate_rigid_orbits(grading, bound, check_stability=check_stability)
    pbw: List[VElement] = []
    tags: List[int] = []
    origin: List[int] = []
    for o, orb in enumerate(theta):
        rho = orb.representative
        rec = pbw_recursion(orb.subsystem)
        ind = Induction(rho, grading, orb.subsystem)
        elems = sorted(((ind.apply(z), k) for k, z in enumerate(rec.zero_part[1])),
                       key=lambda t: _render_key(t[0]))
        pbw.extend(x for x, _ in elems)
        origin.extend(k for _, k in elems)
        tags.extend([o] * len(elems))
    if len(pbw) != V.dim:
        raise NotABasis(f"{len(pbw)} PBW elements for a space of dimension {V.dim}; "
                        "try a larger search bound")
    try:
        SpanCoordinates([x.coords for x in pbw])
    except ValueError as exc:
        raise NotABasis("PBW elements are dependent") from exc
    if len(set(pbw)) != len(pbw):
        raise NotABasis("PBW parts of different orbits overlap")
    levels = [theta[t].d for t in tags]
    lift = bar_lift(pbw, V, levels)
    trans = transition_from_coeff(lift.coeff)
    return BasisFamily(grading, V, theta, pbw, lift.lifts, tags, trans, origin)


def _assemble_infinite(grading) -> BasisFamily:
    res = pbw_recursion(grading)
    V = res.space
    theta = rigid_orbits_infinite(grading)
    pbw: List[VElement] = []
    tags: List[int] = []
    off = 0
    if res.rigid(1):
        pbw.extend(res.zero_part[1])
        tags.extend([0] * len(res.zero_part[1]))
        off = 1
    for k, c in enumerate(res.contributions[1]):
        pbw.extend(c.elements)
        tags.extend([k + off] * len(c.elements))
    lift = bar_lift(pbw, V)
    canon = lift.lifts
    if set(canon) != set(res.canonical):
        raise NotABasis("lifts of the PBW basis differ from the canonical basis")
    trans = transition_from_coeff(lift.coeff)
    origin = [k for t in sorted(set(tags)) for k in range(tags.count(t))]
    return BasisFamily(grading, V, theta, pbw, canon, tags, trans, origin)


def transition_from_coeff(coeff: Sequence[Sequence[FieldScalar]]) -> List[List[LaurentScalar]]:
    """``M[i][j]`` = coefficient of PBW element ``i`` in canonical element ``j``."""
    k = len(coeff)
    out = [[None] * k for _ in range(k)]
    for j in range(k):
        for i in range(k):
            c = coeff[j][i]
            if not _in_Zv(c) and c:
                raise NonPolynomialEntry(f"transition entry ({i},{j}) = {format_field(c)} is not in Z[v]")
            f = c.as_laurent() if c else LaurentScalar()
            if i == j and f != LaurentScalar(1):
                raise NonPolynomialEntry("transition diagonal entry is not 1")
            if i != j and not f.is_zero() and not f.in_vZv():
                raise NonPolynomialEntry("off-diagonal transition entry is not in vZ[v]")
            out[i][j] = f
    return out


def transition_matrix(family: BasisFamily) -> List[List[LaurentScalar]]:
    return family.transition


# ---------------------------------------------------------------------------
# the alternative construction through alcove classes


@dataclass
class AltResult:
    space: FormSpace
    generators: List[VElement]
    stabilizer_poincare: List[LaurentScalar]
    signed_basis: List[VElement]
    D: List[int]
    bang: List[VElement]

    def matches(self, family: BasisFamily) -> bool:
        return set(self.signed_basis) == set(family.canonical) and set(self.bang) == set(family.pbw)


def class_stabilizer_roots(grading: Grading, index: int) -> List[int]:
    """Degree-0 roots whose reflection maps the class ``index`` to itself."""
    from .facets import alcove_classes, class_signature
    cls = alcove_classes(grading)[index]
    sysm = grading.system
    out = []
    for i in grading.R0:
        y = sysm.reflect_Y(i, cls.representative)
        if class_signature(sysm.pairings(y), grading) == cls.signature:
            out.append(i)
    return out


def _lowest(f: FieldScalar) -> Tuple[int, Fraction]:
    if not f.is_laurent():
        raise SignedBasisSearchExhausted("pairing value is not a Laurent polynomial")
    return f.as_laurent().lowest_degree()


def _coeff_at(f: FieldScalar, k: int) -> Fraction:
    if not f.is_laurent():
        raise SignedBasisSearchExhausted("pairing value is not a Laurent polynomial")
    return f.as_laurent().coeff(k)


def _reduce(h: VElement, known: List[VElement], V: FormSpace):
    """Strip known basis components; returns residue and half its leading depth."""
    for _ in range(1000):
        if h.is_zero():
            return h, None
        low, lead = _lowest(V.form(h, h))
        if low > 0 or low % 2:
            raise SignedBasisSearchExhausted("self-pairing has unexpected leading degree")
        ell = -low // 2
        progress = False
        for b in known:
            c = _coeff_at(V.form(h, b), -ell)
            if c:
                if ell:
                    mult = LaurentScalar({-ell: c, ell: c})
                else:
                    mult = LaurentScalar({0: c})
                h = h - b * as_field(mult)
                progress = True
        if not progress:
            return h, (ell, lead)
    raise SignedBasisSearchExhausted("reduction does not terminate")


def _signed_basis(gens: List[VElement], V: FormSpace) -> List[VElement]:
    known: List[VElement] = []
    residues = list(gens)

    def sweep():
        changed = False
        nonlocal residues
        new_res = []
        for h in residues:
            r, info = _reduce(h, known, V)
            if info is None:
                changed = changed or not h.is_zero()
                continue
            ell, lead = info
            if ell == 0 and lead == 1:
                known.append(r)
                changed = True
                continue
            new_res.append(r)
            changed = changed or r != h
        residues = new_res
        return changed

    while len(known) < V.dim:
        if sweep():
            continue
        # combine two residues
        found = False
        for i in range(len(residues)):
            for j in range(i + 1, len(residues)):
                for s in (1, -1):
                    x, info = _reduce(residues[i] + residues[j] * s, known, V)
                    if info is None or info != (0, 1):
                        continue
                    signs = set()
                    for r in residues:
                        c = _coeff_at(V.form(r, x), 0)
                        if c:
                            signs.add(c > 0)
                    if signs == {False}:
                        x = -x
                    elif signs != {True}:
                        continue
                    known.append(x)
                    found = True
                    break
                if found:
                    break
            if found:
                break
        if not found:
            raise SignedBasisSearchExhausted(
                f"found {len(known)} of {V.dim} signed basis elements")
    return known


def altpbw(grading: Grading) -> AltResult:
    """Canonical and PBW bases rebuilt from alcove classes and stabilizers."""
    from .facets import alcove_classes
    if not grading.finite:
        raise ValueError("the alternative construction needs a finite modulus")
    V = build_form_space(grading)
    classes = alcove_classes(grading)
    gens, poins = [], []
    for i in V.orbit_reps:
        roots = class_stabilizer_roots(grading, i)
        e = grading.system.weyl_group(roots).poincare()
        coef = FieldScalar(LaurentScalar.monomial(len(roots) // 2), e)
        gens.append(V.express_class(i) * coef)
        poins.append(e)
    basis = _signed_basis(gens, V)
    # order the signed basis by its first appearance in the generators
    D = []
    mins = {}
    for b_idx, b in enumerate(basis):
        best = None
        for i in V.orbit_reps:
            c = lattice_coords(V.express_class(i), basis)[b_idx]
            if not c:
                continue
            if i not in mins:
                mins[i] = class_min_d(classes[i], grading)
            if best is None or mins[i] < best:
                best = mins[i]
        D.append(best)
    bang = []
    for k, b in enumerate(basis):
        lower = [x for x, dx in zip(basis, D) if dx < D[k]]
        if not lower:
            bang.append(b)
            continue
        g = [[V.form(a, c) for c in lower] for a in lower]
        ginv = inverse(g)
        c = mat_vec(ginv, [V.form(a, b) for a in lower])
        x = b
        for ck, a in zip(c, lower):
            if ck:
                x = x - a * ck
        bang.append(x)
    return AltResult(V, gens, poins, basis, D, bang)
