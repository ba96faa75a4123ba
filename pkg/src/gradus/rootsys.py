"""Root systems, Weyl groups and gradings.

Points of ``Y`` are stored in fundamental-coweight coordinates and
elements of ``X`` in simple-root coordinates, so for the built-in types
the pairing is the identity matrix.  A coroot's coordinates are then the
values it takes on the simple roots, i.e. a row of the Cartan matrix.

Subsystems (``R_0``, ``R(rho)``, Levi subsystems) are handled as new
:class:`RootSystem` objects living on the same ``Y`` and ``X``; the
attribute ``parent_index`` records where each root came from.
"""

from __future__ import annotations

import json
import math
import re
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (Inconsistent, InvalidGrading, InvalidRootSystem,
                     NonIntegralPairing, NonTerminating, ParseError, UnknownType)
from .laurent import LaurentScalar
from .linalg import q_rank, q_solve_any

INF = math.inf

Vec = Tuple[Fraction, ...]


def vec(xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {s!r}") from exc
    raise ParseError(f"rationals must be given as integers or 'p/q' strings, got {s!r}")


# ---------------------------------------------------------------------------
# Cartan matrices

def cartan_matrix(kind: str, n: int) -> List[List[int]]:
    """Cartan matrix ``A[i][j] = (coroot_i, root_j)`` (Bourbaki numbering)."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind == "G":
        if n != 2:
            raise UnknownType(f"G{n}")
        return [[2, -1], [-3, 2]]
    if kind == "F":
        if n != 4:
            raise UnknownType(f"F{n}")
        a[0][1] = a[1][0] = a[2][3] = a[3][2] = -1
        a[1][2], a[2][1] = -1, -2
        return a
    if kind == "E":
        if n not in (6, 7, 8):
            raise UnknownType(f"E{n}")
        for i, j in [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]:
            a[i][j] = a[j][i] = -1
        return a
    if kind not in "ABCD" or n < 1:
        raise UnknownType(f"{kind}{n}")
    if kind == "D" and n < 2:
        raise UnknownType(f"D{n}")
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if kind == "B" and n >= 2:
        a[n - 1][n - 2] = -2
    elif kind == "C" and n >= 2:
        a[n - 2][n - 1] = -2
    elif kind == "D" and n >= 3:
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif kind == "D" and n == 2:
        a[0][1] = a[1][0] = 0
    return a


_COMPONENT = re.compile(r"([A-Ga-g])(\d+)")


def parse_cartan_type(label: str) -> List[Tuple[str, int]]:
    """``"A2xB3"`` -> ``[("A", 2), ("B", 3)]``; separators x, +, *, comma, space."""
    label = label.strip()
    if not label:
        return []
    parts = [p for p in re.split(r"[x×+*,\s]+", label) if p]
    out = []
    for p in parts:
        mo = _COMPONENT.fullmatch(p)
        if not mo:
            raise UnknownType(f"cannot parse type component {p!r}")
        kind, n = mo.group(1).upper(), int(mo.group(2))
        cartan_matrix(kind, n)
        out.append((kind, n))
    return out


# ---------------------------------------------------------------------------

class RootSystem:
    """Roots ``R`` in ``X`` and coroots in ``Y`` aligned by index."""

    def __init__(self, pairing, roots, coroots, label: str = "",
                 parent_index: Optional[Sequence[int]] = None, components=None):
        self.pairing = tuple(vec(r) for r in pairing)
        self.dim_Y = len(self.pairing)
        self.dim_X = len(self.pairing[0]) if self.pairing else 0
        self.roots: Tuple[Vec, ...] = tuple(vec(r) for r in roots)
        self.coroots: Tuple[Vec, ...] = tuple(vec(c) for c in coroots)
        self.label = label
        self.parent_index = tuple(parent_index) if parent_index is not None else None
        self.components = components
        self._identity = all(self.pairing[i][j] == (1 if i == j else 0)
                             for i in range(self.dim_Y) for j in range(self.dim_X))
        self._validate()
        self._index = {r: i for i, r in enumerate(self.roots)}

    # -- construction helpers ------------------------------------------------
    def _validate(self):
        if self.dim_Y != self.dim_X:
            raise InvalidRootSystem("pairing must be square")
        if self.dim_Y and q_rank(self.pairing) != self.dim_Y:
            raise InvalidRootSystem("pairing is degenerate")
        if len(self.roots) != len(self.coroots):
            raise InvalidRootSystem("roots and coroots are not aligned")
        if len(set(self.roots)) != len(self.roots):
            raise InvalidRootSystem("repeated root")
        rs = set(self.roots)
        for a, c in zip(self.roots, self.coroots):
            if self.pair(c, a) != 2:
                raise InvalidRootSystem(f"(coroot, root) != 2 for root {a}")
            if tuple(-x for x in a) not in rs:
                raise InvalidRootSystem("roots not closed under negation")
            for b in self.roots:
                k = self.pair(c, b)
                if k.denominator != 1:
                    raise InvalidRootSystem("non-integral Cartan integer")
                if tuple(x - k * y for x, y in zip(b, a)) not in rs:
                    raise InvalidRootSystem("reflection does not permute roots")

    @classmethod
    def from_cartan_type(cls, label: str, dim: Optional[int] = None) -> "RootSystem":
        comps = parse_cartan_type(label)
        if not comps:
            d = 0 if dim is None else int(dim)
            if d < 0:
                raise UnknownType("negative dimension")
            ident = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
            return cls(ident, [], [], label="", components=[])
        n = sum(k for _, k in comps)
        if dim is not None and int(dim) != n:
            raise UnknownType(f"type {label} has rank {n}, not {dim}")
        big = [[0] * n for _ in range(n)]
        off = 0
        for kind, k in comps:
            a = cartan_matrix(kind, k)
            for i in range(k):
                for j in range(k):
                    big[off + i][off + j] = a[i][j]
            off += k
        roots, coroots = _roots_from_cartan(big)
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(ident, roots, coroots, label=label, components=comps)

    # -- basic operations ----------------------------------------------------
    def pair(self, y: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
        if self._identity:
            return sum((a * b for a, b in zip(y, x)), Fraction(0))
        s = Fraction(0)
        for i, yi in enumerate(y):
            if yi:
                row = self.pairing[i]
                for j, xj in enumerate(x):
                    if xj and row[j]:
                        s += yi * row[j] * xj
        return s

    def pairings(self, y: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """``((y, alpha) for alpha in R)``."""
        y = tuple(y)
        cache = self.__dict__.setdefault("_pair_cache", {})
        out = cache.get(y)
        if out is not None:
            return out
        cols = self.__dict__.get("_root_cols")
        if cols is None:
            # the pairing against each root as a column over Y
            cols = [tuple(sum((self.pairing[i][j] * a[j] for j in range(self.dim_X)), Fraction(0))
                          for i in range(self.dim_Y)) for a in self.roots]
            scale = 1
            for c in cols:
                for x in c:
                    scale = scale * x.denominator // math.gcd(scale, x.denominator)
            cols = self.__dict__["_root_cols"] = (scale, [tuple(int(x * scale) for x in c) for c in cols])
        scale, icols = cols
        den = 1
        for a in y:
            a = Fraction(a)
            den = den * a.denominator // math.gcd(den, a.denominator)
        nums = [int(Fraction(a) * den) for a in y]
        den *= scale
        out = tuple(Fraction(sum(n * c for n, c in zip(nums, col)), den) for col in icols)
        if len(cache) > 200000:
            cache.clear()
        cache[y] = out
        return out

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    def index(self, root: Sequence[Fraction]) -> int:
        return self._index[vec(root)]

    def neg(self, i: int) -> int:
        return self._neg[i]

    @cached_property
    def _neg(self) -> Tuple[int, ...]:
        return tuple(self._index[tuple(-x for x in r)] for r in self.roots)

    @cached_property
    def sums(self) -> Dict[Tuple[int, int], int]:
        """``(i, j) -> k`` whenever ``roots[i] + roots[j] == roots[k]``."""
        out = {}
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                s = tuple(x + y for x, y in zip(a, b))
                k = self._index.get(s)
                if k is not None:
                    out[(i, j)] = k
        return out

    @cached_property
    def regular_coweight(self) -> Vec:
        """A point pairing positively with a fixed positive system.

        For built-in types this is the sum of fundamental coweights; its
        pairing with a root is the root height.
        """
        if not self.roots:
            return tuple(Fraction(0) for _ in range(self.dim_Y))
        if self._identity and self.components is not None:
            return tuple(Fraction(1) for _ in range(self.dim_Y))
        # generic: perturb until regular
        k = 1
        while True:
            y = tuple(Fraction(k ** (i + 1) + i) for i in range(self.dim_Y))
            if all(p != 0 for p in self.pairings(y)):
                return y
            k += 1

    @cached_property
    def heights(self) -> Tuple[Fraction, ...]:
        return self.pairings(self.regular_coweight)

    @cached_property
    def positive(self) -> Tuple[int, ...]:
        return tuple(i for i, h in enumerate(self.heights) if h > 0)

    def is_positive(self, i: int) -> bool:
        return self.heights[i] > 0

    @cached_property
    def max_height(self) -> int:
        if not self.roots:
            return 0
        return int(math.ceil(max(self.heights)))

    @cached_property
    def coroot_span_rank(self) -> int:
        return q_rank(list(self.coroots)) if self.coroots else 0

    def reflect_Y(self, i: int, y: Sequence[Fraction]) -> Vec:
        k = self.pair(y, self.roots[i])
        if not k:
            return tuple(y)
        return tuple(a - k * c for a, c in zip(y, self.coroots[i]))

    def reflect_X(self, i: int, x: Sequence[Fraction]) -> Vec:
        k = self.pair(self.coroots[i], x)
        if not k:
            return tuple(x)
        return tuple(a - k * r for a, r in zip(x, self.roots[i]))

    @cached_property
    def reflection_perms(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self._index[self.reflect_X(i, r)] for r in self.roots)
                     for i in range(self.n_roots))

    def is_closed_subset(self, indices: Iterable[int]) -> bool:
        s = set(indices)
        return all(self._neg[i] in s for i in s)

    def subsystem(self, indices: Iterable[int], label: str = "") -> "RootSystem":
        """The root system formed by ``indices`` (closed under negation)."""
        idx = sorted(set(indices))
        if not self.is_closed_subset(idx):
            raise InvalidRootSystem("subset not closed under negation")
        sub = RootSystem.__new__(RootSystem)
        sub.pairing = self.pairing
        sub.dim_Y = self.dim_Y
        sub.dim_X = self.dim_X
        sub.roots = tuple(self.roots[i] for i in idx)
        sub.coroots = tuple(self.coroots[i] for i in idx)
        sub.label = label
        sub.parent_index = idx
        sub.components = None
        sub._identity = self._identity
        sub._index = {r: i for i, r in enumerate(sub.roots)}
        # reuse the ambient positive system
        sub.__dict__["regular_coweight"] = self.regular_coweight
        loc = {g: k for k, g in enumerate(idx)}
        sub.__dict__["sums"] = {(loc[i], loc[j]): loc[k] for (i, j), k in self.sums.items()
                                if i in loc and j in loc and k in loc}
        return sub

    @cached_property
    def simple(self) -> Tuple[int, ...]:
        """Simple roots of the positive system (indecomposable positive roots)."""
        pos = set(self.positive)
        dec = set()
        for (i, j), k in self.sums.items():
            if i in pos and j in pos:
                dec.add(k)
        return tuple(sorted(pos - dec))

    def weyl_group(self, subset: Optional[Iterable[int]] = None, bound: int = 200000) -> "WeylGroup":
        if subset is None:
            key = None
        else:
            key = frozenset(subset)
            if not self.is_closed_subset(key):
                raise InvalidRootSystem("subset not closed under negation")
        cache = self.__dict__.setdefault("_wcache", {})
        if key not in cache:
            cache[key] = WeylGroup(self, key, bound)
        return cache[key]

    def __repr__(self):
        return f"RootSystem({self.label!r}, dim={self.dim_Y}, roots={self.n_roots})"

    def describe(self) -> dict:
        return {
            "type": self.label,
            "dim": self.dim_Y,
            "roots": [[str(x) for x in r] for r in self.roots],
            "coroots": [[str(x) for x in c] for c in self.coroots],
        }


def _roots_from_cartan(a: List[List[int]]):
    n = len(a)
    simple = [tuple(Fraction(1 if k == i else 0) for k in range(n)) for i in range(n)]
    simple_co = [tuple(Fraction(a[i][k]) for k in range(n)) for i in range(n)]
    seen = {}
    queue = deque()
    for r, c in zip(simple, simple_co):
        seen[r] = c
        queue.append(r)
    while queue:
        r = queue.popleft()
        c = seen[r]
        for i in range(n):
            k = sum((c[j] * simple[i][j] for j in range(n)), Fraction(0))  # (coroot, alpha_i)
            kk = sum((simple_co[i][j] * r[j] for j in range(n)), Fraction(0))  # (coroot_i, root)
            nr = tuple(x - kk * y for x, y in zip(r, simple[i]))
            nc = tuple(x - k * y for x, y in zip(c, simple_co[i]))
            if nr not in seen:
                seen[nr] = nc
                queue.append(nr)
    # positive roots first by height then lexicographic, then negatives
    pos = sorted((r for r in seen if sum(r) > 0), key=lambda r: (sum(r), tuple(-x for x in r)))
    roots = pos + [tuple(-x for x in r) for r in pos]
    coroots = [seen[r] for r in roots]
    return roots, coroots


# ---------------------------------------------------------------------------

class WeylGroup:
    """The group generated by reflections in a negation-closed set of roots.

    Elements are stored as permutations of the ambient root indices,
    together with their integer (rational) matrices on ``Y``.  Element 0
    is the identity; elements are listed in order of increasing length.
    """

    def __init__(self, system: RootSystem, subset: Optional[frozenset], bound: int):
        self.system = system
        n = system.n_roots
        self.subset = frozenset(range(n)) if subset is None else subset
        pos_sub = [i for i in system.positive if i in self.subset]
        self.positive_roots = tuple(pos_sub)
        ps = set(pos_sub)
        dec = set()
        for (i, j), k in system.sums.items():
            if i in ps and j in ps and k in ps:
                dec.add(k)
        self.simple_roots = tuple(sorted(ps - dec))
        gens = [system.reflection_perms[i] for i in self.simple_roots]
        ident = tuple(range(n))
        self.elements: List[Tuple[int, ...]] = [ident]
        self.lengths: List[int] = [0]
        self._pos = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[k]] for k in range(n))  # s o w
                    if q not in self._pos:
                        if len(self.elements) >= bound:
                            raise NonTerminating(f"Weyl group exceeds {bound} elements")
                        self._pos[q] = len(self.elements)
                        self.elements.append(q)
                        self.lengths.append(self.lengths[self._pos[p]] + 1)
                        nxt.append(q)
            frontier = nxt
        self._mats = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def inversion_length(self, k: int) -> int:
        p = self.elements[k]
        sysm = self.system
        return sum(1 for i in self.positive_roots if not sysm.is_positive(p[i]))

    def index_of(self, perm: Sequence[int]) -> int:
        return self._pos[tuple(perm)]

    def multiply(self, a: int, b: int) -> int:
        pa, pb = self.elements[a], self.elements[b]
        return self._pos[tuple(pa[pb[k]] for k in range(len(pa)))]

    def inverse(self, a: int) -> int:
        p = self.elements[a]
        inv = [0] * len(p)
        for k, j in enumerate(p):
            inv[j] = k
        return self._pos[tuple(inv)]

    @property
    def matrices(self) -> List[Tuple[Tuple[Fraction, ...], ...]]:
        """Matrices on Y (columns are images of basis vectors)."""
        if self._mats is None:
            self._mats = [self._matrix_of(p) for p in self.elements]
        return self._mats

    def _matrix_of(self, perm) -> Tuple[Tuple[Fraction, ...], ...]:
        # w(y) is determined by (w y, w a) = (y, a): pair with the images of roots
        sysm = self.system
        d = sysm.dim_Y
        cols = [self._act_basis(perm, i) for i in range(d)]
        return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))

    def _act_basis(self, perm, i):
        # apply the word: reconstruct by reflections along a reduced word
        sysm = self.system
        y = tuple(Fraction(1 if k == i else 0) for k in range(sysm.dim_Y))
        for s in reversed(self.word(self._pos[tuple(perm)])):
            y = sysm.reflect_Y(s, y)
        return y

    def word(self, k: int) -> List[int]:
        """A reduced word (list of simple root indices), rightmost applied first."""
        sysm = self.system
        p = self.elements[k]
        out = []
        while self.lengths[self._pos[p]] > 0:
            for s in self.simple_roots:
                # right descent: w(alpha_s) negative
                if not sysm.is_positive(p[s]):
                    g = sysm.reflection_perms[s]
                    p = tuple(p[g[j]] for j in range(len(p)))  # w o s
                    out.append(s)
                    break
        return out[::-1]

    def act(self, k: int, y: Sequence[Fraction]) -> Vec:
        m = self.matrices[k]
        return tuple(sum((m[i][j] * y[j] for j in range(len(y)) if y[j]), Fraction(0))
                     for i in range(len(m)))

    def poincare(self) -> LaurentScalar:
        """``e = sum_w v^(2|w|)``."""
        c: Dict[int, int] = {}
        for ln in self.lengths:
            c[2 * ln] = c.get(2 * ln, 0) + 1
        return LaurentScalar(c)

    @property
    def longest_length(self) -> int:
        return max(self.lengths)


def e_W(system: RootSystem, subset: Optional[Iterable[int]] = None) -> LaurentScalar:
    return system.weyl_group(subset).poincare()


# ---------------------------------------------------------------------------

class Grading:
    """A Z/m-grading (``m`` a positive integer) or a Z-grading (``m = INF``)."""

    def __init__(self, system: RootSystem, m, degrees: Sequence[int],
                 y_gr: Optional[Sequence[Fraction]] = None, validate: bool = True):
        self.system = system
        self.m = _normalize_modulus(m)
        if len(degrees) != system.n_roots:
            raise InvalidGrading("one degree per root is required")
        if self.finite:
            self.degrees = tuple(int(d) % self.m for d in degrees)
        else:
            self.degrees = tuple(int(d) for d in degrees)
        self.y_gr = vec(y_gr) if y_gr is not None else None
        if validate:
            self.validate()

    @property
    def finite(self) -> bool:
        return self.m != INF

    def _add(self, a, b):
        return (a + b) % self.m if self.finite else a + b

    def validate(self):
        sysm = self.system
        deg = self.degrees
        for i in range(sysm.n_roots):
            j = sysm.neg(i)
            if self._add(deg[i], deg[j]) != 0:
                raise InvalidGrading(f"degrees of roots {i} and {j} do not cancel")
        for (i, j), k in sysm.sums.items():
            if deg[k] != self._add(deg[i], deg[j]):
                raise InvalidGrading(f"degree of root {k} is not the sum of degrees of {i} and {j}")
        if not self.finite:
            y = y_star(self)
            if self.y_gr is None:
                self.y_gr = y

    def part(self, j) -> Tuple[int, ...]:
        """Indices of roots of degree ``j``."""
        if self.finite:
            j %= self.m
        return tuple(i for i, d in enumerate(self.degrees) if d == j)

    @cached_property
    def R0(self) -> Tuple[int, ...]:
        return self.part(0)

    @cached_property
    def R1(self) -> Tuple[int, ...]:
        return self.part(1)

    @cached_property
    def W0(self) -> WeylGroup:
        return self.system.weyl_group(self.R0)

    @cached_property
    def e_W0(self) -> LaurentScalar:
        return self.W0.poincare()

    def restrict(self, indices: Sequence[int], sub: Optional[RootSystem] = None) -> "Grading":
        """The induced grading on the subsystem formed by ``indices``."""
        sub = sub or self.system.subsystem(indices)
        degs = [self.degrees[i] for i in sub.parent_index]
        return Grading(sub, self.m, degs, validate=False)

    def is_trivial(self) -> bool:
        return all(d == 0 for d in self.degrees)

    def key(self):
        return (self.m, self.degrees)

    def __repr__(self):
        m = "inf" if not self.finite else self.m
        return f"Grading({self.system.label!r}, m={m}, degrees={list(self.degrees)})"


def _normalize_modulus(m):
    if m in (INF, None) or (isinstance(m, str) and m.strip().lower() in ("inf", "infinity", "∞")):
        return INF
    try:
        mi = int(m)
    except (TypeError, ValueError) as exc:
        raise InvalidGrading(f"bad modulus {m!r}") from exc
    if mi < 1:
        raise InvalidGrading("modulus must be positive")
    return mi


def grading_from_cocharacter(system: RootSystem, y_gr: Sequence, m) -> Grading:
    y = vec(parse_rational(s) for s in y_gr)
    if len(y) != system.dim_Y:
        raise InvalidGrading(f"cocharacter must have {system.dim_Y} coordinates")
    p = system.pairings(y)
    if any(x.denominator != 1 for x in p):
        raise NonIntegralPairing("cocharacter pairs non-integrally with some root")
    return Grading(system, m, [int(x) for x in p], y_gr=y)


def y_star(grading, degrees: Optional[Sequence[int]] = None) -> Vec:
    """Unique point of the coroot span realizing a Z-grading.

    Accepts a :class:`Grading` or a root system together with a degree list.
    """
    if isinstance(grading, Grading):
        sysm, degs = grading.system, grading.degrees
    else:
        sysm, degs = grading, degrees
    d = sysm.dim_Y
    if not sysm.roots:
        return tuple(Fraction(0) for _ in range(d))
    # y = sum c_k coroot_k over a basis of the coroot span
    basis = []
    for c in sysm.coroots:
        if q_rank(basis + [c]) > len(basis):
            basis.append(c)
    rows = [[sysm.pair(b, a) for b in basis] for a in sysm.roots]
    sol = q_solve_any(rows, [Fraction(x) for x in degs])
    if sol is None:
        raise Inconsistent("degrees are not realized by any point of the coroot span")
    return tuple(sum((sol[k] * basis[k][i] for k in range(len(basis))), Fraction(0)) for i in range(d))


# ---------------------------------------------------------------------------
# structured configuration

_CONFIG_KEYS = {"cartan_type", "m", "cocharacter", "degrees", "dim"}


def grading_from_config(cfg) -> Grading:
    """Build a grading from ``{"cartan_type", "m", "cocharacter" | "degrees"}``."""
    if isinstance(cfg, str):
        try:
            cfg = json.loads(cfg)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
    if not isinstance(cfg, dict):
        raise ParseError("configuration must be a JSON object")
    extra = set(cfg) - _CONFIG_KEYS
    if extra:
        raise ParseError(f"unknown keys: {sorted(extra)}")
    if "cartan_type" not in cfg:
        raise ParseError("missing 'cartan_type'")
    system = RootSystem.from_cartan_type(cfg["cartan_type"], cfg.get("dim"))
    m = cfg.get("m", 1)
    if "cocharacter" in cfg and "degrees" in cfg:
        raise ParseError("give either 'cocharacter' or 'degrees', not both")
    if "degrees" in cfg:
        return Grading(system, m, [int(parse_rational(d)) for d in cfg["degrees"]])
    y = cfg.get("cocharacter", [0] * system.dim_Y)
    return grading_from_cocharacter(system, y, m)
