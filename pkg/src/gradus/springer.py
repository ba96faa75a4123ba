"""Irreducible representations of Weyl groups and the labelling of canonical bases.

Characters of classical types are evaluated exactly: an element of the
Weyl group of a simple factor is identified with a permutation (type A)
or a signed permutation (types B, C, D) through its action on the roots,
and the Murnaghan-Nakayama rule does the rest.  The dihedral group of
type G2 is handled directly.  Other exceptional factors need their data
supplied as a JSON table (see :func:`load_table`).

The matcher assigns to every canonical basis element (modulus 1) the
unique irreducible representation whose b-invariant is read off from the
pairing with the distinguished element and whose restrictions to all
proper standard parabolic subgroups agree with the branching constants.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (AmbiguousMatching, InfeasibleMatching, InvariantViolation, NonTerminating,
                     NotUnique, ParseError, UnsupportedType)
from .linalg import q_solve_any
from .rootsys import Grading, RootSystem

Partition = Tuple[int, ...]
Bipartition = Tuple[Partition, Partition]


# ---------------------------------------------------------------------------
# partitions and the maps f_n, ff_n


def partitions(n: int, largest: Optional[int] = None) -> List[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return out


def bipartitions(n: int) -> List[Bipartition]:
    return [(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)]


def normalize(lam: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in lam if x)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 0 for x in lam):
        raise ParseError(f"{list(lam)} is not a partition")
    return lam


def f_n(lam: Sequence[int]) -> Counter:
    """Sum of the partitions obtained by removing one removable box."""
    lam = normalize(lam)
    out: Counter = Counter()
    for i, x in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if x > nxt:
            mu = lam[:i] + (x - 1,) + lam[i + 1:]
            out[normalize(mu)] += 1
    return out


def ff_n(bp: Bipartition) -> Counter:
    a, b = normalize(bp[0]), normalize(bp[1])
    out: Counter = Counter()
    for mu, c in f_n(a).items():
        out[(mu, b)] += c
    for mu, c in f_n(b).items():
        out[(a, mu)] += c
    return out


def sigma(x):
    """Swap the two components of a bipartition or of a combination of them."""
    if isinstance(x, Counter):
        return Counter({(b, a): c for (a, b), c in x.items()})
    return (x[1], x[0])


def recover_from_f(comb: Counter) -> Partition:
    """Rebuild ``lam`` (of size at least 3) from ``f_n(lam)``."""
    total = sum(comb.values())
    terms = [mu for mu, c in comb.items() if c]
    if total >= 2:
        width = max(len(mu) for mu in terms)
        return normalize([max((mu[i] if i < len(mu) else 0) for mu in terms) for i in range(width + 1)])
    if total != 1:
        raise ParseError("not the image of a partition")
    mu = list(terms[0])
    k = len(mu)
    if mu and max(mu) >= 2:
        mu[k - 1] += 1
        return normalize(mu)
    return normalize(mu + [1])


def n_of(lam: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(lam))


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


def _beta(lam: Partition, length: int) -> Tuple[int, ...]:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    ln = len(b)
    return normalize([b[i] - (ln - 1 - i) for i in range(ln)])


def _rim_hooks(lam: Partition, r: int):
    """``(sign, rest)`` for each removable rim hook of size ``r``."""
    ln = len(lam) + r
    beta = _beta(lam, ln)
    s = set(beta)
    for b in beta:
        if b - r >= 0 and b - r not in s:
            between = sum(1 for x in beta if b - r < x < b)
            nb = [x for x in beta if x != b] + [b - r]
            yield (-1) ** between, _from_beta(nb)


@lru_cache(maxsize=None)
def chi_A(lam: Partition, mu: Tuple[int, ...]) -> int:
    """Character of the symmetric group at cycle type ``mu``; ``(n,)`` is trivial."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum(sg * chi_A(nl, rest) for sg, nl in _rim_hooks(lam, r))


@lru_cache(maxsize=None)
def chi_B(bp: Bipartition, cycles: Tuple[Tuple[int, int], ...]) -> int:
    """Hyperoctahedral character; ``cycles`` are ``(length, sign)``; ``((n), ())`` is trivial."""
    lam, mu = bp
    if not cycles:
        return 1 if not lam and not mu else 0
    (r, eps), rest = cycles[0], cycles[1:]
    s = 0
    for sg, nl in _rim_hooks(lam, r):
        s += sg * chi_B((nl, mu), rest)
    for sg, nm in _rim_hooks(mu, r):
        s += eps * sg * chi_B((lam, nm), rest)
    return s


def cycle_type(perm: Sequence[int]) -> Tuple[int, ...]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                ln += 1
            out.append(ln)
    return tuple(sorted(out, reverse=True))


def signed_cycle_type(perm: Sequence[int], signs: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            ln, sg, j = 0, 1, i
            while not seen[j]:
                seen[j] = True
                sg *= signs[j]
                j = perm[j]
                ln += 1
            out.append((ln, sg))
    return tuple(sorted(out, reverse=True))


# ---------------------------------------------------------------------------
# simple factors


@dataclass
class Component:
    kind: str                 # 'A', 'B', 'C', 'D', 'G'
    rank: int
    simple: Tuple[int, ...]   # ordered simple roots (root indices of the system)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"


def _simple_coords(system: RootSystem) -> List[Tuple[Fraction, ...]]:
    S = list(system.simple)
    rows = [[system.roots[s][x] for s in S] for x in range(system.dim_X)]
    out = []
    for r in system.roots:
        c = q_solve_any(rows, list(r))
        if c is None:
            raise InvariantViolation("root outside the span of the simple roots")
        out.append(tuple(c))
    return out


def decompose(system: RootSystem) -> List[Component]:
    """Simple factors with their simple roots in the standard Dynkin order."""
    S = list(system.simple)
    a = {(i, j): int(system.pair(system.coroots[i], system.roots[j])) for i in S for j in S}
    adj = {i: [j for j in S if j != i and a[(i, j)]] for i in S}
    seen = set()
    comps = []
    for s in S:
        if s in seen:
            continue
        block, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            block.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(_classify(sorted(block), a, adj))
    return comps


def _chain_from(start, nodes, adj):
    out, prev = [start], None
    while True:
        nxt = [y for y in adj[out[-1]] if y != prev and y in nodes]
        if not nxt:
            return out
        prev = out[-1]
        out.append(nxt[0])


def _classify(block, a, adj) -> Component:
    n = len(block)
    if n == 1:
        return Component("A", 1, tuple(block))
    nodes = set(block)
    bond = {(i, j): a[(i, j)] * a[(j, i)] for i in block for j in adj[i]}
    degs = {i: len(adj[i]) for i in block}
    if any(b == 3 for b in bond.values()):
        if n != 2:
            raise UnsupportedType("unexpected triple bond")
        # long root first
        x, y = block
        order = (x, y) if a[(y, x)] == -3 else (y, x)
        return Component("G", 2, order)
    if max(degs.values()) <= 2:
        ends = sorted(i for i in block if degs[i] == 1)
        doubles = [(i, j) for (i, j), b in bond.items() if b == 2]
        if not doubles:
            return Component("A", n, tuple(_chain_from(ends[0], nodes, adj)))
        if len(doubles) != 2:
            raise UnsupportedType("unsupported Dynkin diagram")
        i, j = doubles[0]
        if n == 2:
            # put the short root last: type B2
            short = i if a[(i, j)] == -2 else j
            long_ = j if short == i else i
            return Component("B", 2, (long_, short))
        end = next((e for e in ends if any(e in d for d in doubles)), None)
        if end is None:
            raise UnsupportedType("type F4 needs a supplied table")
        other = next(e for e in ends if e != end)
        chain = _chain_from(other, nodes, adj)
        last, prev = chain[-1], chain[-2]
        kind = "B" if a[(last, prev)] == -2 else "C"
        return Component(kind, n, tuple(chain))
    if any(b != 1 for b in bond.values()):
        raise UnsupportedType("unsupported Dynkin diagram")
    branch = [i for i in block if degs[i] == 3]
    if len(branch) != 1:
        raise UnsupportedType("unsupported Dynkin diagram")
    c = branch[0]
    arms = []
    for y in sorted(adj[c]):
        arm, prev = [y], c
        while True:
            nxt = [z for z in adj[arm[-1]] if z != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=lambda t: (len(t), t))
    if len(arms[0]) != 1 or len(arms[1]) != 1:
        raise UnsupportedType("type E needs a supplied table")
    longarm = arms[2]
    chain = list(reversed(longarm)) + [c]
    return Component("D", n, tuple(chain + [arms[0][0], arms[1][0]]))


def _e_vectors(comp: Component) -> List[Tuple[Fraction, ...]]:
    """Standard coordinates of the simple roots of a classical factor."""
    n = comp.rank
    k, out = comp.kind, []
    if k == "A":
        for i in range(n):
            out.append(tuple(Fraction(1 if t == i else -1 if t == i + 1 else 0) for t in range(n + 1)))
        return out
    for i in range(n - 1):
        out.append(tuple(Fraction(1 if t == i else -1 if t == i + 1 else 0) for t in range(n)))
    if k == "B":
        out.append(tuple(Fraction(1 if t == n - 1 else 0) for t in range(n)))
    elif k == "C":
        out.append(tuple(Fraction(2 if t == n - 1 else 0) for t in range(n)))
    elif k == "D":
        out.append(tuple(Fraction(1 if t in (n - 2, n - 1) else 0) for t in range(n)))
    return out


# ---------------------------------------------------------------------------
# labels


def render_partition(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def render_component_label(kind: str, lab) -> str:
    if kind == "A":
        return render_partition(lab)
    if kind in "BC":
        return "(" + render_partition(lab[0]) + "," + render_partition(lab[1]) + ")"
    if kind == "D":
        pair = "{" + render_partition(lab[0]) + "," + render_partition(lab[1]) + "}"
        return pair + (lab[2] if len(lab) > 2 else "")
    return str(lab)


def component_labels(comp: Component) -> list:
    n = comp.rank
    if comp.kind == "A":
        return list(partitions(n + 1))
    if comp.kind in "BC":
        return bipartitions(n)
    if comp.kind == "D":
        out = []
        for a, b in bipartitions(n):
            if a > b:
                out.append((a, b))
            elif a == b:
                out.append((a, b, "+"))
                out.append((a, b, "-"))
        return out
    if comp.kind == "G":
        return ["phi1,0", "phi1,6", "phi1,3:short", "phi1,3:long", "phi2,1", "phi2,2"]
    raise UnsupportedType(comp.name)


@dataclass(frozen=True)
class IrrepLabel:
    parts: tuple            # one label per simple factor
    kinds: tuple

    def __str__(self):
        if not self.parts:
            return "triv"
        return " x ".join(render_component_label(k, p) for k, p in zip(self.kinds, self.parts))

    def to_json(self):
        return str(self)


class Characters:
    """Character values of the irreducible representations of ``W(system)``."""

    def __init__(self, system: RootSystem):
        self.system = system
        self.W = system.weyl_group()
        self.components = decompose(system)
        self._coords = _simple_coords(system)
        self._spos = {s: k for k, s in enumerate(system.simple)}
        kinds = tuple(c.kind for c in self.components)
        self.labels = [IrrepLabel(tuple(p), kinds)
                       for p in product(*[component_labels(c) for c in self.components])]
        self._data: Dict[int, list] = {}
        self._b: Dict[IrrepLabel, int] = {}
        self._prep = [self._prepare(c) for c in self.components]

    # -- identifying group elements -----------------------------------------
    def _prepare(self, comp: Component):
        ev = _e_vectors(comp) if comp.kind != "G" else None
        info = {"ev": ev}
        if comp.kind in "BCD":
            n = comp.rank
            rows = [[ev[s][t] for s in range(n)] for t in range(n)]
            info["basis"] = [q_solve_any(rows, [Fraction(1 if t == i else 0) for t in range(n)])
                             for i in range(n)]
        if comp.kind == "G":
            long_root = comp.simple[0]
            orbit = set()
            stack = [long_root]
            while stack:
                x = stack.pop()
                if x in orbit:
                    continue
                orbit.add(x)
                for g in self.system.reflection_perms:
                    stack.append(g[x])
            info["long"] = orbit
        return info

    def _evec(self, comp: Component, ev, root: int):
        c = self._coords[root]
        n = len(ev[0])
        out = [Fraction(0)] * n
        for k, s in enumerate(comp.simple):
            a = c[self._spos[s]]
            if a:
                for t in range(n):
                    out[t] += a * ev[k][t]
        return out

    def element_data(self, k: int) -> list:
        d = self._data.get(k)
        if d is not None:
            return d
        perm = self.W.elements[k]
        d = []
        for comp, info in zip(self.components, self._prep):
            if comp.kind == "A":
                ev = info["ev"]
                n = comp.rank + 1
                pi = [0] * n
                for i in range(n):
                    root = comp.simple[i] if i < n - 1 else self.system.neg(comp.simple[n - 2])
                    img = self._evec(comp, ev, perm[root])
                    pi[i] = img.index(Fraction(1))
                d.append(cycle_type(pi))
            elif comp.kind in "BCD":
                ev, basis = info["ev"], info["basis"]
                n = comp.rank
                images = [self._evec(comp, ev, perm[s]) for s in comp.simple]
                pi, signs = [0] * n, [1] * n
                for i in range(n):
                    v = [sum((basis[i][s] * images[s][t] for s in range(n)), Fraction(0)) for t in range(n)]
                    j = next(t for t in range(n) if v[t])
                    pi[i] = j
                    signs[i] = 1 if v[j] > 0 else -1
                d.append(signed_cycle_type(pi, signs))
            else:
                a, b = comp.simple
                ca = self._coords[perm[a]]
                cb = self._coords[perm[b]]
                ia, ib = self._spos[a], self._spos[b]
                m = [[ca[ia], cb[ia]], [ca[ib], cb[ib]]]
                tr = m[0][0] + m[1][1]
                det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
                refl = None
                if det == -1:
                    beta = next(i for i in self.system.positive
                                if perm[i] == self.system.neg(i) and self._in_comp(comp, i))
                    refl = "long" if beta in info["long"] else "short"
                d.append((int(tr), int(det), refl))
        self._data[k] = d
        return d

    def _in_comp(self, comp, i):
        c = self._coords[i]
        return all(not c[self._spos[s]] for s in self.system.simple if s not in comp.simple)

    # -- values ----------------------------------------------------------------
    def value(self, label: IrrepLabel, k: int) -> int:
        out = 1
        for comp, lab, data in zip(self.components, label.parts, self.element_data(k)):
            out *= _component_value(comp.kind, lab, data)
            if not out:
                return 0
        return out

    def inner(self, f, g) -> Fraction:
        return Fraction(sum(f(k) * g(k) for k in range(len(self.W))), len(self.W))

    def dimension(self, label: IrrepLabel) -> int:
        return self.value(label, 0)

    def b_invariant(self, label: IrrepLabel, cap: int = 64) -> int:
        b = self._b.get(label)
        if b is None:
            b = self._b[label] = self._b_invariant(label, cap)
        return b

    def _b_invariant(self, label, cap):
        groups: Dict[tuple, int] = {}
        for k in range(len(self.W)):
            q = _det_one_minus_t(self.W.matrices[k])
            groups[q] = groups.get(q, 0) + self.value(label, k)
        for n in range(cap + 1):
            s = sum(w * _series(q, cap)[n] for q, w in groups.items() if w)
            if s:
                return n
        raise NonTerminating(f"no occurrence in symmetric powers up to degree {cap}")

    def labels_by_b(self) -> Dict[int, List[IrrepLabel]]:
        out: Dict[int, List[IrrepLabel]] = {}
        for lab in self.labels:
            out.setdefault(self.b_invariant(lab), []).append(lab)
        return out

    def trivial(self) -> IrrepLabel:
        return next(l for l in self.labels if all(self.value(l, k) == 1 for k in range(len(self.W))))

    def sign(self) -> IrrepLabel:
        return next(l for l in self.labels
                    if all(self.value(l, k) == (-1) ** self.W.lengths[k] for k in range(len(self.W))))

    def restrict(self, label: IrrepLabel, sub: RootSystem) -> Dict[IrrepLabel, int]:
        """Multiplicities of the irreducibles of ``W(sub)`` in the restriction."""
        sc = characters_of(sub)
        loc = {g: i for i, g in enumerate(sub.parent_index)}
        Wsub = sub.weyl_group()
        Wp = self.system.weyl_group(sub.parent_index)
        pairs = []
        for u in Wp.elements:
            ku = self.W.index_of(u)
            su = tuple(loc[u[g]] for g in sub.parent_index)
            pairs.append((ku, Wsub.index_of(su)))
        out = {}
        for lab in sc.labels:
            s = sum(self.value(label, ku) * sc.value(lab, ks) for ku, ks in pairs)
            m = Fraction(s, len(pairs))
            if m.denominator != 1:
                raise InvariantViolation("restriction multiplicity is not an integer")
            if m:
                out[lab] = int(m)
        return out


def _component_value(kind, lab, data) -> int:
    if kind == "A":
        return chi_A(lab, data)
    if kind in "BC":
        return chi_B(lab, data)
    if kind == "D":
        if len(lab) > 2:
            raise UnsupportedType("characters of split representations of type D are not built in")
        return chi_B((lab[0], lab[1]), data)
    tr, det, refl = data
    if lab == "phi1,0":
        return 1
    if lab == "phi1,6":
        return det
    if lab.startswith("phi1,3"):
        if det == 1:
            # r^j for a rotation r of order 6 gives (-1)^j; even j have trace 2 or -1
            return 1 if tr in (2, -1) else -1
        return -1 if lab.endswith(refl) else 1
    if det == -1:
        return 0
    # 2 cos(k theta) from the trace 2 cos(theta), k = 1, 2
    if lab == "phi2,1":
        return tr
    return tr * tr - 2


def _det_one_minus_t(mat) -> Tuple[Fraction, ...]:
    """Coefficients of det(1 - t M) by the Faddeev-LeVerrier recursion."""
    d = len(mat)
    m = [list(r) for r in mat]
    c = [Fraction(1)]
    mk = [[Fraction(0)] * d for _ in range(d)]
    for k in range(1, d + 1):
        prod = [[sum((m[i][t] * mk[t][j] for t in range(d)), Fraction(0)) for j in range(d)] for i in range(d)]
        mk = [[prod[i][j] + (c[-1] if i == j else 0) for j in range(d)] for i in range(d)]
        am = [[sum((m[i][t] * mk[t][j] for t in range(d)), Fraction(0)) for j in range(d)] for i in range(d)]
        c.append(-sum(am[i][i] for i in range(d)) / k)
    return tuple(c)


@lru_cache(maxsize=None)
def _series(q: Tuple[Fraction, ...], cap: int) -> Tuple[Fraction, ...]:
    a = [Fraction(1)]
    for n in range(1, cap + 1):
        a.append(-sum((q[k] * a[n - k] for k in range(1, min(n, len(q) - 1) + 1)), Fraction(0)))
    return tuple(a)


def characters_of(system: RootSystem) -> Characters:
    ch = system.__dict__.get("_characters")
    if ch is None:
        ch = system.__dict__["_characters"] = Characters(system)
    return ch


def b_invariant(label: IrrepLabel, system: RootSystem, cap: int = 64) -> int:
    return characters_of(system).b_invariant(label, cap)


def restriction_multiplicities(label: IrrepLabel, system: RootSystem, sub: RootSystem) -> Dict[IrrepLabel, int]:
    return characters_of(system).restrict(label, sub)


def proposition_check(system: RootSystem) -> List[Tuple[IrrepLabel, IrrepLabel]]:
    """Pairs of distinct labels agreeing in b and in every proper parabolic restriction."""
    from .restrict import standard_levis
    ch = characters_of(system)
    levis = [lev for lev in standard_levis(system)]
    keys = {}
    clashes = []
    for lab in ch.labels:
        key = (ch.b_invariant(lab),) + tuple(
            tuple(sorted((str(k), v) for k, v in ch.restrict(lab, lev.subsystem).items())) for lev in levis)
        if key in keys:
            clashes.append((keys[key], lab))
        else:
            keys[key] = lab
    return clashes


# ---------------------------------------------------------------------------
# supplied tables


@dataclass
class IrrepTable:
    """Irreducible representations given as data rather than computed.

    JSON layout::

        {"labels": ["phi1,0", ...], "b": [0, ...],
         "restrictions": {"1,2": {"phi1,0": {"<levi label>": 1, ...}, ...}, ...}}

    Keys of ``restrictions`` list the simple roots (1-based, standard
    order of the system) generating the parabolic subgroup; Levi labels
    are written as this package prints them.
    """
    labels: List[str]
    b: Dict[str, int]
    restrictions: Dict[Tuple[int, ...], Dict[str, Dict[str, int]]]


def load_table(text: str) -> IrrepTable:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"table is not valid JSON: {exc}") from exc
    unknown = set(data) - {"labels", "b", "restrictions"}
    if unknown:
        raise ParseError(f"unknown table keys: {sorted(unknown)}")
    labels = [str(x) for x in data["labels"]]
    b = dict(zip(labels, (int(x) for x in data["b"])))
    res = {}
    for k, v in data.get("restrictions", {}).items():
        J = tuple(int(x) for x in k.split(",") if x.strip())
        res[J] = {str(e): {str(a): int(c) for a, c in m.items()} for e, m in v.items()}
    return IrrepTable(labels, b, res)


# ---------------------------------------------------------------------------
# the matcher


def eta0(family) -> int:
    """Index of the canonical element in the unique orbit with ``d`` equal to the number of roots."""
    n = family.grading.system.n_roots
    orbits = [o for o, orb in enumerate(family.orbits) if orb.d == n]
    if len(orbits) != 1:
        raise NotUnique(f"{len(orbits)} orbits have d equal to the number of roots")
    idx = [k for k, t in enumerate(family.orbit_index) if t == orbits[0]]
    if len(idx) != 1:
        raise NotUnique("the distinguished orbit carries more than one basis element")
    return idx[0]


def b_from_pairing(value) -> Tuple[int, int]:
    """``(b, c)`` with ``value = c v^(2b) mod v^(2b+2) Z[v^2]`` and ``c > 0``."""
    if not value.is_laurent():
        raise InfeasibleMatching("pairing with the distinguished element is not a polynomial")
    f = value.as_laurent()
    if f.is_zero() or not f.is_integral():
        raise InfeasibleMatching("pairing with the distinguished element is zero or not integral")
    if any(k < 0 or k % 2 for k, _ in f.items()):
        raise InfeasibleMatching(f"pairing with the distinguished element is not in Z[v^2]: {f}")
    low, c = f.lowest_degree()
    if c <= 0:
        raise InfeasibleMatching(f"leading coefficient {c} of the pairing is not positive")
    return low // 2, int(c)


@dataclass
class Matching:
    family: object
    labels: List[IrrepLabel]
    b: List[int]
    lead: List[int]
    eta0: int
    candidates: List[List[IrrepLabel]]

    @property
    def partition(self) -> Dict[int, List[IrrepLabel]]:
        out: Dict[int, List[IrrepLabel]] = {}
        for lab, t in zip(self.labels, self.family.orbit_index):
            out.setdefault(t, []).append(lab)
        return out

    def rows(self) -> List[dict]:
        fam = self.family
        return [{"element": k, "orbit": fam.orbit_index[k], "d": fam.orbits[fam.orbit_index[k]].d,
                 "label": str(lab), "b": b}
                for k, (lab, b) in enumerate(zip(self.labels, self.b))]


_MATCHES: Dict[tuple, Matching] = {}


def match_bijection(family, table: Optional[IrrepTable] = None) -> Matching:
    """Unique labelling of the canonical basis (modulus 1) by irreducible representations."""
    from .bases import assemble_bases
    from .form import space_key
    from .restrict import branching_constants, standard_levis
    g = family.grading
    if not g.finite or g.m != 1:
        raise InfeasibleMatching("the matcher needs modulus 1")
    key = space_key(g)
    if table is None and key in _MATCHES:
        return _MATCHES[key]
    sysm = g.system
    V = family.space
    k = len(family.canonical)
    if table is None:
        ch = characters_of(sysm)
        labels = ch.labels
        split = [l for l in labels if any(c.kind == "D" and len(p) > 2 for c, p in zip(ch.components, l.parts))]
        if split:
            raise AmbiguousMatching("split representations of type D cannot be told apart without "
                                    "supplied restriction data: " + ", ".join(map(str, split)))
    else:
        labels = table.labels
    if not sysm.roots:
        if k != 1:
            raise InfeasibleMatching("empty system with more than one basis element")
        m = Matching(family, [labels[0]], [0], [1], 0, [[labels[0]]])
        _MATCHES[key] = m
        return m
    e0 = eta0(family)
    bs, cs = [], []
    for j in range(k):
        b, c = b_from_pairing(V.form(family.canonical[j], family.canonical[e0]))
        bs.append(b)
        cs.append(c)

    def b_of(lab):
        return table.b[lab] if table is not None else ch.b_invariant(lab)

    cand = [[lab for lab in labels if b_of(lab) == bs[j]] for j in range(k)]
    S = list(sysm.simple)
    for lev in standard_levis(sysm):
        sub_fam = assemble_bases(lev.sub_grading)
        sub_match = match_bijection(sub_fam)
        tab = branching_constants(g, lev, family, sub_fam)
        for j in range(k):
            want = {}
            for jp, c in enumerate(tab.column(j)):
                if c < 0:
                    raise InfeasibleMatching(f"negative branching constant {c} for element {j} at {lev.label}")
                if c:
                    lab = str(sub_match.labels[jp])
                    want[lab] = want.get(lab, 0) + c
            keep = []
            for lab in cand[j]:
                if table is None:
                    got = {str(e): v for e, v in ch.restrict(lab, lev.subsystem).items()}
                else:
                    J = tuple(S.index(s) + 1 for s in lev.simple)
                    got = table.restrictions.get(J, {}).get(lab)
                    if got is None:
                        keep.append(lab)
                        continue
                    got = {a: c for a, c in got.items() if c}
                if got == want:
                    keep.append(lab)
            cand[j] = keep
    sols = _perfect_matchings(cand, limit=2)
    if not sols:
        raise InfeasibleMatching("no labelling satisfies the constraints")
    if len(sols) > 1:
        amb = [j for j in range(k) if sols[0][j] != sols[1][j]]
        raise AmbiguousMatching(f"several labellings; elements {amb} are not determined")
    m = Matching(family, sols[0], bs, cs, e0, cand)
    if table is None:
        _MATCHES[key] = m
    return m


def _perfect_matchings(cand, limit=2):
    k = len(cand)
    order = sorted(range(k), key=lambda j: len(cand[j]))
    out = []
    used = set()
    pick = [None] * k

    def rec(t):
        if len(out) >= limit:
            return
        if t == k:
            out.append(list(pick))
            return
        j = order[t]
        for lab in cand[j]:
            if lab not in used:
                used.add(lab)
                pick[j] = lab
                rec(t + 1)
                used.discard(lab)
    rec(0)
    return out


# ---------------------------------------------------------------------------
# the composite bijection for a facet orbit


@dataclass
class OmegaBijection:
    orbit: int
    subsystem: Grading
    elements: List[int]          # canonical indices in the family
    labels: List[IrrepLabel]     # irreducibles of W(R(rho))

    def to_json(self) -> dict:
        return {"orbit": self.orbit, "elements": self.elements, "labels": [str(l) for l in self.labels]}


def omega_bijection(family, orbit: int) -> OmegaBijection:
    """Chain the canonical/PBW alignment, induction and the modulus-1 labelling of the subsystem."""
    from .bases import Induction, assemble_bases, pbw_recursion
    from .facets import facet_of, realizing_point, subsystem_of
    orb = family.orbits[orbit]
    sub = orb.subsystem
    idx = [k for k, t in enumerate(family.orbit_index) if t == orbit]
    # position of each element in the [0] part of the subsystem
    src = [family.origin[k] for k in idx]
    zero = pbw_recursion(sub).zero_part[1]
    rsys = sub.system
    g1 = Grading(rsys, 1, [0] * rsys.n_roots, validate=False)
    fam1 = assemble_bases(g1)
    rho_t = facet_of(realizing_point(sub), g1)
    sub_t = subsystem_of(rho_t, g1)
    if sub_t.degrees != sub.degrees:
        raise InvariantViolation("the modulus-1 facet through the realizing point has another grading")
    ind = Induction(rho_t, g1, sub_t)
    pos = {x: k for k, x in enumerate(fam1.pbw)}
    match = match_bijection(fam1)
    labels = []
    for s in src:
        img = ind.apply(zero[s])
        if img not in pos:
            raise InvariantViolation("induced element is not in the modulus-1 PBW basis")
        labels.append(match.labels[pos[img]])
    return OmegaBijection(orbit, sub, idx, labels)


def omega_table(family) -> List[OmegaBijection]:
    return [omega_bijection(family, o) for o in range(len(family.orbits))]
