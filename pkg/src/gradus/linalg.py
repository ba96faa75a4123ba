"""Dense exact linear algebra over Q(v).

Matrices are lists of rows of :class:`~gradus.laurent.FieldScalar`.  All
routines are plain Gaussian elimination with exact arithmetic; the
sizes met in practice are small (dozens of rows) so no pivoting strategy
beyond "first nonzero" is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .laurent import FieldScalar, FZERO, FONE, as_field

Vector = List[FieldScalar]
Matrix = List[List[FieldScalar]]


def to_field_matrix(rows) -> Matrix:
    return [[as_field(x) for x in r] for r in rows]


def identity(n: int) -> Matrix:
    return [[FONE if i == j else FZERO for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_vec(a: Matrix, x: Sequence[FieldScalar]) -> Vector:
    return [dot(row, x) for row in a]


def vec_mat(x: Sequence[FieldScalar], a: Matrix) -> Vector:
    n = len(a[0]) if a else 0
    out = [FZERO] * n
    for xi, row in zip(x, a):
        if xi:
            for j in range(n):
                if row[j]:
                    out[j] = out[j] + xi * row[j]
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [vec_mat(row, b) for row in a]


def dot(x: Sequence[FieldScalar], y: Sequence[FieldScalar]) -> FieldScalar:
    s = FZERO
    for a, b in zip(x, y):
        if a and b:
            s = s + a * b
    return s


def vec_add(x, y) -> Vector:
    return [a + b for a, b in zip(x, y)]


def vec_sub(x, y) -> Vector:
    return [a - b for a, b in zip(x, y)]


def vec_scale(c, x) -> Vector:
    c = as_field(c)
    return [c * a if a else FZERO for a in x]


def is_zero_vector(x) -> bool:
    return all(not a for a in x)


class RowReducer:
    """Incremental row echelon form used to test linear independence.

    ``add(row)`` reduces ``row`` against the rows kept so far and keeps it
    if a nonzero remainder survives.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: List[Tuple[int, Vector]] = []

    def reduce(self, row: Sequence[FieldScalar]) -> Vector:
        r = list(row)
        for col, prow in self.pivots:
            c = r[col]
            if c:
                r = [a - c * b if b else a for a, b in zip(r, prow)]
        return r

    def add(self, row: Sequence[FieldScalar]) -> bool:
        r = self.reduce(row)
        for j, a in enumerate(r):
            if a:
                inv = a.inverse()
                r = [inv * b if b else FZERO for b in r]
                # keep earlier pivot rows reduced in the new pivot column
                new = []
                for col, prow in self.pivots:
                    c = prow[j]
                    if c:
                        prow = [x - c * y if y else x for x, y in zip(prow, r)]
                    new.append((col, prow))
                self.pivots = new + [(j, r)]
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def greedy_independent_rows(rows: Sequence[Sequence[FieldScalar]]) -> List[int]:
    """Indices of a maximal independent subset, chosen first-index-first."""
    if not rows:
        return []
    red = RowReducer(len(rows[0]))
    return [i for i, r in enumerate(rows) if red.add(r)]


def rank(rows: Sequence[Sequence[FieldScalar]]) -> int:
    return len(greedy_independent_rows(rows))


def solve(a: Matrix, b: Sequence[FieldScalar]) -> Optional[Vector]:
    """Solve ``a x = b`` for square nonsingular ``a``; None if singular."""
    n = len(a)
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [inv * x if x else FZERO for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y if y else x for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def inverse(a: Matrix) -> Optional[Matrix]:
    n = len(a)
    m = [list(row) + [FONE if i == j else FZERO for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [inv * x if x else FZERO for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y if y else x for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def nullspace(rows: Sequence[Sequence[FieldScalar]], width: Optional[int] = None) -> List[Vector]:
    """Basis of ``{x : rows . x = 0}``."""
    if width is None:
        width = len(rows[0]) if rows else 0
    m = [list(r) for r in rows]
    pivcols = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [inv * x if x else FZERO for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [x - c * y if y else x for x, y in zip(m[i], m[r])]
        pivcols.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(width) if c not in pivcols]
    basis = []
    for f in free:
        x = [FZERO] * width
        x[f] = FONE
        for i, pc in enumerate(pivcols):
            x[pc] = -m[i][f]
        basis.append(x)
    return basis


def determinant(a: Matrix) -> FieldScalar:
    n = len(a)
    m = [list(r) for r in a]
    det = FONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return FZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                c = m[r][col] * inv
                m[r] = [x - c * y if y else x for x, y in zip(m[r], m[col])]
    return det


# ---------------------------------------------------------------------------
# dense rational linear algebra (used for points of Y and for solving
# coefficient systems over Q)

def q_solve_any(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One solution of an arbitrary rational system, or None if inconsistent."""
    width = len(rows[0]) if rows else 0
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivcols = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[r])]
        pivcols.append(col)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][width]:
            return None
    x = [Fraction(0)] * width
    for i, pc in enumerate(pivcols):
        x[pc] = m[i][width]
    return x


def q_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    width = len(rows[0])
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col]:
                c = m[i][col] / m[r][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


class SpanCoordinates:
    """Coordinates of vectors in the span of a fixed independent family.

    ``coords(t)`` returns ``c`` with ``sum c_i rows_i == t`` exactly, or
    None when ``t`` is outside the span.
    """

    def __init__(self, rows: Sequence[Sequence[FieldScalar]]):
        self.rows = [list(r) for r in rows]
        k = len(self.rows)
        n = len(self.rows[0]) if self.rows else 0
        cols = [[self.rows[i][j] for i in range(k)] for j in range(n)]
        self.pivots = greedy_independent_rows(cols) if k else []
        if len(self.pivots) != k:
            raise ValueError("family is linearly dependent")
        sub = [[self.rows[i][j] for j in self.pivots] for i in range(k)]
        self._inv = inverse(sub) if k else []

    def coords(self, t: Sequence[FieldScalar]) -> Optional[Vector]:
        k = len(self.rows)
        if not k:
            return [] if all(not a for a in t) else None
        tp = [t[j] for j in self.pivots]
        c = vec_mat(tp, self._inv)
        back = vec_mat(c, self.rows)
        if any(a != b for a, b in zip(back, t)):
            return None
        return c
