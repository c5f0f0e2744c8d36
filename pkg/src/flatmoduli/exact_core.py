"""Exact rational and integer linear algebra.

Everything here is arbitrary-precision and deterministic: rational matrices
over ``fractions.Fraction``, Smith normal form over the integers, Hermite
normal form lattices, and congruence solving modulo a lattice.  No floating
point enters this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence


class RankDeficient(ValueError):
    """Raised when vectors expected to span R^n fail to do so."""


Vector = tuple[Fraction, ...]


def vec(*entries) -> Vector:
    return tuple(Fraction(x) for x in entries)


def vec_from(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def unit_vec(n: int, i: int, scale=1) -> Vector:
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(n))


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(c, u: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


class QMatrix:
    """Immutable rational matrix; hashable, so usable as a group element."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: tuple[Vector, ...] = tuple(
            tuple(Fraction(x) for x in row) for row in rows
        )
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "QMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Vector]) -> "QMatrix":
        return cls(list(zip(*cols)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"QMatrix[{body}]"

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(
            [vec_add(r, s) for r, s in zip(self.rows, other.rows, strict=True)]
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(
            [vec_sub(r, s) for r, s in zip(self.rows, other.rows, strict=True)]
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([vec_neg(r) for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            cols = other.columns()
            return QMatrix(
                [[_dot(r, c) for c in cols] for r in self.rows]
            )
        return QMatrix([vec_scale(other, r) for r in self.rows])

    __rmul__ = __mul__

    def apply(self, v: Vector) -> Vector:
        if self.ncols != len(v):
            raise ValueError("dimension mismatch")
        return tuple(_dot(r, v) for r in self.rows)

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self.rows)))

    def is_identity(self) -> bool:
        return self == QMatrix.identity(self.nrows)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                det = -det
            det *= a[k][k]
            inv = 1 / a[k][k]
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    f = a[i][k] * inv
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return det

    def inverse(self) -> "QMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[k], a[piv] = a[piv], a[k]
            inv = 1 / a[k][k]
            a[k] = [x * inv for x in a[k]]
            for i in range(n):
                if i != k and a[i][k] != 0:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return QMatrix([row[n:] for row in a])

    def char_poly(self) -> tuple[Fraction, ...]:
        """Coefficients (c_0=1, c_1, ..., c_n) of det(xI - M), descending powers.

        Faddeev-LeVerrier recursion; exact over the rationals.
        """
        if self.nrows != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        coeffs = [Fraction(1)]
        mk = self
        for k in range(1, n + 1):
            if k > 1:
                mk = self * (mk + coeffs[-1] * QMatrix.identity(n))
            coeffs.append(-_trace(mk) / k)
        return tuple(coeffs)

    def rank(self) -> int:
        a = [list(r) for r in self.rows]
        m, n = len(a), (len(a[0]) if a else 0)
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, m) if a[i][c] != 0), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(m):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == m:
                break
        return r


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def _trace(m: QMatrix) -> Fraction:
    return sum((m[i, i] for i in range(m.nrows)), Fraction(0))


def block_diag(*blocks: QMatrix) -> QMatrix:
    n = sum(b.nrows for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[at + i][at + j] = b[i, j]
        at += b.nrows
    return QMatrix(rows)


def rref(rows: Sequence[Vector]) -> list[Vector]:
    """Reduced row echelon form over Q, zero rows dropped.  Canonical for a
    given row span, so usable as a normal form for subspaces."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return [tuple(row) for row in a[:r]]


def nullspace(m: QMatrix) -> list[Vector]:
    """Basis (canonical, from RREF free columns) of {x : m x = 0}."""
    a = rref(m.rows)
    n = m.ncols
    pivots = []
    for row in a:
        j = next(k for k in range(n) if row[k] != 0)
        pivots.append(j)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(a, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


# --------------------------------------------------------------------------
# Integer matrices: Smith and Hermite normal forms
# --------------------------------------------------------------------------

IMatrix = tuple[tuple[int, ...], ...]


def _ident(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class SnfResult:
    """U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: IMatrix
    D: IMatrix
    V: IMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))


def smith_normal_form(m_rows: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form of an arbitrary integer matrix.

    Classic pivot-reduction algorithm: the pivot is always the minimal
    nonzero entry by absolute value (ties broken by position, so the output
    is deterministic); it is reduced against its row and column until it
    divides everything it meets, then cleared; finally the pivot is forced
    to divide the whole remaining submatrix before moving on, which yields
    the divisibility chain directly.
    """
    a = [[int(x) for x in row] for row in m_rows]
    p = len(a)
    q = len(a[0]) if p else 0
    u = _ident(p)
    v = _ident(q)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(p, q):
        piv = None
        for i in range(t, p):
            for j in range(t, q):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if a[t][t] < 0:
            negate_row(t)
        while True:
            moved = False
            for i in range(t + 1, p):
                if a[i][t] % a[t][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    swap_rows(t, i)
                    if a[t][t] < 0:
                        negate_row(t)
                    moved = True
            for j in range(t + 1, q):
                if a[t][j] % a[t][t] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    swap_cols(t, j)
                    moved = True
            if moved:
                continue
            for i in range(t + 1, p):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, q):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            culprit = None
            for i in range(t + 1, p):
                for j in range(t + 1, q):
                    if a[i][j] % a[t][t] != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(t, culprit, 1)
        t += 1

    def freeze(rows):
        return tuple(tuple(row) for row in rows)

    return SnfResult(freeze(u), freeze(a), freeze(v))


def hnf_rows(m_rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of the row span; zero rows dropped.

    Unique for a given row lattice: pivots positive, entries above each
    pivot reduced into [0, pivot).
    """
    a = [[int(x) for x in row] for row in m_rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            while a[i][c] != 0:
                k = a[r][c] // a[i][c]
                a[r] = [x - k * y for x, y in zip(a[r], a[i])]
                a[r], a[i] = a[i], a[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            k = a[i][c] // a[r][c]
            if k:
                a[i] = [x - k * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return [tuple(row) for row in a[:r]]


def solve_integer_system(m_rows: Sequence[Sequence[int]], c: Sequence[int]):
    """One integer solution y of M y = c, or None.  Deterministic via SNF."""
    res = smith_normal_form(m_rows)
    p = len(res.D)
    q = len(res.V)
    b = [sum(res.U[i][k] * int(c[k]) for k in range(p)) for i in range(p)]
    y = [0] * q
    for i in range(p):
        d = res.D[i][i] if i < min(p, q) else 0
        if d == 0:
            if b[i] != 0:
                return None
        else:
            if b[i] % d != 0:
                return None
            y[i] = b[i] // d
    return tuple(
        sum(res.V[i][k] * y[k] for k in range(q)) for i in range(q)
    )


# --------------------------------------------------------------------------
# Lattices
# --------------------------------------------------------------------------


class Lattice:
    """Full-rank lattice in Q^n, stored by its canonical HNF basis.

    Two generating sets with the same integer span produce entrywise equal
    stored bases, so lattice equality is basis equality.
    """

    __slots__ = ("basis", "_bmat", "_binv")

    def __init__(self, basis: Sequence[Vector]):
        self.basis: tuple[Vector, ...] = tuple(tuple(Fraction(x) for x in b) for b in basis)
        self._bmat = QMatrix.from_columns(self.basis)
        self._binv = self._bmat.inverse()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Lattice(basis={[list(map(str, b)) for b in self.basis]})"

    def coords(self, v: Vector) -> Vector:
        return self._binv.apply(v)

    def from_coords(self, y: Vector) -> Vector:
        return self._bmat.apply(y)

    def contains(self, v: Vector) -> bool:
        return all(x.denominator == 1 for x in self.coords(v))

    def reduce(self, v: Vector) -> Vector:
        """Canonical representative of v mod the lattice: coordinates in [0,1)."""
        y = self.coords(v)
        frac = tuple(x - (x.numerator // x.denominator) for x in y)
        return self.from_coords(frac)

    def transform(self, m: QMatrix) -> "Lattice":
        return hnf_lattice([m.apply(b) for b in self.basis])

    def is_preserved_by(self, m: QMatrix) -> bool:
        """True iff m maps the lattice onto itself."""
        if any(x.denominator != 1 for b in self.basis for x in self.coords(m.apply(b))):
            return False
        return abs((self._binv * m * self._bmat).det()) == 1


def hnf_lattice(vectors: Sequence[Vector]) -> Lattice:
    """Canonical lattice spanned over Z by the given rational vectors.

    Raises RankDeficient unless the span has full rank.
    """
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vectors:
        raise RankDeficient("no generating vectors")
    n = len(vectors[0])
    d = lcm(*[x.denominator for v in vectors for x in v]) if vectors else 1
    int_rows = [[int(x * d) for x in v] for v in vectors]
    h = hnf_rows(int_rows)
    if len(h) < n:
        raise RankDeficient(f"vectors span rank {len(h)} < {n}")
    basis = [tuple(Fraction(x, d) for x in row) for row in h]
    return Lattice(basis)


def lattice_contains(lattice: Lattice, v: Vector) -> bool:
    return lattice.contains(v)


def product_lattice(lattice: Lattice, copies: int) -> Lattice:
    """The lattice L x L x ... x L inside Q^(n*copies)."""
    n = lattice.dimension
    basis = []
    for k in range(copies):
        for b in lattice.basis:
            v = [Fraction(0)] * (n * copies)
            for i, x in enumerate(b):
                v[k * n + i] = x
            basis.append(tuple(v))
    return Lattice(basis)


def primitive_multiple(lattice: Lattice, v: Vector) -> int:
    """Least positive integer k with k*v in the lattice (v nonzero)."""
    if vec_is_zero(v):
        raise ValueError("zero vector has no primitive multiple")
    y = lattice.coords(v)
    return lcm(*[x.denominator for x in y])


def solve_mod_lattice(
    a: QMatrix, w: Vector, lattice: Lattice
) -> Optional[Vector]:
    """One exact rational solution x of  a x = w (mod L), or None.

    The congruence is rewritten in lattice coordinates (multiply by B^-1)
    and cleared to an integer system M x = c (mod d); the Smith form of M
    then turns it into independent scalar congruences.  The returned
    solution is canonical: constrained Smith coordinates get their
    numerator's least nonnegative residue mod d, free coordinates are 0.
    """
    p, q = a.nrows, a.ncols
    if lattice.dimension != p or len(w) != p:
        raise ValueError("dimension mismatch")
    a2 = lattice._binv * a
    w2 = lattice.coords(w)
    d = lcm(*[x.denominator for row in a2.rows for x in row],
            *[x.denominator for x in w2])
    m_rows = [[int(x * d) for x in row] for row in a2.rows]
    c = [int(x * d) for x in w2]
    res = smith_normal_form(m_rows)
    b = [sum(res.U[i][k] * c[k] for k in range(p)) for i in range(p)]
    y = [Fraction(0)] * q
    for i in range(p):
        di = res.D[i][i] if i < min(p, q) else 0
        if di == 0:
            if b[i] % d != 0:
                return None
        else:
            y[i] = Fraction(b[i] % d, di)
    return tuple(
        sum((Fraction(res.V[i][k]) * y[k] for k in range(q)), Fraction(0))
        for i in range(q)
    )


def max_rank_minor(m_rows: Sequence[Sequence[int]]) -> int:
    """|first nonzero maximal-rank minor| (deterministic subset order).

    Used by the brute-force solvability oracle to pick a provably fine
    enough grid: every solvable congruence has a solution whose
    denominators divide this value.
    """
    a = [[int(x) for x in row] for row in m_rows]
    p = len(a)
    q = len(a[0]) if p else 0
    qm = QMatrix(a)
    r = qm.rank()
    if r == 0:
        return 1
    for rows in itertools.combinations(range(p), r):
        for cols in itertools.combinations(range(q), r):
            sub = QMatrix([[a[i][j] for j in cols] for i in rows])
            dv = sub.det()
            if dv != 0:
                return abs(int(dv))
    return 1
