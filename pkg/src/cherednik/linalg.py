"""Exact linear algebra over Q or Q(e).

Vectors are sparse ``dict`` objects mapping a column key (usually a monomial
exponent tuple) to a nonzero scalar. :class:`Echelon` keeps a reduced row
echelon basis, so membership tests and normal forms are one pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .errors import DomainError
from .exact import qdiv

Vector = dict


def _axpy(target: dict, factor, row: dict) -> None:
    """target -= factor * row, in place, dropping zeros."""
    for col, val in row.items():
        new = target.get(col, 0) - factor * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


class Echelon:
    """Reduced row echelon basis of a subspace, grown one vector at a time.

    The pivot of a new row is its largest column key (with the default key
    order, the lexicographically largest exponent vector). Every stored row has
    coefficient 1 at its pivot and 0 at every other pivot.
    """

    def __init__(self, vectors: Iterable[dict] = ()):
        self.rows: dict[Hashable, dict] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> set:
        return set(self.rows)

    def basis(self) -> list[dict]:
        return [dict(self.rows[p]) for p in sorted(self.rows, reverse=True)]

    def reduce(self, vec: dict) -> dict:
        """Normal form of ``vec`` modulo the span (a fresh dict)."""
        out = {c: v for c, v in vec.items() if v}
        for col in [c for c in out if c in self.rows]:
            factor = out.get(col)
            if factor:
                _axpy(out, factor, self.rows[col])
        return out

    def __contains__(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True iff the span grew."""
        red = self.reduce(vec)
        if not red:
            return False
        pivot = max(red)
        lead = red[pivot]
        if lead != 1:
            red = {c: qdiv(v, lead) for c, v in red.items()}
        for row in self.rows.values():
            factor = row.get(pivot)
            if factor:
                _axpy(row, factor, red)
        self.rows[pivot] = red
        return True

    def copy(self) -> "Echelon":
        new = Echelon()
        new.rows = {p: dict(r) for p, r in self.rows.items()}
        return new


def kernel(rows: Sequence[dict], columns: Sequence[Hashable]) -> list[dict]:
    """Basis of {v : row . v = 0 for every row}, as sparse vectors over ``columns``."""
    ech = Echelon(rows)
    free = [c for c in columns if c not in ech.rows]
    basis = []
    for f in free:
        v = {f: Fraction(1)}
        for p, row in ech.rows.items():
            coef = row.get(f)
            if coef:
                v[p] = -coef
        basis.append(v)
    return basis


def rank(rows: Iterable[dict]) -> int:
    return len(Echelon(rows))


def dense_to_sparse(matrix: Sequence[Sequence]) -> list[dict]:
    return [{j: x for j, x in enumerate(row) if x} for row in matrix]


def determinant(matrix: Sequence[Sequence]):
    """Exact determinant by Gaussian elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f = qdiv(f, p)
                for c in range(col, n):
                    m[r][c] = m[r][c] - f * m[col][c]
    return det


def solve(matrix: Sequence[Sequence], rhs: Sequence):
    """Solve matrix . x = rhs exactly; the system must have a unique solution
    among its consistent ones (extra rows are checked for consistency)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(nrows)]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [qdiv(x, p) for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivcols.append(c)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols]:
            raise DomainError("inconsistent linear system")
    if len(pivcols) != ncols:
        raise DomainError("linear system is underdetermined")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = aug[i][ncols]
    return x


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for t in range(k):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def trace(a: Sequence[Sequence]):
    acc = 0
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def identity(n: int) -> list[list]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def exterior_traces(a: Sequence[Sequence]) -> list:
    """[tr(wedge^i a) for i = 0..n], via Newton's identities on tr(a^k).

    Equivalently det(1 - t a) = sum_i (-1)^i tr(wedge^i a) t^i.
    """
    n = len(a)
    powers = []
    cur = identity(n)
    for _ in range(n):
        cur = matmul(cur, a)
        powers.append(trace(cur))
    e = [Fraction(1)]
    for i in range(1, n + 1):
        acc = 0
        for j in range(1, i + 1):
            term = e[i - j] * powers[j - 1]
            acc = acc + term if j % 2 == 1 else acc - term
        e.append(qdiv(acc, i))
    return e


def det_one_minus(a: Sequence[Sequence]) -> list:
    """Coefficients (in t) of det(1 - t a)."""
    return [x if i % 2 == 0 else -x for i, x in enumerate(exterior_traces(a))]
