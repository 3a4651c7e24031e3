"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries are ints or Fractions.  Everything here
is deliberately naive: the matrices that show up are at most 16 x 16.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]
Vector = Tuple[Fraction, ...]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    # row-wise accumulation skipping zeros; the matrices here are mostly sparse
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * m
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> Vector:
    nz = [(j, x) for j, x in enumerate(v) if x]
    return tuple(sum((row[j] * x for j, x in nz), Fraction(0)) for row in a)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def rref(m: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = to_fractions(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        prow = a[r] = [x * inv if x else x for x in a[r]]
        support = [j for j in range(cols) if prow[j]]
        for i in range(rows):
            row = a[i]
            if i != r and row[c] != 0:
                f = row[c]
                for j in support:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence], ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : m x = 0}."""
    if not m:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    a, pivots = rref(m)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(a, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(to_fractions(m))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def solve(m: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One solution of m x = b, or None if the system is inconsistent."""
    n = len(m[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(to_fractions(m), b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return tuple(x)


def column_space_basis(vectors: Sequence[Sequence]) -> List[Vector]:
    """A maximal linearly independent subset of `vectors`, in order."""
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vecs:
        return []
    # pivot columns of the matrix with the vectors as columns pick the greedy subset
    _, pivots = rref(transpose(vecs))
    return [vecs[i] for i in pivots]


def orthogonal_projector(basis: Sequence[Sequence], form: Sequence[Sequence]) -> Matrix:
    """Projector onto span(basis), orthogonal with respect to `form`.

    Vectors are columns; returns P with P v the projection of v.
    """
    n = len(form)
    if not basis:
        return [[Fraction(0)] * n for _ in range(n)]
    v = transpose(basis)  # n x k
    gram = matmul(matmul(transpose(v), form), v)
    return matmul(matmul(v, inverse(gram)), matmul(transpose(v), form))


def eigenspace(m: Sequence[Sequence], value: int) -> List[Vector]:
    n = len(m)
    shifted = [[Fraction(m[i][j]) - (value if i == j else 0) for j in range(n)] for i in range(n)]
    return nullspace(shifted, n)


def intersect(u: Sequence[Sequence], w: Sequence[Sequence], dim: int) -> List[Vector]:
    """Basis of span(u) ∩ span(w)."""
    if not u or not w:
        return []
    # solve sum a_i u_i - sum b_j w_j = 0
    cols = [list(x) for x in u] + [[-y for y in x] for x in w]
    mat = transpose(cols)
    out = []
    for sol in nullspace(mat, len(cols)):
        vec = [Fraction(0)] * dim
        for coef, x in zip(sol[: len(u)], u):
            for k in range(dim):
                vec[k] += coef * x[k]
        out.append(tuple(vec))
    return column_space_basis(out)
