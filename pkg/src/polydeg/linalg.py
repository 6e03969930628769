"""Small exact linear algebra over coefficient rings and polynomial matrices."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import NonUnit, NotAField


def det_generic(rows, zero, one):
    """Determinant by cofactor expansion; works for any commutative entries."""
    n = len(rows)
    if n == 0:
        return one
    cache = {}

    def minor(cols, r):
        # determinant of rows r.. restricted to the column tuple ``cols``
        if r == n:
            return one
        key = (cols, r)
        if key in cache:
            return cache[key]
        total = zero
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if entry == 0 or (hasattr(entry, "is_zero") and entry.is_zero()):
                continue
            sub = minor(cols[:k] + cols[k + 1:], r + 1)
            term = entry * sub
            total = total - term if k % 2 else total + term
        cache[key] = total
        return total

    return minor(tuple(range(n)), 0)


def det_ring(matrix, ring):
    m = [[ring.normalize(x) for x in row] for row in matrix]
    return ring.normalize(det_generic(m, 0, 1))


def inverse_matrix(matrix, ring):
    """Inverse through the adjugate; raises NonUnit if the determinant is not a unit."""
    n = len(matrix)
    m = [[ring.normalize(x) for x in row] for row in matrix]
    d = ring.normalize(det_generic(m, 0, 1))
    if not ring.is_unit(d):
        raise NonUnit(f"determinant {d} is not a unit in {ring}")
    dinv = ring.inv(d)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            cof = det_generic(sub, 0, 1) if sub else 1
            sign = -1 if (i + j) % 2 else 1
            out[j][i] = ring.normalize(sign * cof * dinv)
    return out


def mat_vec(matrix, vec, ring):
    return [ring.normalize(sum(a * b for a, b in zip(row, vec))) for row in matrix]


def mat_mul(a, b, ring):
    n, k, m = len(a), len(b), len(b[0])
    return [[ring.normalize(sum(a[i][t] * b[t][j] for t in range(k))) for j in range(m)] for i in range(n)]


def solve_linear(ring, columns, target):
    """Find c with sum_j c_j * columns[j] = target.

    ``columns`` and ``target`` are dicts keyed by row labels.  Returns a list of
    coefficients or None if the system is inconsistent.
    """
    if not ring.is_field:
        raise NotAField(f"linear solve needs a field, got {ring}")
    rows = set(target)
    for col in columns:
        rows.update(col)
    rows = sorted(rows)
    ncol = len(columns)
    aug = []
    for r in rows:
        aug.append([ring.normalize(col.get(r, 0)) for col in columns] + [ring.normalize(target.get(r, 0))])
    pivots = []
    row = 0
    for c in range(ncol):
        piv = next((i for i in range(row, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = ring.inv(aug[row][c])
        aug[row] = [ring.normalize(x * inv) for x in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [ring.normalize(x - f * y) for x, y in zip(aug[i], aug[row])]
        pivots.append(c)
        row += 1
        if row == len(aug):
            break
    for i in range(row, len(aug)):
        if aug[i][ncol] != 0:
            return None
    sol = [0] * ncol
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncol]
    return sol


def rational_rank(vectors):
    """Rank over Q of a list of integer (or rational) vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    rank = 0
    ncol = len(rows[0])
    for c in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def minors(matrix, r):
    """Yield (row indices, column indices, r×r submatrix)."""
    nrows, ncols = len(matrix), len(matrix[0])
    for rs in combinations(range(nrows), r):
        for cs in combinations(range(ncols), r):
            yield rs, cs, [[matrix[i][j] for j in cs] for i in rs]
