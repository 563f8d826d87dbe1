"""Dense exact linear algebra over a cyclotomic field.

Matrices are lists of row lists of CycloNum, all at one conductor.
Plain Gaussian elimination; every division is exact field division.
"""

from .cyclotomic import CycloNum

__all__ = ["rank", "determinant", "inverse", "nullspace", "rref"]


def _clone(mat):
    return [list(row) for row in mat]


def rref(mat):
    """Reduced row echelon form; returns (rref matrix, pivot columns)."""
    m = _clone(mat)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat):
    return len(rref(mat)[1])


def determinant(mat):
    m = _clone(mat)
    n = len(m)
    if n == 0:
        return CycloNum.one(1)
    det = CycloNum.one(m[0][0].conductor)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not m[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            return CycloNum.zero(det.conductor)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def inverse(mat):
    """Matrix inverse, or None if singular."""
    n = len(mat)
    if n == 0:
        return []
    conductor = mat[0][0].conductor
    one, zero = CycloNum.one(conductor), CycloNum.zero(conductor)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]


def nullspace(mat, conductor=None):
    """Basis of the right nullspace, echelon-normalized for determinism."""
    if not mat:
        return []
    if conductor is None:
        conductor = mat[0][0].conductor
    one, zero = CycloNum.one(conductor), CycloNum.zero(conductor)
    red, pivots = rref(mat)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * cols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis
