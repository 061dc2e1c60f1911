"""Dense linear algebra over the prime field GF(p).

Vectors are tuples of ints in ``range(p)``; matrices are tuples of row vectors.
The row-vector convention is used throughout: ``x . M`` is the image of ``x``.
Matrices here are at most a few rows wide, so plain Python elimination beats
array libraries, whose per-call overhead dominates at this size.
"""

from itertools import product


def _inv(a, p):
    return pow(a, p - 2, p)


def rref(rows, p):
    """Reduced row echelon form, zero rows dropped. Canonical for the row space."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] % p:
                pr = r
                break
        if pr is None:
            continue
        mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
        inv = _inv(mat[pivot_row][col] % p, p)
        mat[pivot_row] = [(v * inv) % p for v in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(v % p for v in r) for r in mat[:pivot_row])


def rank(rows, p):
    return len(rref(rows, p))


def pivots(echelon):
    return [next(i for i, v in enumerate(r) if v) for r in echelon]


def vecmat(v, mat, p):
    n = len(mat[0]) if mat else 0
    out = [0] * n
    for coef, row in zip(v, mat):
        if coef:
            for k in range(n):
                out[k] += coef * row[k]
    return tuple(x % p for x in out)


def matmul(a, b, p):
    return tuple(vecmat(row, b, p) for row in a)


def transpose(mat):
    return tuple(zip(*mat))


def in_span(v, echelon, p):
    """Membership test against an RREF basis."""
    v = list(v)
    for row, col in zip(echelon, pivots(echelon)):
        f = v[col]
        if f:
            v = [(a - f * b) % p for a, b in zip(v, row)]
    return not any(v)


def left_nullspace(mat, n_rows, p):
    """RREF basis of ``{x : x . mat = 0}`` where ``mat`` has ``n_rows`` rows."""
    if n_rows == 0:
        return ()
    ncols = len(mat[0]) if mat else 0
    # x . M = 0  <=>  M^T x^T = 0; solve by row reducing [M | I].
    aug = [list(mat[i]) + [int(i == j) for j in range(n_rows)] for i in range(n_rows)]
    red = rref(aug, p) if ncols else tuple(tuple(r) for r in aug)
    null = [r[ncols:] for r in red if not any(r[:ncols])]
    return rref(null, p)


def coords(v, basis, p):
    """Coefficients ``c`` with ``c . basis == v``, or None when ``v`` is outside the span."""
    k = len(basis)
    if k == 0:
        return () if not any(v) else None
    # Solve c . basis = v by reducing [basis^T | v^T] column-wise.
    n = len(v)
    aug = [[basis[i][col] for i in range(k)] + [v[col]] for col in range(n)]
    red = rref(aug, p)
    sol = [0] * k
    for row in red:
        lead = next(i for i, x in enumerate(row) if x)
        if lead == k:
            return None
        sol[lead] = row[k]
    c = tuple(sol)
    if vecmat(c, basis, p) != tuple(x % p for x in v):
        return None
    return c


def inverse(mat, p):
    n = len(mat)
    aug = [list(mat[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    red = rref(aug, p)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def span_elements(basis, n, p):
    """All vectors of the span, sorted by little-endian integer code."""
    if not basis:
        return [tuple([0] * n)]
    out = {vecmat(c, basis, p) for c in product(range(p), repeat=len(basis))}
    return sorted(out, key=lambda v: encode(v, p))


def encode(v, p):
    """Little-endian integer code: the first coordinate is least significant."""
    code = 0
    for x in reversed(v):
        code = code * p + x
    return code
