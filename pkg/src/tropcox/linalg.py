"""Exact integer and rational linear algebra kernels.

All heavy polyhedral work runs on plain Python integers (arbitrary
precision); Fractions only appear at the boundaries.  Matrices are lists
or tuples of row tuples.
"""

from fractions import Fraction
from math import gcd


def gcd_list(v):
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries, keeping direction."""
    g = gcd_list(v)
    if g in (0, 1):
        return tuple(v)
    return tuple(x // g for x in v)


def primitive_signed(v):
    """Primitive vector with the first nonzero entry positive (line direction)."""
    w = primitive(v)
    for x in w:
        if x > 0:
            return w
        if x < 0:
            return tuple(-y for y in w)
    return w


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def vec_mat(v, m):
    n = len(m[0])
    return tuple(sum(v[i] * m[i][j] for i in range(len(m))) for j in range(n))


def rank(mat):
    """Rank of an integer (or Fraction) matrix by fraction-free elimination."""
    rows = [list(r) for r in mat if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [pv * a - f * b for a, b in zip(rows[i], rows[r])]
                g = gcd_list(rows[i])
                if g > 1:
                    rows[i] = [a // g for a in rows[i]]
        r += 1
        if r == len(rows):
            break
    return r


def det(mat):
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(mat)
    m = [list(r) for r in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(mat):
    """Reduced row echelon form over Q. Returns (rows of Fractions, pivot cols)."""
    rows = [[Fraction(x) for x in r] for r in mat]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def solve(mat, rhs):
    """One rational solution x of mat @ x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(mat, rhs)]
    rows, pivots = rref(aug)
    n = len(mat[0])
    for row in rows:
        if all(x == 0 for x in row[:n]) and row[n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        if c == n:
            return None
        x[c] = rows[i][n]
    return x


def int_kernel(mat):
    """Basis (rows) of the integer kernel {x : mat @ x = 0}.

    The returned lattice is the full kernel, hence saturated.
    """
    if not mat:
        return []
    nrows, ncols = len(mat), len(mat[0])
    m = [list(r) for r in mat]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    # column elimination with unimodular column ops tracked in u
    pivot_row = 0
    pivot_cols = []
    col = 0
    active = list(range(ncols))
    for row in range(nrows):
        # find a column among active with nonzero entry in this row, reduce all
        live = [c for c in active if m[row][c] != 0]
        if not live:
            continue
        # gcd-reduce the live columns against each other on this row
        while len(live) > 1:
            live.sort(key=lambda c: abs(m[row][c]))
            c0 = live[0]
            for c in live[1:]:
                q = m[row][c] // m[row][c0]
                if q:
                    for i in range(nrows):
                        m[i][c] -= q * m[i][c0]
                    for i in range(ncols):
                        u[i][c] -= q * u[i][c0]
            live = [c for c in live if m[row][c] != 0]
        c0 = live[0]
        active.remove(c0)
        pivot_cols.append(c0)
    basis = []
    for c in active:
        vec = tuple(u[i][c] for i in range(ncols))
        if any(vec):
            basis.append(primitive_signed(vec))
    return basis


def saturate(rows):
    """Basis of the saturation of the row lattice (its real span intersected Z^n)."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    ker = int_kernel(rows)
    if not ker:
        n = len(rows[0])
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return int_kernel(ker)


def hnf(rows):
    """Canonical row Hermite normal form of the lattice spanned by rows.

    Pivots positive, entries above pivots reduced into [0, pivot).
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    work = rows
    col = 0
    while work and col < ncols:
        live = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            r0 = live[0]
            new_live = [r0]
            for r in live[1:]:
                q = r[col] // r0[col]
                rr = [a - q * b for a, b in zip(r, r0)]
                if rr[col] != 0:
                    new_live.append(rr)
                elif any(rr):
                    rest.append(rr)
            live = new_live
        r0 = live[0]
        if r0[col] < 0:
            r0 = [-x for x in r0]
        basis.append(r0)
        work = rest
        col += 1
    # reduce above pivots
    for i in range(len(basis) - 1, -1, -1):
        pc = next(j for j, x in enumerate(basis[i]) if x)
        for k in range(i):
            q = basis[k][pc] // basis[i][pc]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return [tuple(r) for r in basis]


def project_off(v, basis_rows):
    """Primitive integer representative of v projected orthogonally off a lattice.

    Returns v unchanged when basis_rows is empty; returns the zero vector when
    v lies in the span.
    """
    if not basis_rows:
        return primitive(v)
    gram = [[dot(a, b) for b in basis_rows] for a in basis_rows]
    rhs = [dot(a, v) for a in basis_rows]
    y = solve(gram, rhs)
    res = [Fraction(x) - sum(y[i] * basis_rows[i][j] for i in range(len(basis_rows)))
           for j, x in enumerate(v)]
    den = 1
    for x in res:
        den = den * x.denominator // gcd(den, x.denominator)
    w = tuple(int(x * den) for x in res)
    return primitive(w)


def in_span(v, basis_rows):
    if not basis_rows:
        return not any(v)
    return rank(list(basis_rows) + [tuple(v)]) == rank(basis_rows)


def coords_in_basis(v, basis_rows):
    """Rational coordinates of v in the row basis, or None if outside the span."""
    if not basis_rows:
        return None if any(v) else []
    cols = [[basis_rows[i][j] for i in range(len(basis_rows))] for j in range(len(v))]
    return solve(cols, v)
