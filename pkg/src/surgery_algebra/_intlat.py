"""Exact integer lattice algorithms on plain list-of-list matrices.

Everything here works on rectangular grids of Python ints (row-major,
``a[i][j]``).  These routines back both the public matrix layer and the
quotient-group arithmetic in :mod:`surgery_algebra.rings`, which is why they
live in a module with no other package imports.

Determinism contract: the Smith form pivot is always a nonzero entry of
minimal absolute value in the live submatrix, ties broken row-major.  The
Hermite routines produce the canonical basis with positive pivots and
earlier-column entries reduced into ``[0, pivot)``, so equal lattices give
equal grids.
"""

from __future__ import annotations


def zeros(m: int, n: int) -> list[list[int]]:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_grid(a: list[list[int]]) -> list[list[int]]:
    return [row[:] for row in a]


def dims(a: list[list[int]]) -> tuple[int, int]:
    m = len(a)
    n = len(a[0]) if m else 0
    return m, n


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    m, n = dims(a)
    n2, k = dims(b)
    if n != n2 and m and k:
        raise ValueError("shape mismatch in integer matmul")
    out = zeros(m, k)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for t in range(n):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(k):
                    oi[j] += x * bt[j]
    return out


def transpose(a: list[list[int]]) -> list[list[int]]:
    m, n = dims(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def _find_pivot(a, m, n, t):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            x = a[i][j]
            if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(a: list[list[int]]):
    """Return (U, D, V) with U·a·V = D diagonal, d1 | d2 | ..., di >= 0.

    U and V are unimodular (built from row and column operations only).
    """
    m, n = dims(a)
    A = copy_grid(a)
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        piv = _find_pivot(A, m, n, t)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            A[t], A[i0] = A[i0], A[t]
            U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            for row in A:
                row[t], row[j0] = row[j0], row[t]
            for row in V:
                row[t], row[j0] = row[j0], row[t]
        d = A[t][t]
        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // d
                if q:
                    for j in range(n):
                        A[i][j] -= q * A[t][j]
                    for j in range(m):
                        U[i][j] -= q * U[t][j]
                if A[i][t]:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, n):
            if A[t][j]:
                q = A[t][j] // d
                if q:
                    for i in range(m):
                        A[i][j] -= q * A[i][t]
                    for i in range(n):
                        V[i][j] -= q * V[i][t]
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % d:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(n):
                A[t][j] += A[bad][j]
            for j in range(m):
                U[t][j] += U[bad][j]
            continue
        if A[t][t] < 0:
            for j in range(n):
                A[t][j] = -A[t][j]
            for j in range(m):
                U[t][j] = -U[t][j]
        t += 1
    return U, A, V


def diagonal_of(d: list[list[int]]) -> list[int]:
    m, n = dims(d)
    return [d[i][i] for i in range(min(m, n))]


def rank(a: list[list[int]]) -> int:
    _, d, _ = smith_normal_form(a)
    return sum(1 for x in diagonal_of(d) if x)


def elementary_divisors(a: list[list[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in the divisibility chain."""
    _, d, _ = smith_normal_form(a)
    return [x for x in diagonal_of(d) if x]


def cokernel_invariants(a: list[list[int]]) -> list[int]:
    """Invariant factors of Z^m / col-span(a): torsion orders > 1, then a 0 per free rank."""
    m, _ = dims(a)
    divs = elementary_divisors(a)
    tors = [x for x in divs if x != 1]
    return tors + [0] * (m - len(divs))


def is_split_injection(a: list[list[int]]) -> bool:
    """True iff the columns of a span a primitive sublattice of full column rank."""
    m, n = dims(a)
    if n == 0:
        return True
    divs = elementary_divisors(a)
    return len(divs) == n and all(x == 1 for x in divs)


def is_surjection(a: list[list[int]]) -> bool:
    m, _ = dims(a)
    divs = elementary_divisors(a)
    return len(divs) == m and all(x == 1 for x in divs)


def kernel_basis(a: list[list[int]]) -> list[list[int]]:
    """n×s grid whose columns form a basis of ker(a); the basis is primitive."""
    m, n = dims(a)
    _, d, v = smith_normal_form(a)
    r = sum(1 for x in diagonal_of(d) if x)
    return [[v[i][j] for j in range(r, n)] for i in range(n)]


def solve(a: list[list[int]], b: list[list[int]]):
    """Any integer X with a·X = b, or None when no integer solution exists."""
    m, n = dims(a)
    mb, k = dims(b)
    if m != mb:
        raise ValueError("shape mismatch in solve")
    u, d, v = smith_normal_form(a)
    ub = matmul(u, b)
    diag = diagonal_of(d)
    y = zeros(n, k)
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        for c in range(k):
            if di:
                if ub[i][c] % di:
                    return None
                if i < n:
                    y[i][c] = ub[i][c] // di
            elif ub[i][c]:
                return None
    return matmul(v, y)


def hermite_column_basis(a: list[list[int]]):
    """Canonical basis of the column lattice of a.

    Returns (h, pivots): h is an m×r grid whose columns are the basis,
    pivots[i] is the pivot row of column i (strictly increasing), each pivot
    entry is positive, and entries of earlier columns in a pivot row lie in
    [0, pivot).
    """
    m, n = dims(a)
    cols = [[a[i][j] for i in range(m)] for j in range(n)]
    settled = 0
    pivots: list[int] = []
    for r in range(m):
        while True:
            nz = [k for k in range(settled, len(cols)) if cols[k][r]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda k: (abs(cols[k][r]), k))
            k0, k1 = nz[0], nz[1]
            q = cols[k1][r] // cols[k0][r]
            for i in range(m):
                cols[k1][i] -= q * cols[k0][i]
        if not nz:
            continue
        j = nz[0]
        cols[settled], cols[j] = cols[j], cols[settled]
        if cols[settled][r] < 0:
            cols[settled] = [-x for x in cols[settled]]
        g = cols[settled][r]
        for k in range(settled):
            q = cols[k][r] // g
            if q:
                for i in range(m):
                    cols[k][i] -= q * cols[settled][i]
        pivots.append(r)
        settled += 1
    h = [[cols[j][i] for j in range(settled)] for i in range(m)]
    return h, pivots


def same_span(a: list[list[int]], b: list[list[int]]) -> bool:
    """True iff the columns of a and b span the same sublattice."""
    if len(a) != len(b):
        return False
    ha, _ = hermite_column_basis(a)
    hb, _ = hermite_column_basis(b)
    return ha == hb


def reduce_mod_lattice(v: list[int], h: list[list[int]], pivots: list[int]) -> list[int]:
    """Canonical representative of v modulo the lattice with Hermite basis h."""
    out = list(v)
    for i in range(len(pivots) - 1, -1, -1):
        p = pivots[i]
        g = h[p][i]
        q = out[p] // g
        if q:
            for r in range(len(out)):
                out[r] -= q * h[r][i]
    return out


def solve_reduced(a: list[list[int]], b: list[list[int]]):
    """Like solve, but the result is canonical: each column of X is reduced
    modulo the kernel lattice of a."""
    x = solve(a, b)
    if x is None:
        return None
    n, k = dims(x)
    ker = kernel_basis(a)
    if not ker or not ker[0]:
        return x
    h, pivots = hermite_column_basis(ker)
    cols = [reduce_mod_lattice([x[i][c] for i in range(n)], h, pivots) for c in range(k)]
    return [[cols[c][i] for c in range(k)] for i in range(n)]


def inverse(a: list[list[int]]):
    """Exact inverse of a unimodular integer matrix, or None."""
    m, n = dims(a)
    if m != n:
        return None
    u, d, v = smith_normal_form(a)
    if any(x != 1 for x in diagonal_of(d)) or len(diagonal_of(d)) != n:
        return None
    return matmul(v, u)


def complement_of_primitive(b: list[list[int]]):
    """For a primitive m×r sublattice basis b, return (c, p): c an m×(m-r)
    complement basis and p the (m-r)×m projection with p·c = I, p·b = 0."""
    m, r = dims(b)
    if not is_split_injection(b):
        return None
    u, d, _ = smith_normal_form(b)
    uinv = inverse(u)
    comp = [[uinv[i][j] for j in range(r, m)] for i in range(m)]
    proj = [u[i][:] for i in range(r, m)]
    return comp, proj


def completion_of_primitive_vector(v: list[int]):
    """A unimodular matrix whose first column is the primitive vector v, or None."""
    m = len(v)
    col = [[x] for x in v]
    u, d, _ = smith_normal_form(col)
    if not (d and d[0][0] == 1):
        return None
    w = inverse(u)
    if matmul(w, [[1]] + [[0]] * (m - 1)) != col:
        w = [[-w[i][0]] + w[i][1:] for i in range(m)]
    return w
