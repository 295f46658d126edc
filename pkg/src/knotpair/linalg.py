"""
Exact matrix algebra.

Polynomial matrices are lists of rows of :class:`LaurentPoly`; integer
matrices are lists of rows of Python ints.  Determinants and adjugates over
Z[t, t^-1] use fraction-free (Bareiss) elimination, whose intermediate
divisions are exact because the ring is an integral domain.  Integer
kernels and solutions come from a Smith normal form with transforms.
"""

from itertools import permutations

from .laurent import LaurentPoly, ZERO, ONE

__all__ = [
    "poly_matrix", "identity", "transpose", "matmul", "det", "det_leibniz",
    "adjugate", "smith_normal_form", "int_kernel", "int_solve",
    "int_det", "perm_sign",
]


class NotSquareError(ValueError):
    pass


def poly_matrix(rows):
    return [[LaurentPoly.coerce(x) for x in row] for row in rows]


def identity(n, one=ONE, zero=ZERO):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    poly = any(isinstance(x, LaurentPoly) for row in (a[0], b[0] if b else []) for x in row)
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = ZERO if poly else 0
            for k in range(inner):
                x = row[k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def _check_square(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise NotSquareError(f"expected a square matrix, got {n}x{len(m[0]) if m else 0}")
    return n


def _support(p):
    return p.nterms() if isinstance(p, LaurentPoly) else (1 if p else 0)


def _exact_div(a, b):
    if isinstance(a, LaurentPoly):
        q = a.divexact(b)
        if q is None:
            raise ArithmeticError("inexact Bareiss division; ring is not a domain?")
        return q
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact Bareiss division")
    return q


def _pick_pivot(m, k, n):
    # shortest support first, ties broken by row index
    best = None
    for i in range(k, n):
        x = m[i][k]
        if x:
            key = (_support(x), i)
            if best is None or key < best[0]:
                best = (key, i)
    return None if best is None else best[1]


def det(m):
    """Determinant by Bareiss fraction-free elimination."""
    n = _check_square(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    poly = isinstance(a[0][0], LaurentPoly) or any(isinstance(x, LaurentPoly) for r in a for x in r)
    if poly:
        a = [[LaurentPoly.coerce(x) for x in row] for row in a]
    one = ONE if poly else 1
    sign = 1
    prev = one
    for k in range(n - 1):
        p = _pick_pivot(a, k, n)
        if p is None:
            return ZERO if poly else 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(akk * row_i[j] - aik * row_k[j], prev)
            row_i[k] = ZERO if poly else 0
        prev = akk
    d = a[n - 1][n - 1]
    return d * sign if sign == 1 else -d


def det_leibniz(m):
    """Permutation expansion; an independent oracle for small matrices."""
    n = _check_square(m)
    total = 0
    for perm in permutations(range(n)):
        term = perm_sign(perm)
        for i, j in enumerate(perm):
            term = term * m[i][j]
            if not term:
                break
        total = total + term
    if n == 0:
        return ONE
    return LaurentPoly.coerce(total) if isinstance(m[0][0], LaurentPoly) else total


def perm_sign(perm):
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _minor(m, i, j):
    return [row[:j] + row[j + 1:] for r, row in enumerate(m) if r != i]


def _adjugate_cofactor(m, n):
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(_minor(m, i, j))
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return adj


def _adjugate_bareiss(m, n):
    # Fraction-free Gauss-Jordan on [m | I]: every step is a left
    # multiplication, so the right block ends as E with E*m = d*I.
    a = [[LaurentPoly.coerce(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(m)]
    prev = ONE
    sign = 1
    width = 2 * n
    for k in range(n):
        p = _pick_pivot(a, k, n)
        if p is None:
            return None
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            aik = row_i[k]
            for j in range(width):
                if j == k:
                    continue
                row_i[j] = _exact_div(akk * row_i[j] - aik * row_k[j], prev)
            row_i[k] = ZERO
        prev = akk
    # every diagonal entry ends equal to the last pivot
    d = a[0][0]
    for i in range(n):
        if a[i][i] != d:
            raise ArithmeticError("Bareiss Gauss-Jordan produced an unbalanced diagonal")
    e = [row[n:] for row in a]
    return d, sign, e


def adjugate(m, check=True):
    """
    Adjugate (transposed cofactor matrix).  Cofactors are used up to 6x6 and
    fraction-free Gauss-Jordan elimination above that.  With ``check`` the
    identities m*adj = adj*m = det*I are asserted.
    """
    n = _check_square(m)
    m = [[LaurentPoly.coerce(x) for x in row] for row in m]
    if n == 0:
        return []
    if n == 1:
        return [[ONE]]
    if n <= 6:
        adj = _adjugate_cofactor(m, n)
        d = None
    else:
        res = _adjugate_bareiss(m, n)
        if res is None:
            # singular: fall back to cofactors (rank-deficient adjugates are rare here)
            adj = _adjugate_cofactor(m, n)
            d = None
        else:
            dd, sign, e = res
            # e*m = dd*I and dd = sign*det(m), hence adj = sign*e
            adj = e if sign == 1 else [[-x for x in row] for row in e]
            d = dd if sign == 1 else -dd
    if check:
        if d is None:
            d = det(m)
        scalar = [[d if i == j else ZERO for j in range(n)] for i in range(n)]
        if matmul(m, adj) != scalar or matmul(adj, m) != scalar:
            raise ArithmeticError("adjugate identity failed")
    return adj


# -- integer matrices --------------------------------------------------------

def int_det(m):
    return det([list(map(int, row)) for row in m]) if m else 1


def smith_normal_form(m):
    """
    Smith normal form of an integer matrix.

    Returns ``(diag, U, V)`` where ``U*m*V`` is the rectangular diagonal
    matrix with entries ``diag`` (``d1 | d2 | ...``, nonnegative) and ``U``,
    ``V`` are unimodular.  ``len(diag) == min(rows, cols)``.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, row)) for row in m]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        if q:
            ra, rs = a[dst], a[src]
            for k in range(cols):
                if rs[k]:
                    ra[k] -= q * rs[k]
            ua, us = U[dst], U[src]
            for k in range(rows):
                if us[k]:
                    ua[k] -= q * us[k]

    def add_col(dst, src, q):
        if q:
            for row in a:
                if row[src]:
                    row[dst] -= q * row[src]
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    r = min(rows, cols)
    for k in range(r):
        # smallest nonzero entry of the trailing block becomes the pivot
        while True:
            best = None
            for i in range(k, rows):
                ri = a[i]
                for j in range(k, cols):
                    x = ri[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                diag = [abs(a[i][i]) for i in range(k)] + [0] * (r - k)
                return _fix_signs(a, U, diag, k), U, V
            _, bi, bj = best
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            p = a[k][k]
            clean = True
            for i in range(k + 1, rows):
                if a[i][k]:
                    add_row(i, k, a[i][k] // p)
                    if a[i][k]:
                        clean = False
            for j in range(k + 1, cols):
                if a[k][j]:
                    add_col(j, k, a[k][j] // p)
                    if a[k][j]:
                        clean = False
            if not clean:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(k, bad, -1)
    diag = [abs(a[i][i]) for i in range(r)]
    return _fix_signs(a, U, diag, r), U, V


def _fix_signs(a, U, diag, upto):
    for i in range(upto):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            U[i] = [-x for x in U[i]]
    return diag


def int_kernel(m, ncols=None):
    """
    Basis (list of integer vectors) of the integer kernel {x : m x = 0}.
    ``ncols`` is needed only when ``m`` has no rows.
    """
    if not m:
        n = ncols or 0
        return [[int(i == j) for j in range(n)] for i in range(n)]
    cols = len(m[0])
    diag, _, V = smith_normal_form(m)
    rank = sum(1 for d in diag if d)
    basis = []
    for j in range(rank, cols):
        basis.append([V[i][j] for i in range(cols)])
    return basis


def int_solve(m, b):
    """One integer solution x of m x = b, or None when none exists."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    diag, U, V = smith_normal_form(m)
    ub = [sum(U[i][k] * b[k] for k in range(rows) if U[i][k]) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if ub[i]:
                return None
        else:
            q, r = divmod(ub[i], d)
            if r:
                return None
            y[i] = q
    return [sum(V[i][k] * y[k] for k in range(cols) if y[k]) for i in range(cols)]
