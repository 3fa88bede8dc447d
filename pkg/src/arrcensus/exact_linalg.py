"""Exact rational linear algebra: rank, determinant, nullspace, feasibility.

All scalars are fractions.Fraction (always reduced, positive denominator).
Matrices are plain sequences of rows; rows are sequences of Fractions or
ints.  No floating point anywhere: region counts downstream hinge on exact
degeneracies that rounding destroys.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import BadShape


def rational(s):
    """Parse 'p/q' or 'p' (or an int) into a Fraction; q = 0 rejected."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))  # Fraction('p/0') raises ZeroDivisionError


def rational_str(q):
    """Serialize a Fraction as 'p/q', or 'p' when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def dot(u, v):
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def matvec(mat, x):
    return tuple(dot(row, x) for row in mat)


def _int_rows(mat):
    # scale each row by the lcm of denominators: rank is unchanged
    out = []
    for row in mat:
        fr = [Fraction(a) for a in row]
        d = lcm(*(a.denominator for a in fr)) if fr else 1
        out.append([int(a * d) for a in fr])
    return out


def rank(mat):
    """Exact rank by fraction-free (Bareiss) elimination."""
    a = _int_rows(mat)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r


def determinant(mat):
    """Exact determinant via Bareiss; raises BadShape on non-square input."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise BadShape("determinant needs a square matrix", rows=n)
    if n == 0:
        return Fraction(1)
    a = []
    scale = Fraction(1)
    for row in mat:
        fr = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in fr))
        scale *= d
        a.append([int(x * d) for x in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns), exact."""
    a = [[Fraction(x) for x in row] for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in a[:r]], pivots


def row_space_key(mat):
    """Canonical hashable key of the row space (the RREF rows)."""
    rows, _ = rref(mat)
    return tuple(rows)


def nullspace_basis(mat):
    """Basis vectors of {x : mat x = 0}; len = cols - rank, each exact."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    if ncols == 0:
        return []
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def solve_particular(mat, b):
    """One exact solution of mat x = b, or None when inconsistent."""
    ncols = len(mat[0]) if mat else 0
    aug = [list(row) + [bi] for row, bi in zip(mat, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:  # pivot in the constant column
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][ncols]
    return tuple(x)


def lex_independent_columns(mat, target):
    """Lexicographically first column set of given size with full rank."""
    chosen = []
    for c in range(len(mat[0]) if mat else 0):
        trial = chosen + [c]
        sub = [[row[j] for j in trial] for row in mat]
        if rank(sub) == len(trial):
            chosen = trial
            if len(chosen) == target:
                return chosen
    return chosen


def integer_primitive(vec):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    fr = [Fraction(x) for x in vec]
    d = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * d) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def feasible_strict(rows):
    """Exact x with row . x > 0 for every row, or None.

    Cones are scale invariant, so strictness is encoded as row . x >= 1 and
    solved by a phase-1 simplex (artificial-variable sum minimized, Bland's
    smallest-index rule: deterministic and cycle-free).  The tableau is kept
    as integers under integer pivoting: every entry equals the rational
    dictionary entry times the current basis determinant, so one pivot costs
    integer mul/sub plus an exact division, with no per-entry gcd work.
    """
    nr = len(rows)
    if nr == 0:
        return ()
    d = len(rows[0])
    irows = []
    for r in rows:
        fr = [Fraction(a) for a in r]
        den = lcm(*(f.denominator for f in fr)) if fr else 1
        irows.append([int(f * den) for f in fr])
    # variables: u_1..u_d, v_1..v_d (x = u - v), surplus w_i, artificial z_i
    width = 2 * d + 2 * nr + 1
    tab = [[0] * width for _ in range(nr)]
    for i, r in enumerate(irows):
        for j, a in enumerate(r):
            tab[i][j] = a
            tab[i][d + j] = -a
        tab[i][2 * d + i] = -1
        tab[i][2 * d + nr + i] = 1
        tab[i][-1] = 1
    basis = [2 * d + nr + i for i in range(nr)]
    ncols = width - 1
    # reduced costs for min sum(z): r_j = c_j - sum of column j
    red = [0] * ncols
    for j in range(ncols):
        s = sum(tab[i][j] for i in range(nr))
        red[j] = (1 if j >= 2 * d + nr else 0) - s
    det = 1
    while True:
        sgn = 1 if det > 0 else -1
        enter = next((j for j in range(ncols) if sgn * red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(nr):
            if sgn * tab[i][enter] > 0:
                ratio = Fraction(tab[i][-1], tab[i][enter])
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            break  # unbounded in phase 1 cannot happen; defensive
        prow = tab[leave]
        piv = prow[enter]
        for i in range(nr):
            if i != leave:
                ti = tab[i]
                f = ti[enter]
                tab[i] = [(x * piv - f * y) // det
                          for x, y in zip(ti, prow)]
        f = red[enter]
        red = [(x * piv - f * y) // det for x, y in zip(red, prow)]
        basis[leave] = enter
        det = piv
    value = sum((Fraction(tab[i][-1], det) for i, bv in enumerate(basis)
                 if bv >= 2 * d + nr), Fraction(0))
    if value != 0:
        return None
    x = [Fraction(0)] * d
    for i, bv in enumerate(basis):
        if bv < d:
            x[bv] += Fraction(tab[i][-1], det)
        elif bv < 2 * d:
            x[bv - d] -= Fraction(tab[i][-1], det)
    return tuple(x)


def find_interior_point(mat, signs):
    """Exact x with sign(row_i . x) = signs_i for all i, or None.

    signs entries are '+'/'-' (or +1/-1).  Deterministic for fixed input.
    """
    if len(signs) != len(mat):
        raise BadShape("one sign per row required",
                       rows=len(mat), signs=len(signs))
    folded = []
    for row, s in zip(mat, signs):
        if s in ("+", 1):
            folded.append(tuple(Fraction(a) for a in row))
        elif s in ("-", -1):
            folded.append(tuple(-Fraction(a) for a in row))
        else:
            raise BadShape("signs must be '+' or '-'", got=repr(s))
    return feasible_strict(folded)
