"""Characteristic polynomials of central arrangements, three ways.

whitney_charpoly sums (-1)^|B| x^(n - rank B) over all 2^N subsets of
hyperplanes, sharing work through a memoized DFS keyed by row-space.
poset_charpoly crawls the lattice of flats and runs the Mobius recursion.
combinatorial_charpoly never touches a matrix: it walks the concurrency
closed collections, so it speaks only about concurrency-free systems.
All three must agree wherever their domains overlap; the cone census
rests on that agreement.
"""

from fractions import Fraction

from .concurrency import _check_universe, _closed_ints, _rank_of_closed
from .errors import OddRegionCount, TooLarge
from .exact_linalg import rref

WHITNEY_LIMIT = 22
POSET_FLAT_LIMIT = 200000


class CharPolynomial:
    """Dense integer polynomial, coefficients from degree n down to 0."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(int(c) for c in coefficients)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return (isinstance(other, CharPolynomial)
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "CharPolynomial(%s)" % (self.as_str(),)

    def as_str(self):
        n = self.degree
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            d = n - i
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                xs = "x" if d == 1 else "x^%d" % d
                term = xs if mag == 1 else "%d%s" % (mag, xs)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts) if parts else "0"

    def factored_str(self):
        """x^a (x - r) ... (residual), splitting off integer roots."""
        coeffs = list(self.coefficients)
        # strip powers of x
        xpow = 0
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
            xpow += 1
        factors = []
        if xpow == 1:
            factors.append("x")
        elif xpow > 1:
            factors.append("x^%d" % xpow)
        # peel integer roots by exact synthetic division
        def divisors(v):
            v = abs(v)
            out = set()
            d = 1
            while d * d <= v:
                if v % d == 0:
                    out.update((d, v // d))
                d += 1
            return sorted(out)

        while len(coeffs) > 1:
            root = None
            for r in divisors(coeffs[-1]) if coeffs[-1] else []:
                for cand in (r, -r):
                    acc = 0
                    for c in coeffs:
                        acc = acc * cand + c
                    if acc == 0:
                        root = cand
                        break
                if root is not None:
                    break
            if root is None:
                break
            out = []
            acc = 0
            for c in coeffs[:-1]:
                acc = acc * root + c
                out.append(acc)
            coeffs = out
            factors.append("(x - %d)" % root if root > 0
                           else "(x + %d)" % -root)
        if len(coeffs) > 1 or coeffs[0] != 1 or not factors:
            factors.insert(0 if len(coeffs) == 1 else len(factors),
                           "(%s)" % CharPolynomial(coeffs).as_str()
                           if len(coeffs) > 1 else str(coeffs[0]))
        return " ".join(factors)


def _from_exponents(n, by_exp):
    # by_exp[d] = coefficient of x^d
    return CharPolynomial([by_exp[n - i] for i in range(n + 1)])


def _reduce_against(basis, vec):
    """Reduce vec against rref basis rows; None if it lands in the span."""
    v = [Fraction(x) for x in vec]
    for row in basis:
        p = next(i for i, x in enumerate(row) if x == 1)
        if v[p] != 0:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    if any(x != 0 for x in v):
        return tuple(v)
    return None


def _extend_basis(basis, vec):
    """rref basis of span(basis + vec); basis itself if vec is inside."""
    if _reduce_against(basis, vec) is None:
        return basis
    rows, _ = rref(list(basis) + [list(vec)])
    return tuple(rows)


def whitney_charpoly(da):
    """Subset-sum characteristic polynomial (the brute-force oracle).

    G(i, V) = sum over B in rows i.. of (-1)^|B| x^(n - rank(V u B)),
    computed as G(i+1, V) - G(i+1, V + row_i) and memoized on the row
    space of V, which collapses the 2^N subsets to (row, flat) states.
    """
    rows = da.normals
    N = len(rows)
    n = da.n
    if N > WHITNEY_LIMIT:
        raise TooLarge("subset sum limited to %d hyperplanes"
                       % WHITNEY_LIMIT, hyperplanes=N, limit=WHITNEY_LIMIT)
    memo = {}

    def go(i, basis):
        if i == N:
            out = [0] * (n + 1)
            out[n - len(basis)] = 1
            return out
        key = (i, basis)
        hit = memo.get(key)
        if hit is not None:
            return hit
        skip = go(i + 1, basis)
        take = go(i + 1, _extend_basis(basis, rows[i]))
        out = [a - b for a, b in zip(skip, take)]
        memo[key] = out
        return out

    return _from_exponents(n, go(0, ()))


def _flat_lattice(da):
    """All flats: (hyperplane index mask, rank), plus the mask order."""
    rows = da.normals
    N = len(rows)
    # span key -> (member mask, rank)
    def close(basis):
        mask = 0
        for j in range(N):
            if _reduce_against(basis, rows[j]) is None:
                mask |= 1 << j
        return mask

    flats = {0: ((), 0)}  # mask -> (basis, rank)
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            basis, _ = flats[mask]
            rest = ~mask & ((1 << N) - 1)
            j = rest
            while j:
                b = j & -j
                p = b.bit_length() - 1
                j ^= b
                grown = _extend_basis(basis, rows[p])
                gmask = close(grown)
                if gmask not in flats:
                    if len(flats) >= POSET_FLAT_LIMIT:
                        raise TooLarge("flat lattice exceeds memory guard",
                                       limit=POSET_FLAT_LIMIT)
                    flats[gmask] = (grown, len(grown))
                    nxt.append(gmask)
        frontier = nxt
    return {mask: rank for mask, (basis, rank) in flats.items()}


def poset_charpoly(da):
    """Mobius recursion over the lattice of flats; equals whitney."""
    ranks = _flat_lattice(da)
    n = da.n
    order = sorted(ranks, key=lambda mask: (ranks[mask], mask))
    mu = {}
    by_exp = [0] * (n + 1)
    for mask in order:
        below = 0
        for g in order:
            if g != mask and g & ~mask == 0:
                below += mu[g]
            if g == mask:
                break
        mu[mask] = 1 if mask == 0 else -below
        by_exp[n - ranks[mask]] += mu[mask]
    return _from_exponents(n, by_exp)


def combinatorial_charpoly(n, m):
    """Matrix-free characteristic polynomial for concurrency-free systems.

    Mobius recursion over concurrency closed collections with the
    combinatorial rank in place of matrix rank.  Must agree with the
    poset method on any concurrency-free normal system of shape (n, m).
    """
    _check_universe(n, m)
    closed = _closed_ints(n, m)  # nonempty, sorted by (size, members)
    order = [0] + sorted(closed, key=lambda d: (d.bit_count(), d))
    mu = {}
    by_exp = [0] * (n + 1)
    for d in order:
        below = 0
        for g in order:
            if g != d and g & ~d == 0:
                below += mu[g]
            if g == d:
                break
        mu[d] = 1 if d == 0 else -below
        rank = 0 if d == 0 else _rank_of_closed(n, m, d)
        by_exp[n - rank] += mu[d]
    return _from_exponents(n, by_exp)


def zaslavsky_regions(p):
    """Number of chambers of the arrangement: (-1)^n chi(-1)."""
    n = p.degree
    val = p(-1)
    return val if n % 2 == 0 else -val


def iso_class_count(p):
    """Half the chamber count; raises OddRegionCount on an odd census."""
    r = zaslavsky_regions(p)
    if r % 2:
        raise OddRegionCount("chamber count is odd", regions=r)
    return r // 2
