"""Discriminantal arrangement of a normal system.

For every (m+1)-subset S of the n lines there is one hyperplane through the
origin of R^n: the locus of constant vectors b for which the lines indexed
by S pass through a common point.  Its normal comes from expanding the
(m+1) x (m+1) concurrency determinant along the b-column, so it is
supported exactly on S.  The C(n, m+1) normals, in lexicographic subset
order, fix the sign conventions used by every census downstream.
"""

from fractions import Fraction
from itertools import combinations

from .errors import BadSubsetSize
from .exact_linalg import determinant, rank, rational, rational_str


class DiscriminantalArrangement:
    """Central arrangement in R^n keyed by (m+1)-subsets (1-based, lex).

    source keeps the normal system the arrangement was built from (None for
    deserialized arrangements); geometric verifiers use it to reconstruct
    the affine picture behind a constant vector b.
    """

    __slots__ = ("n", "m", "subsets", "normals", "index", "source")

    def __init__(self, n, m, subsets, normals, source=None):
        self.n = int(n)
        self.m = int(m)
        self.subsets = tuple(tuple(s) for s in subsets)
        self.normals = tuple(tuple(v) for v in normals)
        self.index = {s: i for i, s in enumerate(self.subsets)}
        self.source = source

    def normal_of(self, subset):
        return self.normals[self.index[tuple(sorted(subset))]]

    def __eq__(self, other):
        return (isinstance(other, DiscriminantalArrangement)
                and (self.n, self.m) == (other.n, other.m)
                and self.subsets == other.subsets
                and self.normals == other.normals)

    def __repr__(self):
        return "DiscriminantalArrangement(n=%d, m=%d, %d hyperplanes)" % (
            self.n, self.m, len(self.subsets))


def build(ns):
    """All C(n, m+1) concurrency hyperplanes of a normal system.

    The coefficient of b_{i_k} in the hyperplane of S = {i_1 < ... <
    i_{m+1}} is (-1)^(m+1+k) times the maximal minor of the coefficient
    rows of S with row i_k deleted.  Signs are kept raw: rescaling would
    break bit-exact comparison with hand-computed equation lists.
    """
    n, m = ns.n, ns.m
    subsets = list(combinations(range(1, n + 1), m + 1))
    normals = []
    for S in subsets:
        vec = [Fraction(0)] * n
        for k, i in enumerate(S, start=1):
            minor = [list(ns.rows[j - 1]) for j in S if j != i]
            sign = -1 if (m + 1 + k) % 2 else 1
            vec[i - 1] = sign * determinant(minor)
        normals.append(tuple(vec))
    return DiscriminantalArrangement(n, m, subsets, normals, source=ns)


def common_intersection_dim(da):
    """Dimension of the intersection of all hyperplanes; always >= m."""
    return da.n - rank(da.normals)


def stack_normals(da, D):
    """Normal rows of the members of D, in the order given."""
    rows = []
    for S in D:
        s = tuple(sorted(S))
        if len(s) != da.m + 1 or s not in da.index:
            raise BadSubsetSize("members must be (m+1)-subsets of {1..n}",
                                member=list(S), m=da.m, n=da.n)
        rows.append(da.normals[da.index[s]])
    return rows


def subset_rank(da, D):
    """Rank of the stacked normals of the members of D (0 for empty D)."""
    rows = stack_normals(da, D)
    if not rows:
        return 0
    return rank(rows)


def da_to_dict(da):
    return {
        "n": da.n,
        "m": da.m,
        "hyperplanes": [
            {"subset": list(s), "normal": [rational_str(a) for a in v]}
            for s, v in zip(da.subsets, da.normals)
        ],
    }


def da_from_dict(data):
    subsets = [tuple(h["subset"]) for h in data["hyperplanes"]]
    normals = [tuple(rational(a) for a in h["normal"])
               for h in data["hyperplanes"]]
    return DiscriminantalArrangement(data["n"], data["m"], subsets, normals)
