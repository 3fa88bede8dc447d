"""Normal systems: validated n x m rational matrices of line normals.

A normal system is the input datum for everything downstream: its rows are
the normals of n affine hyperplanes in R^m, and the defining condition is
that every subset of at most m rows is linearly independent.  Rows are kept
verbatim (never rescaled): cone labels downstream depend on the chosen
matrix, not just on the lines it defines.
"""

import random
from fractions import Fraction
from itertools import combinations

from .errors import BadShape, DependentRows, GivesUp, LengthMismatch
from .exact_linalg import rank, rational, rational_str


class NormalSystem:
    """Immutable n x m matrix with every <= m rows independent."""

    __slots__ = ("rows", "m", "rejections")

    def __init__(self, rows, m):
        self.rows = tuple(tuple(Fraction(a) for a in row) for row in rows)
        self.m = int(m)
        self.rejections = 0  # set by random_normal_system

    @property
    def n(self):
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, NormalSystem)
                and self.m == other.m and self.rows == other.rows)

    def __hash__(self):
        return hash((self.m, self.rows))

    def __repr__(self):
        return "NormalSystem(n=%d, m=%d)" % (self.n, self.m)


class Arrangement:
    """A normal system paired with constants b: hyperplane i is a_i.x = b_i."""

    __slots__ = ("system", "b")

    def __init__(self, system, b):
        self.system = system
        self.b = tuple(Fraction(x) for x in b)

    def __eq__(self, other):
        return (isinstance(other, Arrangement)
                and self.system == other.system and self.b == other.b)

    def __repr__(self):
        return "Arrangement(n=%d, m=%d)" % (self.system.n, self.system.m)


def first_dependent_subset(rows, m):
    """Lexicographically first dependent row subset of size <= m, or None.

    Subsets are 1-based and ordered as tuples, so {1,2} precedes {1,2,3}
    precedes {1,3}.
    """
    n = len(rows)
    subsets = []
    for k in range(1, m + 1):
        subsets.extend(combinations(range(1, n + 1), k))
    subsets.sort()
    for sub in subsets:
        picked = [rows[i - 1] for i in sub]
        if rank(picked) < len(sub):
            return sub
    return None


def validate(coeffs, m):
    """Check the independence condition and return a NormalSystem.

    Raises BadShape when n <= m or m <= 1 or a row has the wrong width,
    DependentRows naming the first offending subset otherwise.
    """
    m = int(m)
    rows = [tuple(Fraction(a) for a in row) for row in coeffs]
    n = len(rows)
    if m <= 1:
        raise BadShape("ambient dimension m must exceed 1", m=m)
    if n <= m:
        raise BadShape("need more hyperplanes than dimensions", n=n, m=m)
    for i, row in enumerate(rows, start=1):
        if len(row) != m:
            raise BadShape("row has wrong width", row=i,
                           width=len(row), m=m)
    bad = first_dependent_subset(rows, m)
    if bad is not None:
        raise DependentRows("rows are linearly dependent",
                            subset=list(bad))
    return NormalSystem(rows, m)


def random_normal_system(n, m, seed, bound, max_attempts=10000):
    """Uniform integer entries in [-bound, bound], resampled until valid.

    Deterministic for a fixed seed.  The accepted system carries the number
    of rejected draws in its `rejections` attribute.
    """
    n, m, bound = int(n), int(m), int(bound)
    if m <= 1:
        raise BadShape("ambient dimension m must exceed 1", m=m)
    if n <= m:
        raise BadShape("need more hyperplanes than dimensions", n=n, m=m)
    if bound < 1:
        raise BadShape("bound must be at least 1", bound=bound)
    rng = random.Random(seed)
    for attempt in range(max_attempts):
        rows = [[Fraction(rng.randint(-bound, bound)) for _ in range(m)]
                for _ in range(n)]
        if first_dependent_subset(rows, m) is None:
            ns = NormalSystem(rows, m)
            ns.rejections = attempt
            return ns
    raise GivesUp("no valid system found", n=n, m=m, seed=seed,
                  bound=bound, attempts=max_attempts)


def arrangement_from_b(ns, b):
    """Pair a normal system with constants b; no genericity demanded yet."""
    b = tuple(Fraction(x) for x in b)
    if len(b) != ns.n:
        raise LengthMismatch("need one constant per hyperplane",
                             n=ns.n, got=len(b))
    return Arrangement(ns, b)


def ns_to_dict(ns):
    return {
        "m": ns.m,
        "rows": [[rational_str(a) for a in row] for row in ns.rows],
    }


def ns_from_dict(data):
    rows = [[rational(a) for a in row] for row in data["rows"]]
    return validate(rows, data["m"])


def arrangement_to_dict(arr):
    out = ns_to_dict(arr.system)
    out["b"] = [rational_str(x) for x in arr.b]
    return out


def arrangement_from_dict(data):
    ns = ns_from_dict(data)
    return arrangement_from_b(ns, [rational(x) for x in data["b"]])
