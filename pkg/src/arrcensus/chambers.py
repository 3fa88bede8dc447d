"""Cone catalog of a central arrangement: sign vectors with exact witnesses.

A central arrangement cuts its ambient space into open convex cones, one per
realizable strict sign vector.  We enumerate them by inserting hyperplanes one
at a time and splitting every existing cell whose interior the new hyperplane
meets.  All feasibility questions are answered by the exact phase-1 simplex
from exact_linalg, so the catalog is complete and witness-certified: no cell
is reported without a rational interior point, and no realizable sign vector
is missed because splits are decided by the solver, not by sampling.

The arrangement is first reduced modulo its common intersection subspace.
Normals are restricted to the lexicographically first coordinate set on which
they have full rank; this keeps the simplex dimension at rank(normals) rather
than n, and witnesses are lifted back by zero-filling the dropped coordinates.
"""

from fractions import Fraction

from .errors import LengthMismatch, NotInCatalog, TooLarge, UnpairedChamber
from .exact_linalg import (dot, feasible_strict, lex_independent_columns,
                           nullspace_basis, rank, rational_str)

DEFAULT_MAX_CHAMBERS = 10 ** 4

_FLIP = str.maketrans("+-", "-+")


def opposite_signs(signs):
    """The antipodal sign vector."""
    return signs.translate(_FLIP)


def _scaled(row, s):
    return row if s > 0 else tuple(-x for x in row)


def _feasible_lazy(folded, flipped, seed=()):
    """Strict interior point of {folded > 0, flipped > 0}, or None.

    Constraint generation: solve on a working subset (the wall plus any rows
    named in seed), then add whatever the candidate point still violates and
    repeat.  Infeasibility of a subset already proves global infeasibility,
    and a point that survives the full re-check is a genuine witness, so the
    laziness is sound; it just keeps the simplex tableaus small.
    """
    active = [flipped] + [folded[j] for j in seed]
    left = set(range(len(folded))) - set(seed)
    while True:
        pt = feasible_strict(tuple(active))
        if pt is None:
            return None
        viol = [j for j in sorted(left) if dot(folded[j], pt) <= 0]
        if not viol:
            return pt
        for j in viol:
            active.append(folded[j])
            left.discard(j)


def _opposite(folded, flipped, w):
    """Witness for the far side of a wall, or None when the side is empty.

    w satisfies folded strictly but sits on the wrong side of flipped.  Drop
    the perpendicular foot p of w onto the wall; when p still satisfies all
    of folded strictly, stepping from p along flipped by half the largest
    safe amount gives an exact witness with no simplex run at all.  The foot
    lies outside the cell only for skinny cells, where we fall back to the
    lazy solver seeded with the constraints the foot violated.
    """
    rr = dot(flipped, flipped)
    t = dot(flipped, w) / rr
    p = tuple(wi - t * fi for wi, fi in zip(w, flipped))
    bound = None
    bad = []
    for j, f in enumerate(folded):
        fp = dot(f, p)
        if fp <= 0:
            bad.append(j)
            continue
        fd = dot(f, flipped)
        if fd < 0:
            b = fp / -fd
            if bound is None or b < bound:
                bound = b
    if not bad:
        eps = bound / 2 if bound is not None else Fraction(1)
        return tuple(pi + eps * fi for pi, fi in zip(p, flipped))
    return _feasible_lazy(folded, flipped, seed=bad)


def sign_cells(rows, dim, base_rows=(), max_cells=None, half=False):
    """All strict sign vectors over rows, with one interior witness each.

    Cells are the connected components of {x : base . x > 0} minus the row
    hyperplanes; base_rows are fixed strict constraints (empty for a plain
    central arrangement).  Returns a list of (signs, witness) pairs where
    signs is a tuple of +-1.  Insertion order is the given row order; a cell
    splits when both sides of the new hyperplane are feasible.

    half=True (valid only with empty base_rows) pins the first sign to +,
    producing one cell per antipodal pair; the caller mirrors.
    """
    rows = [tuple(Fraction(a) for a in r) for r in rows]
    base = tuple(tuple(Fraction(a) for a in r) for r in base_rows)
    if base:
        w0 = feasible_strict(base)
        if w0 is None:
            return []
    else:
        w0 = (Fraction(0),) * dim
    cells = [((), base, w0)]
    for row in rows:
        grown = []
        for signs, folded, w in cells:
            v = dot(row, w)
            if v != 0:
                s = 1 if v > 0 else -1
                srow = _scaled(row, s)
                orow = _scaled(row, -s)
                grown.append((signs + (s,), folded + (srow,), w))
                pt = _opposite(folded, orow, w)
                if pt is not None:
                    grown.append((signs + (-s,), folded + (orow,), pt))
            else:
                # witness sits on the new hyperplane; probe both sides
                sides = (1,) if half and not signs else (1, -1)
                for s in sides:
                    srow = _scaled(row, s)
                    pt = _feasible_lazy(folded, srow)
                    if pt is not None:
                        grown.append((signs + (s,), folded + (srow,), pt))
        if max_cells is not None and len(grown) > max_cells:
            raise TooLarge("cell count exceeds the configured limit",
                           count=len(grown), limit=max_cells)
        cells = grown
    return [(signs, w) for signs, _, w in cells]


class Chamber:
    """One open cone: its sign vector, an interior point, and its class id."""

    __slots__ = ("signs", "witness", "class_id")

    def __init__(self, signs, witness, class_id=None):
        self.signs = signs
        self.witness = tuple(Fraction(x) for x in witness)
        self.class_id = class_id

    def __eq__(self, other):
        return (isinstance(other, Chamber) and self.signs == other.signs
                and self.witness == other.witness)

    def __repr__(self):
        return "Chamber({!r}, class={})".format(self.signs, self.class_id)


class ChamberCatalog:
    """All chambers of one arrangement, sorted by sign vector.

    Antipodal chambers share a class id; the canonical representative of a
    class is the member whose first sign is +.  Ids follow the sorted order
    of the representatives, a convention fixed here for reproducibility.
    """

    def __init__(self, da, chambers):
        self.da = da
        self.chambers = tuple(sorted(chambers, key=lambda c: c.signs))
        self._by_signs = {c.signs: c for c in self.chambers}
        if len(self._by_signs) != len(self.chambers):
            raise UnpairedChamber("duplicate sign vectors in catalog")

    def __len__(self):
        return len(self.chambers)

    def __iter__(self):
        return iter(self.chambers)

    def __getitem__(self, k):
        return self.chambers[k]

    def find(self, signs):
        return self._by_signs.get(signs)

    @property
    def class_count(self):
        ids = {c.class_id for c in self.chambers}
        ids.discard(None)
        return len(ids)


def _quotient(normals):
    r = rank(normals)
    cols = lex_independent_columns(normals, r)
    reduced = [tuple(Fraction(row[j]) for j in cols) for row in normals]
    return cols, reduced


def enumerate_chambers(da, max_chambers=DEFAULT_MAX_CHAMBERS):
    """Complete chamber catalog of a discriminantal arrangement.

    Works in the quotient modulo the common intersection subspace, lifts each
    witness back to n-space, and assigns antipodal class ids.  Central
    symmetry halves the work: only cells with first sign + are enumerated
    and each is mirrored through the origin.  Raises TooLarge when the cell
    count passes max_chambers mid-enumeration.
    """
    cols, reduced = _quotient(da.normals)
    cells = sign_cells(reduced, len(cols),
                       max_cells=(max_chambers + 1) // 2, half=True)
    if 2 * len(cells) > max_chambers:
        raise TooLarge("chamber count exceeds the configured limit",
                       count=2 * len(cells), limit=max_chambers)
    chambers = []
    for signs, y in cells:
        witness = [Fraction(0)] * da.n
        for t, c in enumerate(cols):
            witness[c] = y[t]
        text = "".join("+" if s > 0 else "-" for s in signs)
        chambers.append(Chamber(text, witness))
        chambers.append(Chamber(opposite_signs(text),
                                [-x for x in witness]))
    catalog = ChamberCatalog(da, chambers)
    for k, (plus, minus) in enumerate(antipodal_classes(catalog)):
        plus.class_id = k
        minus.class_id = k
    return catalog


def antipodal_classes(catalog):
    """Pair every chamber with its antipode.

    Returns [(rep, mate), ...] sorted by representative sign vector, where
    the representative is the member starting with +.  A missing antipode is
    an upstream enumeration bug and raises UnpairedChamber.
    """
    pairs = []
    for c in catalog:
        if not c.signs.startswith("+"):
            continue
        mate = catalog.find(opposite_signs(c.signs))
        if mate is None:
            raise UnpairedChamber("chamber without antipode", signs=c.signs)
        pairs.append((c, mate))
    if 2 * len(pairs) != len(catalog):
        raise UnpairedChamber("odd catalog", count=len(catalog))
    return pairs


class Classified:
    """Interior classification result: a sign vector and its class id."""

    __slots__ = ("signs", "class_id")

    def __init__(self, signs, class_id):
        self.signs = signs
        self.class_id = class_id

    def __repr__(self):
        return "Classified({!r}, class={})".format(self.signs, self.class_id)


class OnWall:
    """Degenerate classification result: b lies on these walls.

    A legitimate answer for boundary points, not an error; subsets lists
    every (m+1)-subset whose functional vanishes at b.
    """

    __slots__ = ("subsets",)

    def __init__(self, subsets):
        self.subsets = tuple(subsets)

    def __repr__(self):
        return "OnWall({})".format(list(self.subsets))


def classify_b(da, b, catalog=None):
    """Locate a constant vector b relative to the arrangement.

    Evaluates all C(n, m+1) functionals at b exactly.  Any zero yields an
    OnWall result naming the vanishing subsets; otherwise returns Classified
    with the sign vector and, when a catalog is supplied, its class id.
    """
    if len(b) != da.n:
        raise LengthMismatch("b must have one entry per hyperplane",
                             expected=da.n, got=len(b))
    bq = tuple(Fraction(x) for x in b)
    vals = [dot(normal, bq) for normal in da.normals]
    walls = [s for s, v in zip(da.subsets, vals) if v == 0]
    if walls:
        return OnWall(walls)
    signs = "".join("+" if v > 0 else "-" for v in vals)
    class_id = None
    if catalog is not None:
        hit = catalog.find(signs)
        if hit is None:
            raise NotInCatalog("sign vector missing from catalog",
                               signs=signs)
        class_id = hit.class_id
    return Classified(signs, class_id)


def _wall_is_facet(reduced, signs, i):
    # the shared face on hyperplane i has full facet dimension iff some
    # point of that hyperplane satisfies every other constraint strictly
    basis = nullspace_basis([reduced[i]])
    folded = []
    for j, row in enumerate(reduced):
        if j == i:
            continue
        s = 1 if signs[j] == "+" else -1
        folded.append(tuple(s * dot(row, bv) for bv in basis))
    if not folded:
        return True
    if not basis:
        return False
    return feasible_strict(tuple(folded)) is not None


def shared_wall(da, signs_a, signs_b):
    """Index of the single separating hyperplane, or None.

    Two chambers share a facet iff their sign vectors differ in exactly one
    coordinate and that coordinate's hyperplane supports a common facet.
    """
    if len(signs_a) != len(signs_b):
        return None
    diff = [i for i, (x, y) in enumerate(zip(signs_a, signs_b)) if x != y]
    if len(diff) != 1:
        return None
    _, reduced = _quotient(da.normals)
    return diff[0] if _wall_is_facet(reduced, signs_a, diff[0]) else None


def adjacency(catalog):
    """Facet-adjacency graph over the catalog's chambers.

    Maps each sign vector to the sorted tuple of neighboring sign vectors.
    Candidate pairs differ in one coordinate; each is kept only when the
    separating wall really is a shared facet.
    """
    _, reduced = _quotient(catalog.da.normals)
    out = {c.signs: [] for c in catalog}
    for c in catalog:
        for i, ch in enumerate(c.signs):
            if ch != "+":
                continue  # visit each unordered pair from its + side
            flipped = c.signs[:i] + "-" + c.signs[i + 1:]
            mate = catalog.find(flipped)
            if mate is None:
                continue
            if _wall_is_facet(reduced, c.signs, i):
                out[c.signs].append(flipped)
                out[flipped].append(c.signs)
    return {k: tuple(sorted(v)) for k, v in out.items()}


def catalog_to_dict(catalog):
    """JSON-ready form of a catalog; witnesses as exact rational strings."""
    return {
        "n": catalog.da.n,
        "m": catalog.da.m,
        "count": len(catalog),
        "classes": catalog.class_count,
        "chambers": [{"signs": c.signs,
                      "witness": [rational_str(x) for x in c.witness],
                      "class": c.class_id}
                     for c in catalog],
    }


def catalog_from_dict(da, data):
    from .exact_linalg import rational
    if data["n"] != da.n or data["m"] != da.m:
        raise NotInCatalog("catalog shape does not match arrangement",
                           n=data["n"], m=data["m"])
    chambers = [Chamber(e["signs"], [rational(x) for x in e["witness"]],
                        e["class"]) for e in data["chambers"]]
    return ChamberCatalog(da, chambers)


def verify_catalog(da, catalog):
    """Independent re-check of a catalog against its arrangement.

    Confirms witness signs by re-evaluation, antipodal pairing and class-id
    consistency, and the chamber count against the Zaslavsky count of the
    poset characteristic polynomial.  Returns a report dict; the "ok" key is
    the conjunction of all checks.
    """
    from .charpoly import iso_class_count, poset_charpoly, zaslavsky_regions
    witnesses_ok = True
    for c in catalog:
        got = classify_b(da, c.witness)
        if not isinstance(got, Classified) or got.signs != c.signs:
            witnesses_ok = False
            break
    pairing_ok = True
    try:
        for k, (plus, minus) in enumerate(antipodal_classes(catalog)):
            if plus.class_id != minus.class_id or plus.class_id != k:
                pairing_ok = False
                break
    except UnpairedChamber:
        pairing_ok = False
    chi = poset_charpoly(da)
    expected = zaslavsky_regions(chi)
    report = {
        "count": len(catalog),
        "zaslavsky": expected,
        "count_matches": len(catalog) == expected,
        "classes": catalog.class_count,
        "class_count_matches": catalog.class_count == iso_class_count(chi),
        "witnesses_ok": witnesses_ok,
        "pairing_ok": pairing_ok,
    }
    report["ok"] = (report["count_matches"] and report["class_count_matches"]
                    and witnesses_ok and pairing_ok)
    return report
