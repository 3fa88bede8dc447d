"""Concurrency combinatorics: closures, orders, and when geometry obeys.

A collection of (m+1)-subsets records which groups of hyperplanes are
forced concurrent.  Some dependencies force others: the closure operator
adds them until the family is stable.  A normal system is concurrency free
when its wall arrangement realizes the generic combinatorics; the gallery
has systems on both sides of that line.
"""

from arrcensus.charpoly import (combinatorial_charpoly, iso_class_count,
                                zaslavsky_regions)
from arrcensus.concurrency import (SubsetCollection, base_collection,
                                   combinatorial_rank, concurrency_closure,
                                   concurrency_orders,
                                   enumerate_closed_collections,
                                   is_concurrency_free)
from arrcensus import gallery

# Three triples on six lines, pairwise sharing one line: already stable.
d1 = SubsetCollection(6, 2, [(1, 2, 6), (1, 3, 5), (2, 3, 4)])
print("d1 =", d1)
print("closure(d1) == d1:", concurrency_closure(d1) == d1)
print("maximal concurrency sets:", concurrency_orders(d1))

# One more triple makes the dependencies overdetermined: the closure
# explodes to every triple, i.e. all six lines through one point.
d2 = SubsetCollection(6, 2, [(1, 2, 6), (1, 3, 5), (2, 3, 4), (4, 5, 6)])
closed = concurrency_closure(d2)
print("\nd2 = d1 + {456}")
print("closure(d2) has %d of %d triples" % (len(closed), 20))
print("maximal concurrency sets:", concurrency_orders(closed))
print("canonical generators:", base_collection(closed))
print("combinatorial rank of d2:", combinatorial_rank(d2))

# All closed collections for four lines: four single triples plus the
# everything-concurrent family.
print("\nclosed collections on 4 lines:")
for col in enumerate_closed_collections(4, 2):
    print("  ", col)

# Freeness verdicts for the six-line gallery.  A failed verdict carries a
# witness family: combinatorially independent conditions whose wall
# normals are nonetheless dependent.
print("\nfreeness:")
for name in ("six_lines_free", "six_lines_perpendicular_pairs",
             "six_lines_mixed_slopes", "six_planes_chain"):
    v = is_concurrency_free(getattr(gallery, name)())
    tag = "free" if v.free else "NOT free, witness %r" % (v.witness,)
    print("  %-30s %s" % (name, tag))

# The concurrency-free census table, computed without any matrix.
print("\nn  m  chi                                  cones  classes")
for n in range(3, 7):
    chi = combinatorial_charpoly(n, 2)
    print("%d  2  %-36s %5d  %7d" % (n, chi.as_str(),
                                     zaslavsky_regions(chi),
                                     iso_class_count(chi)))
