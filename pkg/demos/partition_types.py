"""
Partition types of the real line
================================

A partition of the line into intervals is summarised by four counts:
singletons, compact intervals, half-open intervals and open intervals.
Not every quadruple occurs.  This walk-through builds partitions, reads off
their types, and shows which quadruples are reachable.
"""

import itertools

from refline import (
    ALEPH0,
    CONTINUUM,
    Arith,
    Interval,
    PartitionDesc,
    Single,
    TypeQuadruple,
    apply_83,
    apply_84,
    compute_type,
    fin,
    is_admissible,
    synthesize,
)

# The plain line is one open interval.
line = PartitionDesc([Single(Interval.real_line())])
print("the line itself:", compute_type(line))

# Cut the line at 0 and 1, keeping a compact middle piece.
cut = PartitionDesc([Single(Interval.parse("]-inf,0[")), Single(Interval.parse("[0,1]")),
                     Single(Interval.parse("]1,+inf["))])
print("cut at [0,1]:   ", compute_type(cut))

# Uncovered points become singleton members, so a gap of positive length
# contributes continuum many of them.
open_cut = PartitionDesc([Single(Interval.parse("]-inf,0[")), Single(Interval.parse("]0,+inf["))])
print("missing point 0:", compute_type(open_cut))
gappy = PartitionDesc([Arith(Interval.closed(0, 1), 3, ALEPH0)])
print("spaced compacts:", compute_type(gappy))

# Splitting every member at its endpoints trades compacts and half-opens
# for singletons and opens.
print("after splitting:", compute_type(apply_84(cut)))

# Extra half-open members can be carved off an unbounded open member.
print("carve 3 half-opens:", compute_type(apply_83(line, fin(3), fin(1))))

# Which quadruples are types at all?  Enumerate a small grid.
small = [fin(0), fin(1), fin(2), fin(3), ALEPH0]
grid = [TypeQuadruple(*t) for t in itertools.product(small + [CONTINUUM], small, small, small)]
ok = [t for t in grid if is_admissible(t)]
print(f"\n{len(ok)} of {len(grid)} grid quadruples are types")
print("examples that are not:", ", ".join(str(t) for t in grid if not is_admissible(t))[:120], "...")

# Every admissible quadruple comes with a witness partition.
t = TypeQuadruple.parse("(2,1,aleph0,1)")
witness = synthesize(t)
print(f"\na partition of type {t}:")
print(witness.to_json())
assert compute_type(witness) == t
