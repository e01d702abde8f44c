"""
Graphs built from sine arcs
===========================

For a sequence g over {1, 2} with infinitely many 2s, F[g] is assembled from
arcs of sin(1/((x-u)(v-x))), which oscillate wildly at both ends, joined by
points and flat segments.  The path components of the graph, read left to
right, spell a digit word that records g.
"""

from fractions import Fraction

from refline import GSeq, decode, encode, f_eval, gamma
from refline.sinegraph import (
    components,
    recover_order,
    remark_counterexample,
    sample_csv,
)

# "1 then 21 forever" is the same sequence as "12 forever"; the canonical form shows that.
g = GSeq.parse("prefix=1;tail=21")
print("g =", g, "->", g.head(10))

# A few values.  The graph is flat on [0, 1] and on each [k+1/2, k+1] with g(k) = 2.
for x in ["1/2", "5/4", "7/4", "5/2", "-3/2"]:
    print(f"F({x}) = {f_eval(g, Fraction(x)):+.6f}")

# Components around the segment [0, 1], with their numbers of noncut points.
for c in components(g, (-3, 6)):
    print(f"{c.position_index:>3}  {c.footprint!s:<10} {c.noncuts}")

# The noncut counts are the digit word; the first 2 marks [0, 1].
word = encode(g, 12)
print("\ndigit word:", word)
print("decoded   :", decode(word))

# Shuffle a centred window: adjacency restores the chain, the 2s fix the orientation.
shuffled = list(reversed(components(g, (-6, 6))))
rec = recover_order(shuffled)
print("recovered :", " ".join(map(str, rec.digits)), "anchor at", rec.anchor)

# The graph jumps exactly at the arc ends.
print("\ndiscontinuities in [-2, 4]:", [str(p) for p in gamma(g, (-2, 4))])

# Shrinking the arcs by 2^-n near 0 gives a function that is continuous at 0.
tame = remark_counterexample((-1, 1))
for x in ["3/4", "3/16", "3/256", "0"]:
    print(f"tamed F({x}) = {tame(Fraction(x)):+.3e}")

# CSV samples, for plotting elsewhere.
print("\n" + sample_csv(g, (1, 2), Fraction(1, 8)))
