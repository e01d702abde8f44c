"""
Which refinements embed in which
================================

Each type names one topology on the line up to homeomorphism.  Two facts
settle embeddability: separable spaces sit inside every non-discrete one,
and anything sits inside a non-separable, non-discrete one.  The only
incomparable pairs are the discrete space against a separable one.
"""

import itertools

from refline import (
    ALEPH0,
    CONTINUUM,
    TypeQuadruple,
    compare,
    embeddable,
    fin,
    is_admissible,
)
from refline.classify import is_discrete, is_separable

T = TypeQuadruple.parse

# A few comparisons, printed the way the command line prints them.
for a, b in [("(0,0,0,1)", "(aleph0,1,0,aleph0)"),
             ("(continuum,0,0,0)", "(0,0,0,1)"),
             ("(continuum,1,0,0)", "(continuum,0,0,0)")]:
    print(f"{a:>22} vs {b:<22} {compare(T(a), T(b))}")

# Over the whole grid, count the pairs that embed in neither direction.
small = [fin(0), fin(1), fin(2), fin(3), ALEPH0]
types = [t for t in (TypeQuadruple(*q) for q in itertools.product(small + [CONTINUUM], small, small, small))
         if is_admissible(t)]
stuck = [(a, b) for a, b in itertools.combinations(types, 2) if not embeddable(a, b) and not embeddable(b, a)]
print(f"\n{len(types)} types, {len(stuck)} incomparable pairs")

# Every such pair is the discrete space against a separable one.
kinds = {("discrete" if is_discrete(x) else "separable" if is_separable(x) else "other") for pair in stuck for x in pair}
print("the pairs involve only:", sorted(kinds))
