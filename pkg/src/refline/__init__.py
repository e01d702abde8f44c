"""Locally connected refinements of the real line and the sine-arc graphs F[g].

Submodules:

* :mod:`refline.cardinal` -- counts in {0, 1, ...} u {aleph0, continuum}
* :mod:`refline.interval` -- exact rational intervals and their kinds
* :mod:`refline.partition` -- interval partitions, types, transformations, synthesis
* :mod:`refline.classify` -- admissibility, homeomorphism and embeddability of types
* :mod:`refline.sinegraph` -- F[g]: pieces, components, digit words, discontinuities
* :mod:`refline.cli` -- the ``refline`` command
"""

from .cardinal import ALEPH0, CONTINUUM, Cardinal, fin
from .classify import compare, embeddable, homeomorphic, in_q1, in_q2, is_admissible
from .interval import Interval, IntervalKind
from .partition import (
    Arith,
    HarmonicFill,
    PartitionDesc,
    Side,
    Single,
    TypeQuadruple,
    apply_83,
    apply_84,
    complement_components,
    compute_type,
    synthesize,
    validate,
)
from .sinegraph import GSeq, decode, encode, f_eval, gamma

__version__ = "0.1.0"

__all__ = [
    "ALEPH0",
    "CONTINUUM",
    "Arith",
    "Cardinal",
    "GSeq",
    "HarmonicFill",
    "Interval",
    "IntervalKind",
    "PartitionDesc",
    "Side",
    "Single",
    "TypeQuadruple",
    "apply_83",
    "apply_84",
    "compare",
    "complement_components",
    "compute_type",
    "decode",
    "embeddable",
    "encode",
    "f_eval",
    "fin",
    "gamma",
    "homeomorphic",
    "in_q1",
    "in_q2",
    "is_admissible",
    "synthesize",
    "validate",
]
