"""Quantum sl(2) tangle invariants, three ways.

A library, HTTP service and CLI computing the matrix-valued tangle
functor, its Grothendieck-group shadow and the bigraded link homology
built from the sheared cube of resolutions, together with machine checks
of every consistency statement relating them.
"""

from .diagrams import (TangleDiagram, braid_closure, cap, compose, cross,
                       cup, mirror, parse_tangle, serialize_tangle)
from .khovanov import euler_characteristic, h_alg, reduced
from .kh_standard import h_kh_standard
from .laurent import LaurentPoly, format_laurent, parse_laurent
from .rt import LaurentMatrix, jones, psi

__all__ = [
    "TangleDiagram", "braid_closure", "cap", "compose", "cross", "cup",
    "mirror", "parse_tangle", "serialize_tangle",
    "euler_characteristic", "h_alg", "reduced", "h_kh_standard",
    "LaurentPoly", "format_laurent", "parse_laurent",
    "LaurentMatrix", "jones", "psi",
]

__version__ = "0.1.0"
