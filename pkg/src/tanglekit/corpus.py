"""A fixed corpus of link diagrams used by the verification suites.

Several diagrams per link where useful, plus pairs of diagrams related by
a single local move, so invariance can be tested move by move.
"""

from __future__ import annotations

from .diagrams import TangleDiagram, braid_closure, cap, cross, cup

UNKNOT = TangleDiagram(0, 0, (cap(1), cup(1)))

#: the unknot with one kink, both crossing types of the kinked strand
UNKNOT_KINK_T1 = TangleDiagram(0, 0, (cap(1), cap(1), cross(2, 1), cup(1), cup(1)))
UNKNOT_KINK_T2 = TangleDiagram(0, 0, (cap(1), cap(1), cross(2, 2), cup(1), cup(1)))

#: two kinks of opposite type
UNKNOT_TWO_KINKS = TangleDiagram(0, 0, (
    cap(1), cap(1), cross(2, 1), cup(1), cap(1), cross(2, 2), cup(1), cup(1)))

#: a zigzag strand (Reidemeister 0 pair for the plain circle)
UNKNOT_ZIGZAG = TangleDiagram(0, 0, (cap(1), cap(2), cup(1), cup(1)))

UNLINK2 = braid_closure(2, [])
UNLINK3 = braid_closure(3, [])

HOPF = braid_closure(2, [1, 1])
HOPF_MIRROR = braid_closure(2, [-1, -1])

TREFOIL = braid_closure(2, [1, 1, 1])
TREFOIL_MIRROR = braid_closure(2, [-1, -1, -1])

#: trefoil with an extra Reidemeister-2 pair in the braid
TREFOIL_R2 = braid_closure(2, [1, 1, 1, 1, -1])

#: three-strand trefoil presentations related by a Reidemeister-3 move
TREFOIL_BRAID3_A = braid_closure(3, [1, 2, 1, 2])
TREFOIL_BRAID3_B = braid_closure(3, [2, 1, 2, 2])

FIGURE_EIGHT = braid_closure(3, [1, -2, 1, -2])

GRANNY = braid_closure(3, [1, 1, 1, 2, 2, 2])
SQUARE = braid_closure(3, [1, 1, 1, -2, -2, -2])

#: pitchfork pairs: a crossing slid across a cap, for both stated identities
PITCHFORK_A1 = TangleDiagram(0, 0, (cap(1), cap(2), cross(1, 1), cup(2), cup(1)))
PITCHFORK_A2 = TangleDiagram(0, 0, (cap(1), cap(1), cross(2, 4), cup(2), cup(1)))
PITCHFORK_B1 = TangleDiagram(0, 0, (cap(1), cap(2), cross(1, 2), cup(2), cup(1)))
PITCHFORK_B2 = TangleDiagram(0, 0, (cap(1), cap(1), cross(2, 3), cup(2), cup(1)))

#: the full acceptance corpus of links (name -> diagram)
LINKS = {
    "unknot": UNKNOT,
    "unknot-kink-t1": UNKNOT_KINK_T1,
    "unknot-kink-t2": UNKNOT_KINK_T2,
    "unknot-two-kinks": UNKNOT_TWO_KINKS,
    "unknot-zigzag": UNKNOT_ZIGZAG,
    "unlink2": UNLINK2,
    "unlink3": UNLINK3,
    "hopf": HOPF,
    "hopf-mirror": HOPF_MIRROR,
    "trefoil": TREFOIL,
    "trefoil-mirror": TREFOIL_MIRROR,
    "figure-eight": FIGURE_EIGHT,
    "granny": GRANNY,
    "square": SQUARE,
}

#: diagram pairs related by one relation rewrite (name -> (left, right, move))
REWRITE_PAIRS = {
    "r0-zigzag": (UNKNOT, UNKNOT_ZIGZAG, "r0"),
    "r1-kink-t1": (UNKNOT, UNKNOT_KINK_T1, "r1"),
    "r1-kink-t2": (UNKNOT, UNKNOT_KINK_T2, "r1"),
    "r1-second-kink": (UNKNOT_KINK_T1, UNKNOT_TWO_KINKS, "r1"),
    "r2-trefoil": (TREFOIL, TREFOIL_R2, "r2"),
    "r3-trefoil": (TREFOIL_BRAID3_A, TREFOIL_BRAID3_B, "r3"),
    "pitchfork-14": (PITCHFORK_A1, PITCHFORK_A2, "pitchfork"),
    "pitchfork-23": (PITCHFORK_B1, PITCHFORK_B2, "pitchfork"),
}
