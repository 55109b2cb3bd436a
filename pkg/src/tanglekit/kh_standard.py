"""Standard (unsheared) Khovanov homology, implemented independently.

This module rebuilds the cube in the textbook grading so the sheared
theory has something honest to be checked against: homological degree

    h = |delta| - n_minus,
    q = (#unit) - (#X) + |delta| + n_plus - 2 n_minus,

with the Frobenius algebra on symbols {unit, X}:

    m(unit, unit) = unit   m(unit, X) = X    m(X, X) = 0
    Delta(unit) = unit (x) X + X (x) unit    Delta(X) = X (x) X

and the same crossing-ordered sign rule.  Here n_minus counts crossings of
types 2 and 3, n_plus those of types 1 and 4.  Against the sheared theory
the label v^- plays unit and v^+ plays X, but nothing in this module
depends on that identification.
"""

from __future__ import annotations

from itertools import product

from .diagrams import TangleDiagram, DiagramError, resolve, circle_points
from .linalg import rank_int

UNIT, X = "1", "X"


def _m(a, b):
    if a == UNIT and b == UNIT:
        return [(UNIT, 1)]
    if a == UNIT or b == UNIT:
        return [(X, 1)]
    return []


def _delta(a):
    if a == UNIT:
        return [((UNIT, X), 1), ((X, UNIT), 1)]
    return [((X, X), 1)]


def _signature(diagram: TangleDiagram):
    n_plus = n_minus = 0
    for _, _, ctype in diagram.crossings():
        if ctype in (1, 4):
            n_plus += 1
        else:
            n_minus += 1
    return n_plus, n_minus


def h_kh_standard(diagram: TangleDiagram) -> dict:
    """Bigraded dimensions of standard Khovanov homology over the rationals."""
    if not diagram.is_link():
        raise DiagramError("Khovanov homology needs a (0,0) diagram")
    ncross = len(diagram.crossings())
    n_plus, n_minus = _signature(diagram)

    circles = {}
    for mask in range(1 << ncross):
        chosen = {k for k in range(ncross) if mask >> k & 1}
        _, pts = circle_points(resolve(diagram, chosen))
        circles[mask] = pts

    states = {}
    index = {}
    for mask in range(1 << ncross):
        size = bin(mask).count("1")
        h = size - n_minus
        ncirc = len(circles[mask])
        for labels in product((UNIT, X), repeat=ncirc):
            deg = sum(1 if x == UNIT else -1 for x in labels)
            q = deg + size + n_plus - 2 * n_minus
            block = states.setdefault((h, q), [])
            index[(mask, labels)] = ((h, q), len(block))
            block.append((mask, labels))

    diff = {}
    for mask in range(1 << ncross):
        pts_a = circles[mask]
        for s in range(ncross):
            if mask >> s & 1:
                continue
            mask_b = mask | (1 << s)
            pts_b = circles[mask_b]
            sign = -1 if bin(mask & ((1 << s) - 1)).count("1") % 2 else 1

            by_set = {ptset: cid for cid, ptset in pts_b.items()}
            match, taken = {}, set()
            unmatched_a = []
            for cid, ptset in pts_a.items():
                other = by_set.get(ptset)
                if other is None:
                    unmatched_a.append(cid)
                else:
                    match[cid] = other
                    taken.add(other)
            unmatched_b = [c for c in pts_b if c not in taken]

            for labels in product((UNIT, X), repeat=len(pts_a)):
                src_bd, src_col = index[(mask, labels)]
                if len(unmatched_a) == 2:
                    a1, a2 = unmatched_a
                    images = [(dict({unmatched_b[0]: lab}), c)
                              for lab, c in _m(labels[a1], labels[a2])]
                else:
                    b1, b2 = unmatched_b
                    images = [(dict({b1: la, b2: lb}), c)
                              for (la, lb), c in _delta(labels[unmatched_a[0]])]
                for special, coeff in images:
                    out = [None] * len(pts_b)
                    for ca, cb in match.items():
                        out[cb] = labels[ca]
                    for cb, lab in special.items():
                        out[cb] = lab
                    tgt_bd, tgt_row = index[(mask_b, tuple(out))]
                    if tgt_bd != (src_bd[0] + 1, src_bd[1]):
                        raise AssertionError("standard differential not (1,0)-graded")
                    block = diff.setdefault(src_bd, {})
                    key = (tgt_row, src_col)
                    block[key] = block.get(key, 0) + sign * coeff

    ranks = {}
    for bd, cols in states.items():
        h, q = bd
        rows = states.get((h + 1, q), [])
        mat = [[0] * len(cols) for _ in rows]
        for (r, c), v in diff.get(bd, {}).items():
            mat[r][c] = v
        ranks[bd] = rank_int(mat)

    dims = {}
    for (h, q), block in states.items():
        d = len(block) - ranks.get((h, q), 0) - ranks.get((h - 1, q), 0)
        if d:
            dims[(h, q)] = d
    return dims
