"""Fraction-free exact linear algebra over the integers.

Ranks of integer matrices equal their ranks over the rationals, so
homology dimensions computed from these ranks are rational Betti numbers.
Bareiss elimination keeps every intermediate value an exact integer.
"""

from __future__ import annotations


def rank_int(rows) -> int:
    """Rank (over Q) of an integer matrix given as a list of row lists."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    col = 0
    while rank < len(m) and col < ncols:
        piv = None
        for r in range(rank, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        # Bareiss step: the exact division by the previous pivot applies to
        # every remaining row, including those already zero in this column
        for r in range(rank + 1, len(m)):
            v = m[r][col]
            for c in range(col, ncols):
                m[r][c] = (m[r][c] * p - v * m[rank][c]) // prev
        prev = p
        rank += 1
        col += 1
    return rank


def kernel_basis_int(rows, ncols) -> list:
    """Basis of the rational kernel of an integer matrix, as integer vectors.

    Gauss-Jordan over exact fractions realized with integer row operations;
    the returned vectors are scaled to integers.
    """
    from fractions import Fraction

    m = [[Fraction(v) for v in r] for r in rows]
    nrows = len(m)
    pivots = {}
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if m[rr][c]:
                piv = rr
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for rr in range(nrows):
            if rr != r and m[rr][c]:
                f = m[rr][c]
                m[rr] = [a - f * b for a, b in zip(m[rr], m[r])]
        pivots[c] = r
        r += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for c, rr in pivots.items():
            vec[c] = -m[rr][fc]
        den = 1
        for x in vec:
            den = den * x.denominator // _gcd(den, x.denominator)
        basis.append([int(x * den) for x in vec])
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1
