"""The Grothendieck-group shadow of the tangle functor.

The width-n model is the free Z[q, q^-1] module on basis elements indexed
by bit strings delta in {0,1}^n (formal products of the classes [E_j] over
the chosen j).  Caps and cups act by explicit monomial formulas; the type-2
crossing is assembled from them through the Kauffman relation, and the
remaining crossing types are transported from the matrix functor through
the change of basis alpha.  That construction makes the square

        K_n --[T]--> K_m
         |            |
       alpha        alpha
         v            v
      V^(x)n --psi--> V^(x)m

commute by definition for types 1, 3, 4 and turns it into a real theorem
for caps, cups and type-2 crossings, which the check suites exercise.
"""

from __future__ import annotations

from .diagrams import TangleDiagram, Layer, DiagramError
from .laurent import LaurentPoly, ONE
from . import rt


class KVector:
    """Element of the free module at a given width: {delta bitmask: LaurentPoly}.

    Bit conventions match the matrix side: strand 1 is the most significant
    bit of the mask.
    """

    __slots__ = ("width", "terms")

    def __init__(self, width: int, terms=None):
        self.width = width
        self.terms = {}
        if terms:
            for k, v in dict(terms).items():
                if v:
                    self.terms[int(k)] = v

    @staticmethod
    def basis(width: int, mask: int = 0) -> "KVector":
        return KVector(width, {mask: ONE})

    def __add__(self, other: "KVector") -> "KVector":
        if self.width != other.width:
            raise ValueError("width mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            s = v if w is None else w + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return KVector(self.width, out)

    def scale(self, factor) -> "KVector":
        return KVector(self.width, {k: v * factor for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, KVector):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __repr__(self):
        return f"KVector(width={self.width}, {self.terms})"


def _bit(mask: int, width: int, j: int) -> int:
    """delta_j for 1-based strand j."""
    return (mask >> (width - j)) & 1


def cap_op(i: int, n: int, vec: KVector) -> KVector:
    """Cap creating strands i, i+1: width n-2 -> n.

    On a basis element delta the image is
    q^(i-1+2*sum_{j>=i} delta_j) (basis with [E_i]) - q^(i+1+2*sum) (basis with [E_{i+1}]),
    the old strands at positions >= i moving up by two.
    """
    if not 1 <= i <= n - 1:
        raise DiagramError(f"cap index {i} out of range at width {n}")
    if vec.width != n - 2:
        raise ValueError("input vector has wrong width")
    w = n - 2
    out = KVector(n)
    for mask, coeff in vec.terms.items():
        tail_bits = w - (i - 1)
        lo = mask & ((1 << tail_bits) - 1)
        hi = mask >> tail_bits
        exp = (i - 1) + 2 * bin(lo).count("1")
        base = ((hi << 2) << tail_bits) | lo
        with_i = base | (1 << (n - i))
        with_i1 = base | (1 << (n - i - 1))
        out = out + KVector(n, {with_i: coeff.shift(exp), with_i1: -coeff.shift(exp + 2)})
    return out


def cup_op(i: int, n: int, vec: KVector) -> KVector:
    """Cup joining strands i, i+1: width n -> n-2.

    Basis elements with delta_i = delta_{i+1} die; the mixed ones map to the
    shortened basis element with coefficient +-q^(-i-2*sum_{j>=i+2} delta_j),
    the sign - when delta_i = 1.
    """
    if not 1 <= i <= n - 1:
        raise DiagramError(f"cup index {i} out of range at width {n}")
    if vec.width != n:
        raise ValueError("input vector has wrong width")
    out = KVector(n - 2)
    for mask, coeff in vec.terms.items():
        bi = _bit(mask, n, i)
        bi1 = _bit(mask, n, i + 1)
        if bi == bi1:
            continue
        tail_bits = n - (i + 1)
        lo = mask & ((1 << tail_bits) - 1)
        hi = mask >> (tail_bits + 2)
        exp = -i - 2 * bin(lo).count("1")
        target = (hi << tail_bits) | lo
        term = coeff.shift(exp)
        if bi == 1:
            term = -term
        out = out + KVector(n - 2, {target: term})
    return out


def alpha(vec: KVector) -> dict:
    """Change of basis into the strand space: sparse vector {state: LaurentPoly}.

    Basis delta goes to q^(-sum_j j*delta_j) times the same bit string.
    """
    out = {}
    n = vec.width
    for mask, coeff in vec.terms.items():
        exp = -sum(j for j in range(1, n + 1) if _bit(mask, n, j))
        out[mask] = coeff.shift(exp)
    return out


def alpha_inv(vec: dict, width: int) -> KVector:
    terms = {}
    for mask, coeff in vec.items():
        exp = sum(j for j in range(1, width + 1) if _bit(mask, width, j))
        if coeff:
            terms[mask] = coeff.shift(exp)
    return KVector(width, terms)


def crossing_op(i: int, n: int, ctype: int, vec: KVector) -> KVector:
    """Crossing of strands i, i+1 at width n.

    Type 2 comes from the Kauffman relation
        -q^-1 (q^-1 cap_i cup_i + id);
    types 1, 3, 4 are the matrix-side blocks conjugated by alpha.
    """
    if not 1 <= i <= n - 1:
        raise DiagramError(f"crossing index {i} out of range at width {n}")
    if vec.width != n:
        raise ValueError("input vector has wrong width")
    if ctype == 2:
        turnback = cap_op(i, n, cup_op(i, n, vec))
        out = turnback.scale(LaurentPoly({-2: -1})) + vec.scale(LaurentPoly({-1: -1}))
        return out
    if ctype not in (1, 3, 4):
        raise DiagramError(f"crossing type must be 1..4, got {ctype}")
    mat = rt.psi_gen(Layer("cross", i, ctype), n)
    return alpha_inv(mat.apply(alpha(vec)), n)


def apply_layer(layer: Layer, width_in: int, vec: KVector) -> KVector:
    if layer.kind == "cap":
        return cap_op(layer.pos, width_in + 2, vec)
    if layer.kind == "cup":
        return cup_op(layer.pos, width_in, vec)
    return crossing_op(layer.pos, width_in, layer.ctype, vec)


def apply(diagram: TangleDiagram, vec: KVector) -> KVector:
    """Layer-by-layer action of a tangle on a Grothendieck-group vector."""
    if vec.width != diagram.n:
        raise ValueError(
            f"vector width {vec.width} does not match tangle source {diagram.n}")
    w = diagram.n
    for lay in diagram.layers:
        vec = apply_layer(lay, w, vec)
        w = lay.width_after(w)
    return vec


def intertwining_failures(max_width: int = 5):
    """Check alpha o (layer action) = psi(layer) o alpha on every basis vector.

    Covers every cap, cup and crossing generator whose widths stay within
    the bound.  For type-2 crossings this tests a real theorem: the layer
    action is built from cap/cup operators through the Kauffman relation,
    not transported from the matrix side.  Returns (checked, failures).
    """
    checked = 0
    failures = []
    layers = []
    for w in range(0, max_width + 1):
        if w + 2 <= max_width:
            layers.extend((Layer("cap", i), w) for i in range(1, w + 2))
        layers.extend((Layer("cup", i), w) for i in range(1, w))
        for i in range(1, w):
            layers.extend((Layer("cross", i, t), w) for t in (1, 2, 3, 4))
    for layer, w in layers:
        mat = rt.psi_gen(layer, w)
        for mask in range(1 << w):
            vec = KVector.basis(w, mask)
            lhs = alpha(apply_layer(layer, w, vec))
            rhs = mat.apply(alpha(vec))
            checked += 1
            if lhs != rhs:
                failures.append(f"{layer.kind}({layer.pos},{layer.ctype})@{w} mask={mask}")
    return checked, failures


def crossing_matrix(i: int, n: int, ctype: int) -> rt.LaurentMatrix:
    """The crossing operator written out in the delta basis."""
    cols = {}
    for mask in range(1 << n):
        image = crossing_op(i, n, ctype, KVector.basis(n, mask))
        for out_mask, coeff in image.terms.items():
            cols[(out_mask, mask)] = coeff
    return rt.LaurentMatrix(1 << n, 1 << n, cols)


def shift_scalar_report(n: int = 2, i: int = 1) -> dict:
    """Compare conjugated crossing operators against the kernel-shift scalars.

    The crossing-kernel weights predict [T1] = [T2]^-1, [T3] = q^-3 [T1] and
    [T4] = q^3 [T2].  The braiding-with-ribbon normalization instead puts
    -q^3 in the last slot; this package adopts the kernel-shift sign (it is
    the one every relation family holds under), and the report records both
    readings so the tension stays visible.
    """
    t = {l: crossing_matrix(i, n, l) for l in (1, 2, 3, 4)}
    report = {}
    prod = t[2] @ t[1]
    report["1"] = "agree" if prod == rt.LaurentMatrix.identity(1 << n) else "mismatch"

    def classify(mat, ref, scalar):
        if mat == ref.scale(scalar):
            return "agree"
        if mat == ref.scale(-scalar):
            return "sign-mismatch"
        return "mismatch"

    report["3"] = classify(t[3], t[1], LaurentPoly({-3: 1}))
    report["4"] = classify(t[4], t[2], LaurentPoly({3: 1}))
    report["note"] = ("type-4 scalar follows the kernel shifts (+q^3); the "
                      "ribbon-normalized braiding table would flip its sign")
    return report
