"""Combinatorial tangle diagrams built from cap / cup / crossing layers.

A diagram is an ordered list of generator layers read bottom to top: the
first layer acts on the source width n, the last produces the target width
m.  Composition in formulas follows function order (``a o b`` applies b
first), so a composite written ``f o t o g`` becomes the layer list
``[g, t, f]``.

Crossings carry a formal type 1..4.  Types {1,3} and {2,4} form the two
unoriented crossing classes; which oriented picture belongs to which type
is not modelled, callers choose types explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DiagramError(ValueError):
    """Raised for width-sequence violations and malformed layers."""


@dataclass(frozen=True)
class Layer:
    kind: str          # "cap" | "cup" | "cross"
    pos: int           # 1-based strand position
    ctype: int = 0     # crossing type 1..4, 0 for cap/cup

    def __post_init__(self):
        if self.kind not in ("cap", "cup", "cross"):
            raise DiagramError(f"unknown layer kind {self.kind!r}")
        if self.kind == "cross" and self.ctype not in (1, 2, 3, 4):
            raise DiagramError(f"crossing type must be 1..4, got {self.ctype}")
        if self.kind != "cross" and self.ctype:
            raise DiagramError("cap/cup layers carry no crossing type")
        if self.pos < 1:
            raise DiagramError(f"position must be >= 1, got {self.pos}")

    def width_after(self, w: int) -> int:
        """Output width when applied at input width w; validates the position."""
        if self.kind == "cap":
            if not 1 <= self.pos <= w + 1:
                raise DiagramError(
                    f"cap {self.pos} invalid at width {w} (need 1 <= pos <= {w + 1})")
            return w + 2
        if self.kind == "cup":
            if w < 2:
                raise DiagramError(f"cup needs width >= 2, have {w}")
            if not 1 <= self.pos <= w - 1:
                raise DiagramError(
                    f"cup {self.pos} invalid at width {w} (need 1 <= pos <= {w - 1})")
            return w - 2
        if w < 2:
            raise DiagramError(f"crossing needs width >= 2, have {w}")
        if not 1 <= self.pos <= w - 1:
            raise DiagramError(
                f"crossing {self.pos} invalid at width {w} (need 1 <= pos <= {w - 1})")
        return w


def cap(i: int) -> Layer:
    return Layer("cap", i)


def cup(i: int) -> Layer:
    return Layer("cup", i)


def cross(i: int, ctype: int) -> Layer:
    return Layer("cross", i, ctype)


@dataclass(frozen=True)
class TangleDiagram:
    """An (n, m) tangle diagram: source width n, target width m, layer list."""

    n: int
    m: int
    layers: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        validate(self)

    def widths(self) -> list:
        """Width at each of the len(layers)+1 horizontal levels."""
        w = [self.n]
        for lay in self.layers:
            w.append(lay.width_after(w[-1]))
        return w

    def crossings(self) -> list:
        """(layer_index, pos, ctype) for each crossing, in layer (height) order."""
        return [(t, lay.pos, lay.ctype)
                for t, lay in enumerate(self.layers) if lay.kind == "cross"]

    def cap_layers(self) -> list:
        """(layer_index, pos) of each cap layer, in height order."""
        return [(t, lay.pos) for t, lay in enumerate(self.layers) if lay.kind == "cap"]

    def is_link(self) -> bool:
        return self.n == 0 and self.m == 0


def validate(diagram: TangleDiagram) -> None:
    """Check the width sequence; raises DiagramError naming the first bad layer."""
    if diagram.n < 0 or diagram.m < 0:
        raise DiagramError("widths must be nonnegative")
    w = diagram.n
    for t, lay in enumerate(diagram.layers):
        try:
            w = lay.width_after(w)
        except DiagramError as exc:
            raise DiagramError(f"layer {t + 1}: {exc}") from None
    if w != diagram.m:
        raise DiagramError(f"final width {w} does not match declared target {diagram.m}")


def identity(n: int) -> TangleDiagram:
    return TangleDiagram(n, n, ())


def compose(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    """Stack ``second`` on top of ``first``; requires first.m == second.n."""
    if first.m != second.n:
        raise DiagramError(
            f"cannot compose: first ends at width {first.m}, second starts at {second.n}")
    return TangleDiagram(first.n, second.m, first.layers + second.layers)


def mirror(diagram: TangleDiagram) -> TangleDiagram:
    """Mirror image: reverse layer order, swap caps with cups, types 1<->2, 3<->4."""
    swap = {1: 2, 2: 1, 3: 4, 4: 3}
    out = []
    for lay in reversed(diagram.layers):
        if lay.kind == "cap":
            out.append(cup(lay.pos))
        elif lay.kind == "cup":
            out.append(cap(lay.pos))
        else:
            out.append(cross(lay.pos, swap[lay.ctype]))
    return TangleDiagram(diagram.m, diagram.n, tuple(out))


def braid_closure(strands: int, word) -> TangleDiagram:
    """Planar closure of a braid word on the given number of strands.

    Caps are nested left to right, the braid acts on the right-hand legs
    (braid strand j sits at slot strands + j), and matching cups close up.
    Positive letter k becomes a type-2 crossing at braid position k,
    negative letter -k a type-1 crossing.
    """
    if strands < 1:
        raise DiagramError("braid needs at least one strand")
    layers = [cap(k) for k in range(1, strands + 1)]
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise DiagramError(f"braid letter {letter} out of range for {strands} strands")
        ctype = 2 if letter > 0 else 1
        layers.append(cross(strands + abs(letter), ctype))
    layers.extend(cup(k) for k in range(strands, 0, -1))
    return TangleDiagram(0, 0, tuple(layers))


# -- unoriented classes and smoothings ---------------------------------------

#: Crossing types grouped by their unoriented class.
CLASS_A = (1, 3)
CLASS_B = (2, 4)


def unoriented_class(ctype: int) -> str:
    """'A' for types {1,3}, 'B' for types {2,4}."""
    if ctype in CLASS_A:
        return "A"
    if ctype in CLASS_B:
        return "B"
    raise DiagramError(f"crossing type must be 1..4, got {ctype}")


def smoothing_is_turnback(ctype: int, resolved_to_one: bool) -> bool:
    """Whether the chosen smoothing of a crossing is the horizontal turnback.

    Class A: the 0-smoothing keeps the strands parallel, the 1-smoothing is
    the turnback.  Class B is the opposite.
    """
    if unoriented_class(ctype) == "A":
        return resolved_to_one
    return not resolved_to_one


@dataclass(frozen=True)
class ResolvedDiagram:
    """A crossingless diagram obtained by smoothing every crossing.

    ``anchors[level]`` is the tuple of original-diagram levels this resolved
    level stands for: parallel smoothings collapse levels (several originals
    on one resolved level) while turnback smoothings insert one internal
    level with an empty tuple.  Shared anchor coordinates let circles of
    different resolutions of the same diagram be compared point by point.
    """

    diagram: TangleDiagram
    anchors: tuple


def resolve(diagram: TangleDiagram, chosen) -> ResolvedDiagram:
    """Smooth every crossing: crossing s gets its 1-smoothing iff s in chosen.

    ``chosen`` contains 0-based crossing indices (layer order).
    """
    chosen = frozenset(chosen)
    ncross = len(diagram.crossings())
    for s in chosen:
        if not 0 <= s < ncross:
            raise DiagramError(f"resolution index {s} out of range (have {ncross} crossings)")
    layers = []
    anchors = [(0,)]
    cidx = 0
    for t, lay in enumerate(diagram.layers):
        if lay.kind != "cross":
            layers.append(lay)
            anchors.append((t + 1,))
            continue
        if smoothing_is_turnback(lay.ctype, cidx in chosen):
            layers.append(cup(lay.pos))
            anchors.append(())
            layers.append(cap(lay.pos))
            anchors.append((t + 1,))
        else:
            # parallel smoothing: strands pass straight through, the level
            # above the crossing collapses onto the current one
            anchors[-1] = anchors[-1] + (t + 1,)
        cidx += 1
    resolved = TangleDiagram(diagram.n, diagram.m, tuple(layers))
    return ResolvedDiagram(resolved, tuple(anchors))


# -- strand tracing -----------------------------------------------------------

class _UnionFind:
    def __init__(self):
        self.parent = {}

    def make(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass(frozen=True)
class CircleTrace:
    """Connected components of a crossingless diagram's strand graph.

    ``assignment`` maps (level, slot) -> id; closed circles get ids
    0..circle_count-1 ordered by the smallest point they touch, open arcs get
    ids "a0", "a1", ... in the same order.  ``open_slots`` maps boundary
    ("bottom", k) / ("top", k) positions to their arc id.
    """

    circle_count: int
    assignment: dict
    open_slots: dict


def trace_strands(diagram: TangleDiagram, through_crossings: bool = False) -> CircleTrace:
    """Trace strand connectivity.

    With through_crossings=True a crossing layer transposes its two strands
    (components of the underlying link); otherwise crossing layers are
    rejected, matching the crossingless-diagram contract.
    """
    uf = _UnionFind()
    # current[k] = graph node currently occupying slot k+1
    current = []
    for k in range(diagram.n):
        node = (0, k + 1)
        uf.make(node)
        current.append(node)
    bottoms = list(current)

    for t, lay in enumerate(diagram.layers, start=1):
        i = lay.pos - 1
        if lay.kind == "cap":
            a, b = (t, "L"), (t, "R")
            uf.make(a)
            uf.make(b)
            uf.union(a, b)
            current[i:i] = [a, b]
        elif lay.kind == "cup":
            uf.union(current[i], current[i + 1])
            del current[i:i + 2]
        else:
            if not through_crossings:
                raise DiagramError("trace_strands on a diagram with crossings "
                                   "requires through_crossings=True")
            current[i], current[i + 1] = current[i + 1], current[i]

    # walk again to record every (level, slot) point of every class
    points = {}   # root -> min point
    assignment = {}

    def touch(level, slot, node):
        root = uf.find(node)
        pt = (level, slot)
        assignment[pt] = root
        if root not in points or pt < points[root]:
            points[root] = pt

    cur = []
    for k in range(diagram.n):
        cur.append((0, k + 1))
    for k, node in enumerate(cur):
        touch(0, k + 1, node)
    for t, lay in enumerate(diagram.layers, start=1):
        i = lay.pos - 1
        if lay.kind == "cap":
            cur[i:i] = [(t, "L"), (t, "R")]
        elif lay.kind == "cup":
            del cur[i:i + 2]
        else:
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
        for k, node in enumerate(cur):
            touch(t, k + 1, node)

    boundary_roots = set()
    open_slots = {}
    for k, node in enumerate(bottoms):
        boundary_roots.add(uf.find(node))
    for k, node in enumerate(cur):
        boundary_roots.add(uf.find(node))

    circle_roots = sorted(
        (points[r], r) for r in points if r not in boundary_roots)
    arc_roots = sorted((points[r], r) for r in points if r in boundary_roots)
    ids = {r: idx for idx, (_, r) in enumerate(circle_roots)}
    ids.update({r: f"a{idx}" for idx, (_, r) in enumerate(arc_roots)})

    for k, node in enumerate(bottoms):
        open_slots[("bottom", k + 1)] = ids[uf.find(node)]
    for k, node in enumerate(cur):
        open_slots[("top", k + 1)] = ids[uf.find(node)]

    return CircleTrace(
        circle_count=len(circle_roots),
        assignment={pt: ids[root] for pt, root in assignment.items()},
        open_slots=open_slots,
    )


def trace_circles(resolved: ResolvedDiagram) -> CircleTrace:
    return trace_strands(resolved.diagram, through_crossings=False)


def circle_points(resolved: ResolvedDiagram):
    """For each circle id, the frozenset of (original-level, slot) anchored points.

    Points on levels created inside turnback replacements are dropped; the
    remaining coordinates are shared by every resolution of the same diagram,
    which is what makes circles of adjacent resolutions comparable.
    """
    tr = trace_circles(resolved)
    anchored = {cid: set() for cid in range(tr.circle_count)}
    for (level, slot), cid in tr.assignment.items():
        if isinstance(cid, str):
            continue  # open arc
        for a in resolved.anchors[level]:
            anchored[cid].add((a, slot))
    return tr, {cid: frozenset(pts) for cid, pts in anchored.items()}


def component_count(diagram: TangleDiagram) -> int:
    """Number of link components of a (0,0) diagram (strands pass through crossings)."""
    if not diagram.is_link():
        raise DiagramError("component_count requires a (0,0) diagram")
    tr = trace_strands(diagram, through_crossings=True)
    return tr.circle_count


def crossing_counts(diagram: TangleDiagram):
    """Counts (k1, k2, k3, k4) by crossing type and the shift pair (r, s).

    r = k1 - k2 - k3 + k4 and s = -k1 + 2 k2 + 2 k3 - k4 relate the oriented
    theory to the unoriented one; k2 + k3 and k1 + k4 play the roles of the
    negative and positive crossing numbers.
    """
    k = [0, 0, 0, 0]
    for _, _, ctype in diagram.crossings():
        k[ctype - 1] += 1
    k1, k2, k3, k4 = k
    r = k1 - k2 - k3 + k4
    s = -k1 + 2 * k2 + 2 * k3 - k4
    return (k1, k2, k3, k4, r, s)


# -- text format --------------------------------------------------------------
#
#   tangle N M          header
#   cap I | cup I | cross I T
#   # comment           anywhere
#
# or the one-line braid form:  braid S: W1 W2 ... ; close

class TangleParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def parse_tangle(text: str) -> TangleDiagram:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise TangleParseError("empty diagram")

    first_no, first = lines[0]
    if first.startswith("braid"):
        if len(lines) > 1:
            raise TangleParseError("braid form is a single line", lines[1][0])
        return _parse_braid_line(first, first_no)

    parts = first.split()
    if len(parts) != 3 or parts[0] != "tangle":
        raise TangleParseError(f"expected 'tangle N M', got {first!r}", first_no)
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise TangleParseError(f"bad widths in {first!r}", first_no) from None

    layers = []
    for lineno, body in lines[1:]:
        parts = body.split()
        try:
            if parts[0] == "cap" and len(parts) == 2:
                layers.append(cap(int(parts[1])))
            elif parts[0] == "cup" and len(parts) == 2:
                layers.append(cup(int(parts[1])))
            elif parts[0] == "cross" and len(parts) == 3:
                layers.append(cross(int(parts[1]), int(parts[2])))
            else:
                raise TangleParseError(f"unknown layer {body!r}", lineno)
        except TangleParseError:
            raise
        except (ValueError, DiagramError) as exc:
            raise TangleParseError(str(exc), lineno) from None
    try:
        return TangleDiagram(n, m, tuple(layers))
    except DiagramError as exc:
        raise TangleParseError(str(exc)) from None


def _parse_braid_line(line: str, lineno: int) -> TangleDiagram:
    m = line.split(":", 1)
    if len(m) != 2:
        raise TangleParseError("braid form is 'braid S: W1 W2 ... ; close'", lineno)
    head, rest = m
    parts = head.split()
    if len(parts) != 2:
        raise TangleParseError(f"expected 'braid S:', got {head!r}", lineno)
    try:
        strands = int(parts[1])
    except ValueError:
        raise TangleParseError(f"bad strand count {parts[1]!r}", lineno) from None
    rest = rest.strip()
    if not rest.endswith("close"):
        raise TangleParseError("braid line must end with '; close'", lineno)
    word_text = rest[:-len("close")].rstrip()
    if not word_text.endswith(";"):
        raise TangleParseError("braid line must end with '; close'", lineno)
    word = []
    for tok in word_text[:-1].split():
        try:
            word.append(int(tok))
        except ValueError:
            raise TangleParseError(f"bad braid letter {tok!r}", lineno) from None
    try:
        return braid_closure(strands, word)
    except DiagramError as exc:
        raise TangleParseError(str(exc), lineno) from None


def serialize_tangle(diagram: TangleDiagram) -> str:
    out = [f"tangle {diagram.n} {diagram.m}"]
    for lay in diagram.layers:
        if lay.kind == "cross":
            out.append(f"cross {lay.pos} {lay.ctype}")
        else:
            out.append(f"{lay.kind} {lay.pos}")
    return "\n".join(out) + "\n"
