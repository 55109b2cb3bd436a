"""The eleven families of local tangle-diagram relations.

Two diagrams represent isotopic tangles exactly when they are connected by
these moves, so a model of the tangle calculus is consistent precisely
when it satisfies every instance.  ``relation_instances`` enumerates all
admissible instances whose intermediate widths stay within a bound, and
the two runners check them against the matrix functor and against the
Grothendieck-group operators.

Composites are written here in function order (rightmost factor at the
bottom of the diagram), matching how the relations are usually stated:
``f_n^i o g_n^{i+1} = id`` becomes layers [cap(i+1), cup(i)].
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ktheory, rt
from .diagrams import TangleDiagram, cap, cross, cup

ALL_TYPES = (1, 2, 3, 4)


@dataclass(frozen=True)
class RelationInstance:
    family: str
    key: str
    lhs: TangleDiagram
    rhs: TangleDiagram

    def __str__(self):
        return f"{self.family}[{self.key}]"


def _diag(width_in, layers):
    w = width_in
    for lay in layers:
        w = lay.width_after(w)
    return TangleDiagram(width_in, w, tuple(layers))


def relation_instances(max_width: int = 5):
    """Yield every admissible instance with all intermediate widths <= max_width."""
    W = max_width

    # (1) Reidemeister 0: f_n^i g_n^{i+1} = id = f_n^{i+1} g_n^i
    for n in range(2, W + 1):
        for i in range(1, n - 1):
            yield RelationInstance(
                "r0", f"n={n},i={i},a",
                _diag(n - 2, [cap(i + 1), cup(i)]), TangleDiagram(n - 2, n - 2))
            yield RelationInstance(
                "r0", f"n={n},i={i},b",
                _diag(n - 2, [cap(i), cup(i + 1)]), TangleDiagram(n - 2, n - 2))

    # (2) Reidemeister I: f_n^i t_n^{i+-1}(l) g_n^i = id, l in {1, 2}
    for n in range(3, W + 1):
        for i in range(1, n):
            for p in (i - 1, i + 1):
                if not 1 <= p <= n - 1:
                    continue
                for l in (1, 2):
                    yield RelationInstance(
                        "r1", f"n={n},i={i},p={p},l={l}",
                        _diag(n - 2, [cap(i), cross(p, l), cup(i)]),
                        TangleDiagram(n - 2, n - 2))

    # (3) Reidemeister II: t(2) t(1) = id = t(1) t(2)
    for n in range(2, W + 1):
        for i in range(1, n):
            yield RelationInstance(
                "r2", f"n={n},i={i},a",
                _diag(n, [cross(i, 1), cross(i, 2)]), TangleDiagram(n, n))
            yield RelationInstance(
                "r2", f"n={n},i={i},b",
                _diag(n, [cross(i, 2), cross(i, 1)]), TangleDiagram(n, n))

    # (4) Reidemeister III for the braiding crossing
    for n in range(3, W + 1):
        for i in range(1, n - 1):
            yield RelationInstance(
                "r3", f"n={n},i={i}",
                _diag(n, [cross(i, 2), cross(i + 1, 2), cross(i, 2)]),
                _diag(n, [cross(i + 1, 2), cross(i, 2), cross(i + 1, 2)]))

    # (5) cap-cap isotopy: g_{n+2}^{i+k} g_n^i = g_{n+2}^i g_n^{i+k-2}
    for n in range(2, W - 1):
        for i in range(1, n):
            for k in range(2, n + 2 - i):
                yield RelationInstance(
                    "capcap", f"n={n},i={i},k={k}",
                    _diag(n - 2, [cap(i), cap(i + k)]),
                    _diag(n - 2, [cap(i + k - 2), cap(i)]))

    # (6) cup-cup isotopy: f_n^{i+k-2} f_{n+2}^i = f_n^i f_{n+2}^{i+k}
    for n in range(2, W - 1):
        for i in range(1, n + 2):
            for k in range(2, n + 2 - i):
                yield RelationInstance(
                    "cupcup", f"n={n},i={i},k={k}",
                    _diag(n + 2, [cup(i), cup(i + k - 2)]),
                    _diag(n + 2, [cup(i + k), cup(i)]))

    # (7) cup-cap isotopy, both orders
    for n in range(2, W - 1):
        for i in range(1, n):
            for k in range(2, n + 2 - i):
                yield RelationInstance(
                    "cupcap", f"n={n},i={i},k={k},a",
                    _diag(n, [cup(i), cap(i + k - 2)]),
                    _diag(n, [cap(i + k), cup(i)]))
                yield RelationInstance(
                    "cupcap", f"n={n},i={i},k={k},b",
                    _diag(n, [cup(i + k - 2), cap(i)]),
                    _diag(n, [cap(i), cup(i + k)]))

    # (8) cap-crossing isotopy, both orders
    for n in range(4, W + 1):
        for i in range(1, n - 2):
            for k in range(2, n - i):
                for l in ALL_TYPES:
                    yield RelationInstance(
                        "capcross", f"n={n},i={i},k={k},l={l},a",
                        _diag(n - 2, [cross(i + k - 2, l), cap(i)]),
                        _diag(n - 2, [cap(i), cross(i + k, l)]))
                    yield RelationInstance(
                        "capcross", f"n={n},i={i},k={k},l={l},b",
                        _diag(n - 2, [cross(i, l), cap(i + k)]),
                        _diag(n - 2, [cap(i + k), cross(i, l)]))

    # (9) cup-crossing isotopy, both orders
    for n in range(4, W + 1):
        for i in range(1, n - 2):
            for k in range(2, n - i):
                for l in ALL_TYPES:
                    yield RelationInstance(
                        "cupcross", f"n={n},i={i},k={k},l={l},a",
                        _diag(n, [cross(i + k, l), cup(i)]),
                        _diag(n, [cup(i), cross(i + k - 2, l)]))
                    yield RelationInstance(
                        "cupcross", f"n={n},i={i},k={k},l={l},b",
                        _diag(n, [cross(i, l), cup(i + k)]),
                        _diag(n, [cup(i + k), cross(i, l)]))

    # (10) crossing-crossing isotopy for distant crossings
    for n in range(4, W + 1):
        for i in range(1, n - 2):
            for k in range(2, n - i):
                for l in ALL_TYPES:
                    for m in ALL_TYPES:
                        yield RelationInstance(
                            "crosscross", f"n={n},i={i},k={k},l={l},m={m}",
                            _diag(n, [cross(i + k, m), cross(i, l)]),
                            _diag(n, [cross(i, l), cross(i + k, m)]))

    # (11) pitchfork move
    for n in range(3, W + 1):
        for i in range(1, n - 1):
            yield RelationInstance(
                "pitchfork", f"n={n},i={i},a",
                _diag(n - 2, [cap(i + 1), cross(i, 1)]),
                _diag(n - 2, [cap(i), cross(i + 1, 4)]))
            yield RelationInstance(
                "pitchfork", f"n={n},i={i},b",
                _diag(n - 2, [cap(i + 1), cross(i, 2)]),
                _diag(n - 2, [cap(i), cross(i + 1, 3)]))


FAMILIES = ("r0", "r1", "r2", "r3", "capcap", "cupcup", "cupcap",
            "capcross", "cupcross", "crosscross", "pitchfork")


def holds_rt(inst: RelationInstance) -> bool:
    """Exact matrix equality of the two sides under the tangle functor."""
    return rt.psi(inst.lhs) == rt.psi(inst.rhs)


def holds_ktheory(inst: RelationInstance) -> bool:
    """Equality of the two sides on every Grothendieck-group basis vector."""
    n = inst.lhs.n
    for mask in range(1 << n):
        b = ktheory.KVector.basis(n, mask)
        if ktheory.apply(inst.lhs, b) != ktheory.apply(inst.rhs, b):
            return False
    return True


def run_suite(model: str = "rt", max_width: int = 5):
    """Run every instance; returns (passed, failed, failure keys, family tally).

    The tally maps each family name to [passed, failed].
    """
    if model not in ("rt", "ktheory"):
        raise ValueError("model must be 'rt' or 'ktheory'")
    check = holds_rt if model == "rt" else holds_ktheory
    passed, failures = 0, []
    tally = {fam: [0, 0] for fam in FAMILIES}
    for inst in relation_instances(max_width):
        if check(inst):
            passed += 1
            tally[inst.family][0] += 1
        else:
            failures.append(str(inst))
            tally[inst.family][1] += 1
    return passed, len(failures), failures, tally
