"""Exact arithmetic in the ring Z[q, q^-1] of integer Laurent polynomials.

This is the ground ring for everything else in the package: matrix entries
of the tangle functor, Grothendieck-group coefficients and graded Euler
characteristics.  Values are immutable; all arithmetic is exact (Python
integers never overflow).
"""

from __future__ import annotations

import re


class LaurentPoly:
    """An integer Laurent polynomial in the single variable q.

    Internally a mapping exponent -> coefficient with no zero coefficients
    stored (canonical form), so equality is structural equality.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                if v:
                    c[int(e)] = int(v)
        self._c = c

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q(exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q^exp."""
        return LaurentPoly({exp: coeff})

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by q^e."""
        return LaurentPoly({k + e: v for k, v in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The ring involution q -> q^-1 (exponent negation)."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_laurent(self)

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when the quotient is not in Z[q,q^-1]."""
        other = _coerce(other)
        if other.is_zero():
            raise ValueError("division by zero")
        rem = dict(self._c)
        out = {}
        lead_e, lead_c = max(other._c.items())
        while rem:
            e, c = max(rem.items())
            de = e - lead_e
            dc, m = divmod(c, lead_c)
            if m:
                raise ValueError(f"{self} is not divisible by {other}")
            out[de] = dc
            for oe, ov in other._c.items():
                k = oe + de
                w = rem.get(k, 0) - ov * dc
                if w:
                    rem[k] = w
                else:
                    rem.pop(k, None)
        return LaurentPoly(out)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q()

#: The value a closed circle contributes everywhere in the theory: -(q + q^-1).
CIRCLE = LaurentPoly({1: -1, -1: -1})


# -- canonical text form ----------------------------------------------------
#
# Terms in ascending exponent order.  Unit coefficients are dropped, exponent
# one is written "q", exponent zero drops the variable:  "-q^-2 + 3 - q^3".

def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, v in p.items():
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if e == 0:
            body = str(a)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if a == 1 else f"{a}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+)?          # optional magnitude
        (?P<star>\*)?             # optional * before q
        (?P<var>q(\^(?P<exp>-?\d+))?)?$""",
    re.VERBOSE,
)


class LaurentParseError(ValueError):
    pass


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical text form (tolerant of whitespace)."""
    s = text.strip()
    if not s:
        raise LaurentParseError("empty Laurent polynomial")
    if s == "0":
        return LaurentPoly.zero()
    # split into signed terms; signs right after '^' belong to exponents
    s = re.sub(r"(?<!\^)-", "+-", s).lstrip("+")
    coeffs = {}
    for raw in s.split("+"):
        term = raw.strip()
        if not term:
            raise LaurentParseError(f"malformed polynomial {text!r}")
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        m = _TERM_RE.match(term.replace(" ", ""))
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise LaurentParseError(f"bad term {raw.strip()!r} in {text!r}")
        if m.group("star") and (m.group("coeff") is None or m.group("var") is None):
            raise LaurentParseError(f"bad term {raw.strip()!r} in {text!r}")
        a = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var"):
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + (-a if neg else a)
    return LaurentPoly(coeffs)
