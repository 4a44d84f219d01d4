"""Exact scalars: arbitrary-precision rationals plus quadratic-surd extensions.

Every geometric decision in this package reduces to sign evaluations over
these types; no floating point enters any predicate.  Rationals are backed
by gmpy2.mpq when available (much faster), falling back to
fractions.Fraction.  Quadratic surds u + v*sqrt(delta) arise only when a
transversal is pinned by a quadratic with non-square discriminant; they
support field arithmetic and exact sign tests, so the rational predicates
work on them unchanged.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq, isqrt as _isqrt

    def rat(num=0, den=1):
        """Exact rational from ints, a rational, or a numeric string."""
        return _mpq(num, den)

    def _int_isqrt(n):
        return int(_isqrt(n))

    RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    import math

    def rat(num=0, den=1):
        return Fraction(num, den)

    def _int_isqrt(n):
        return math.isqrt(n)

    RAT_BACKEND = "fractions"


ZERO = rat(0)
ONE = rat(1)


def parse_scalar(text):
    """Parse an exact decimal ("1.25"), fraction ("5/4") or integer string.

    Accepts int inputs directly.  Binary floats are rejected: they carry
    rounding the predicates must never see.
    """
    if isinstance(text, bool):
        raise ValueError("boolean is not a coordinate")
    if isinstance(text, int):
        return rat(text)
    if isinstance(text, float):
        raise ValueError("float coordinates are not exact; pass a string")
    if not isinstance(text, str):
        raise ValueError(f"cannot parse scalar from {type(text).__name__}")
    try:
        frac = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact number: {text!r}") from exc
    return rat(frac.numerator, frac.denominator)


def format_scalar(x):
    """Canonical string for a rational: "p" or "p/q"."""
    num, den = x.numerator, x.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def sign(x):
    """Exact sign (-1, 0, 1) of a rational or quadratic surd."""
    if isinstance(x, SqrtExt):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def rational_sqrt(x):
    """Exact square root of a rational if it is a perfect square, else None."""
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    rn = _int_isqrt(num)
    if rn * rn != num:
        return None
    rd = _int_isqrt(den)
    if rd * rd != den:
        return None
    return rat(rn, rd)


def sqrt_enclosure(x, width):
    """Rational interval [lo, hi] containing sqrt(x) with hi - lo <= width.

    x must be a nonnegative rational; width a positive rational.
    """
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return ZERO, ZERO
    num, den = int(x.numerator), int(x.denominator)
    # sqrt(num/den) = sqrt(num*den)/den
    n = num * den
    shift = 1
    while True:
        scaled = n << (2 * shift)  # n * 4^shift
        root = _int_isqrt(scaled)
        lo = rat(root, (1 << shift) * den)
        hi = rat(root + 1, (1 << shift) * den)
        if hi - lo <= width:
            return lo, hi
        shift *= 2


class SqrtExt:
    """Element u + v*sqrt(delta) of a real quadratic field.

    delta is a fixed positive non-square rational shared by all operands of
    one computation.  Mixing two different deltas is a programming error and
    raises.  Comparisons and signs are exact.
    """

    __slots__ = ("u", "v", "delta")

    def __init__(self, u, v, delta):
        self.u = rat(u)
        self.v = rat(v)
        self.delta = rat(delta)

    def _coerce(self, other):
        if isinstance(other, SqrtExt):
            if other.delta != self.delta:
                raise TypeError("mixing surds over different radicands")
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "mpq":
            return SqrtExt(other, 0, self.delta)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtExt(self.u + o.u, self.v + o.v, self.delta)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtExt(self.u - o.u, self.v - o.v, self.delta)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtExt(o.u - self.u, o.v - self.v, self.delta)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtExt(
            self.u * o.u + self.v * o.v * self.delta,
            self.u * o.v + self.v * o.u,
            self.delta,
        )

    __rmul__ = __mul__

    def _inverse(self):
        norm = self.u * self.u - self.v * self.v * self.delta
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return SqrtExt(self.u / norm, -self.v / norm, self.delta)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __neg__(self):
        return SqrtExt(-self.u, -self.v, self.delta)

    def __pos__(self):
        return self

    def sign(self):
        su, sv = sign(self.u), sign(self.v)
        if sv == 0:
            return su
        if su == 0:
            return sv
        if su == sv:
            return su
        # Opposite signs: compare u^2 against v^2 * delta.
        t = self.u * self.u - self.v * self.v * self.delta
        if t > 0:
            return su
        if t < 0:
            return sv
        return 0  # possible only if delta were a square

    def __bool__(self):
        return self.sign() != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.delta))

    def _cmp(self, other, op):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return op((self - o).sign())

    def __lt__(self, other):
        return self._cmp(other, lambda s: s < 0)

    def __le__(self, other):
        return self._cmp(other, lambda s: s <= 0)

    def __gt__(self, other):
        return self._cmp(other, lambda s: s > 0)

    def __ge__(self, other):
        return self._cmp(other, lambda s: s >= 0)

    def enclosure(self, width):
        """Rational interval of width <= width containing this value."""
        if self.v == 0:
            return self.u, self.u
        w = rat(width) / (2 * abs(self.v))
        lo, hi = sqrt_enclosure(self.delta, w)
        if self.v > 0:
            return self.u + self.v * lo, self.u + self.v * hi
        return self.u + self.v * hi, self.u + self.v * lo

    def __repr__(self):
        return f"({format_scalar(self.u)} + {format_scalar(self.v)}*sqrt({format_scalar(self.delta)}))"


def quadratic_roots_exact(c2, c1, c0):
    """Roots of c2 t^2 + c1 t + c0 over the rationals or a surd extension.

    Returns ("none",) when there is no real root, ("all",) when identically
    zero, ("one", t) for a single root (linear case or double root),
    ("two", t_small, t_big) with rational roots, or
    ("two_irrational", t_small, t_big, delta) with SqrtExt roots.
    """
    if c2 == 0:
        if c1 == 0:
            return ("all",) if c0 == 0 else ("none",)
        return ("one", -c0 / c1)
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return ("none",)
    if disc == 0:
        return ("one", -c1 / (2 * c2))
    root = rational_sqrt(disc)
    if root is not None:
        t1 = (-c1 - root) / (2 * c2)
        t2 = (-c1 + root) / (2 * c2)
        return ("two", min(t1, t2), max(t1, t2))
    half = 1 / (2 * c2)
    a = SqrtExt(-c1 * half, -half, disc)
    b = SqrtExt(-c1 * half, half, disc)
    return ("two_irrational", min(a, b), max(a, b), disc)
