"""Exact univariate polynomial arithmetic over Z, Q and Q(sqrt 3).

Polynomials are dense coefficient vectors: index i holds the coefficient of
z**i.  The genus polynomials handled downstream never have internal zeros, so
dense storage is the right shape.  Every value is immutable once built and
every operation returns a fresh object, so values can move freely between
threads.

Rational scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator), which matches the contract exactly; no wrapper type is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# Degree of the zero polynomial.  A float sentinel compares correctly against
# integer degrees but cannot silently be used as an index or a loop bound.
NEG_INF = float("-inf")


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> IntPoly:
        return cls()

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPoly:
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self):
        """Index of the last nonzero coefficient; NEG_INF for the zero poly."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        # Schoolbook convolution; iterate the shorter operand on the outside.
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPoly:
        """Multiply by z**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def eval(self, x):
        """Exact Horner evaluation; accepts int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def sign_at(self, x) -> int:
        """Sign of the value at a rational point, via integer arithmetic only.

        Evaluates p(a/b) * b**deg, which has the same sign since b > 0.
        """
        if isinstance(x, Fraction):
            a, b = x.numerator, x.denominator
        else:
            a, b = x, 1
        acc = 0
        bp = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * bp
            bp *= b
        return (acc > 0) - (acc < 0)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def primitive_part(self) -> IntPoly:
        """Divide out the content; the sign of the polynomial is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(c // g for c in self.coeffs)

    def exact_scalar_div(self, k: int) -> IntPoly:
        if k == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise ValueError(f"coefficient {c} not divisible by {k}")
            out.append(q)
        return IntPoly(out)

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                var = "z" if i == 1 else f"z^{i}"
                term = f"{'-' if c < 0 else ''}{mag}{var}"
                if parts:
                    term = f"- {mag}{var}" if c < 0 else f"+ {mag}{var}"
            parts.append(term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def signed_pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of a *positive* integer multiple of f modulo g.

    Plain pseudo-division can flip signs when g has a negative leading
    coefficient; here the multiplier is always positive, which is what
    Sturm-sequence construction needs.
    """
    if g.is_zero():
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    lg = g.lead
    alg = abs(lg)
    sg = 1 if lg > 0 else -1
    r = f
    while not r.is_zero() and r.degree >= g.degree:
        s = r.degree - g.degree
        r = r * alg - g.shift(s) * (r.lead * sg)
    return r


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact polynomial division over the integers; raises if not exact."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    out = [0] * (len(f.coeffs) - len(g.coeffs) + 1) if len(f) >= len(g) else []
    r = list(f.coeffs)
    dg, lg = g.degree, g.lead
    for i in range(len(out) - 1, -1, -1):
        c = r[i + dg]
        q, rem = divmod(c, lg)
        if rem:
            raise ValueError("division is not exact over the integers")
        out[i] = q
        if q:
            for j, gc in enumerate(g.coeffs):
                r[i + j] -= q * gc
    if any(r):
        raise ValueError("division left a nonzero remainder")
    return IntPoly(out)


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = p.primitive_part(), q.primitive_part()
    while not b.is_zero():
        r = signed_pseudo_rem(a, b)
        a, b = b, r.primitive_part()
    if a.lead < 0:
        a = -a
    return a


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


@dataclass(frozen=True)
class Sqrt3Scalar:
    """Element rat + irr*sqrt(3) of Q(sqrt 3), with exact rational parts."""

    rat: Fraction = Fraction(0)
    irr: Fraction = Fraction(0)

    @classmethod
    def of(cls, v) -> Sqrt3Scalar:
        if isinstance(v, Sqrt3Scalar):
            return v
        return cls(_as_fraction(v))

    def is_zero(self) -> bool:
        return not self.rat and not self.irr

    def is_rational(self) -> bool:
        return not self.irr

    def __add__(self, other) -> Sqrt3Scalar:
        o = Sqrt3Scalar.of(other)
        return Sqrt3Scalar(self.rat + o.rat, self.irr + o.irr)

    __radd__ = __add__

    def __neg__(self) -> Sqrt3Scalar:
        return Sqrt3Scalar(-self.rat, -self.irr)

    def __sub__(self, other) -> Sqrt3Scalar:
        return self + (-Sqrt3Scalar.of(other))

    def __rsub__(self, other) -> Sqrt3Scalar:
        return (-self) + other

    def __mul__(self, other) -> Sqrt3Scalar:
        o = Sqrt3Scalar.of(other)
        # (a + b*s)(c + d*s) = (ac + 3bd) + (ad + bc)*s   with s*s = 3
        return Sqrt3Scalar(
            self.rat * o.rat + 3 * self.irr * o.irr,
            self.rat * o.irr + self.irr * o.rat,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Sqrt3Scalar:
        if n < 0:
            raise ValueError("negative powers not supported")
        acc = Sqrt3Scalar(Fraction(1))
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def to_float(self) -> float:
        return float(self.rat) + float(self.irr) * 3 ** 0.5

    def __str__(self) -> str:
        if not self.irr:
            return str(self.rat)
        return f"{self.rat} + {self.irr}*sqrt(3)"


_S3_ZERO = Sqrt3Scalar()


class Sqrt3Poly:
    """Polynomial with coefficients in Q(sqrt 3); same normalization as IntPoly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Sqrt3Scalar.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[Sqrt3Scalar, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> Sqrt3Poly:
        return cls()

    @classmethod
    def from_int_poly(cls, p: IntPoly) -> Sqrt3Poly:
        return cls(p.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Sqrt3Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _S3_ZERO

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sqrt3Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Sqrt3Poly:
        return Sqrt3Poly(-c for c in self.coeffs)

    def __add__(self, other) -> Sqrt3Poly:
        if isinstance(other, IntPoly):
            other = Sqrt3Poly.from_int_poly(other)
        if not isinstance(other, Sqrt3Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Sqrt3Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> Sqrt3Poly:
        if isinstance(other, IntPoly):
            other = Sqrt3Poly.from_int_poly(other)
        return self + (-other)

    def __mul__(self, other) -> Sqrt3Poly:
        if isinstance(other, (int, Fraction, Sqrt3Scalar)):
            s = Sqrt3Scalar.of(other)
            return Sqrt3Poly(c * s for c in self.coeffs)
        if isinstance(other, IntPoly):
            other = Sqrt3Poly.from_int_poly(other)
        if not isinstance(other, Sqrt3Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Sqrt3Poly()
        out = [_S3_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return Sqrt3Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> Sqrt3Poly:
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return Sqrt3Poly((_S3_ZERO,) * k + self.coeffs)

    def __repr__(self) -> str:
        return f"Sqrt3Poly([{', '.join(str(c) for c in self.coeffs)}])"
