"""Exact univariate arithmetic: rationals, dense polynomials over a field,
rational functions in ``q``, and the Euclidean toolkit built on them.

Rationals are :class:`fractions.Fraction`.  :class:`Poly` is generic over a
coefficient *field descriptor* (:data:`QQ` or :data:`QQ_q`), so the same code
serves ``Q[t]`` and ``Q(q)[y]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_poly

ZERO_DEGREE = float("-inf")


class RationalField:
    """The field Q, realised by :class:`fractions.Fraction`."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError(f"cannot interpret {x!r} as a rational")

    def to_json(self, x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator}"

    def from_json(self, obj) -> Fraction:
        return Fraction(obj)

    def format(self, x: Fraction) -> str:
        return str(x)

    def __repr__(self) -> str:
        return "QQ"


class RationalFunctionField:
    """The field Q(q) of :class:`RationalFunction` values."""

    name = "QQ(q)"

    @property
    def zero(self) -> "RationalFunction":
        return _RF_ZERO

    @property
    def one(self) -> "RationalFunction":
        return _RF_ONE

    def convert(self, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction.constant(x)
        if isinstance(x, Poly) and x.field is QQ:
            return RationalFunction(x)
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")

    def to_json(self, x: "RationalFunction") -> dict:
        return {"num": x.num.to_json(), "den": x.den.to_json()}

    def from_json(self, obj) -> "RationalFunction":
        return RationalFunction(
            Poly.from_json(obj["num"], QQ, "q"), Poly.from_json(obj["den"], QQ, "q")
        )

    def format(self, x: "RationalFunction") -> str:
        return str(x)

    def __repr__(self) -> str:
        return "QQ(q)"


QQ = RationalField()
QQ_q = RationalFunctionField()


class Poly:
    """Dense univariate polynomial, ``coeffs[i]`` is the coefficient of ``var**i``.

    Immutable.  The coefficient tuple is always trimmed, so the zero
    polynomial has ``coeffs == ()`` and degree :data:`ZERO_DEGREE`.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs: Iterable = (), field=QQ, var: str = "t"):
        conv = field.convert
        cs = [conv(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self.var = var

    @classmethod
    def _make(cls, coeffs: list, field, var: str) -> "Poly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.field = field
        obj.var = var
        return obj

    @classmethod
    def constant(cls, c, field=QQ, var: str = "t") -> "Poly":
        return cls((c,), field, var)

    @classmethod
    def monomial(cls, degree: int, c=1, field=QQ, var: str = "t") -> "Poly":
        return cls([field.zero] * degree + [field.convert(c)], field, var)

    @classmethod
    def gen(cls, field=QQ, var: str = "t") -> "Poly":
        return cls.monomial(1, 1, field, var)

    def zero(self) -> "Poly":
        return Poly._make([], self.field, self.var)

    def one(self) -> "Poly":
        return Poly._make([self.field.one], self.field, self.var)

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and (
                self.field is other.field or not self.coeffs
            )
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self!s}, {self.field!r}, var={self.var!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise TypeError(
                    f"polynomials over different fields: {self.field!r}, {other.field!r}"
                )
            return other
        return Poly._make([self.field.convert(other)], self.field, self.var)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._make(out, self.field, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._make([-c for c in self.coeffs], self.field, self.var)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.zero()
        if len(b) == 1:
            c = b[0]
            return Poly._make([x * c for x in a], self.field, self.var)
        if len(a) == 1:
            c = a[0]
            return Poly._make([c * x for x in b], self.field, self.var)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly._make(out, self.field, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = self.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other) -> "Poly":
        return poly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other) -> "Poly":
        return poly_divmod(self, self._coerce(other))[1]

    def exact_div(self, other) -> "Poly":
        """Quotient of an exact division; raises if there is a remainder."""
        quo, rem = poly_divmod(self, self._coerce(other))
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quo

    def divides(self, other: "Poly") -> bool:
        if not self:
            return not other
        return not poly_divmod(other, self)[1]

    def scale(self, c) -> "Poly":
        c = self.field.convert(c)
        return Poly._make([x * c for x in self.coeffs], self.field, self.var)

    def monic(self) -> "Poly":
        """Unit-normal form: divide by the leading coefficient (zero stays zero)."""
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == self.field.one:
            return self
        inv = self.field.one / lc
        return Poly._make([x * inv for x in self.coeffs], self.field, self.var)

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be any value the coefficients
        can multiply with (numbers, rational functions, polynomials)."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, f, field, var: str | None = None) -> "Poly":
        return Poly._make([f(c) for c in self.coeffs], field, var or self.var)

    # -- serialization ------------------------------------------------------
    def to_json(self) -> list:
        to = self.field.to_json
        return [to(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence, field=QQ, var: str = "t") -> "Poly":
        return cls([field.from_json(c) for c in data], field, var)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``a = quo*b + rem`` with ``deg rem < deg b``."""
    if a.field is not b.field and a.coeffs and b.coeffs:
        raise TypeError("polynomials over different fields")
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    field, var = a.field, a.var
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return Poly._make([], field, var), a
    bc = b.coeffs
    inv = field.one / bc[-1]
    unit_lead = bc[-1] == field.one
    quo = [field.zero] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        if not unit_lead:
            c = c * inv
        quo[k - db] = c
        base = k - db
        for j in range(db):
            if bc[j]:
                rem[base + j] = rem[base + j] - c * bc[j]
        rem[k] = field.zero
    return Poly._make(quo, field, var), Poly._make(rem[:db], field, var)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_divmod(a, b)[1].monic()
    return a.monic()


def poly_bezout(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` the monic gcd.

    When one input divides the other the cofactors are the trivial ones,
    preferring ``u`` when ``a`` divides ``b``.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    zero, one = a.zero(), a.one()
    if a and a.degree <= b.degree and a.divides(b):
        return a.monic(), one.scale(a.field.one / a.leading), zero
    if b and b.divides(a):
        return b.monic(), zero, one.scale(b.field.one / b.leading)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = r0.field.one / r0.leading
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return a.zero()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class RationalFunction:
    """Element of Q(q) kept as ``num/den`` with ``gcd(num, den) = 1`` and a
    monic denominator.

    Numerator and denominator live in flint ``fmpq_poly`` objects; the
    :attr:`num` and :attr:`den` views expose them as :class:`Poly` over
    :data:`QQ` in ``q``.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num, den=None):
        n = _to_fmpq_poly(num)
        d = _FONE if den is None else _to_fmpq_poly(den)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._n, self._d = _canonical(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, n: fmpq_poly, d: fmpq_poly) -> "RationalFunction":
        obj = object.__new__(cls)
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        c = QQ.convert(c)
        return cls._raw(fmpq_poly([fmpq(c.numerator, c.denominator)]), _FONE)

    @classmethod
    def q_power(cls, k: int) -> "RationalFunction":
        """``q**k`` for any integer ``k``."""
        mono = fmpq_poly([0] * abs(k) + [1])
        return cls._raw(mono, _FONE) if k >= 0 else cls._raw(_FONE, mono)

    @property
    def num(self) -> Poly:
        return _from_fmpq_poly(self._n)

    @property
    def den(self) -> Poly:
        return _from_fmpq_poly(self._d)

    def normalize(self) -> "RationalFunction":
        return RationalFunction._raw(*_canonical(self._n, self._d))

    def is_polynomial(self) -> bool:
        return self._d == _FONE

    def __bool__(self) -> bool:
        return not self._n.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self._n == other._n and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._d == _FONE and self._n == _to_fmpq_poly(other)
        if isinstance(other, Poly) and other.field is QQ:
            return self._d == _FONE and self._n == _to_fmpq_poly(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((str(self._n), str(self._d)))
        return self._hash

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return QQ_q.convert(other)

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        a1, b1, a2, b2 = self._n, self._d, other._n, other._d
        if a2.is_zero():
            return self
        if a1.is_zero():
            return other
        if b1 == b2:
            n = a1 + a2
            if n.is_zero():
                return _RF_ZERO
            if b1 == _FONE:
                return RationalFunction._raw(n, _FONE)
            g = n.gcd(b1)
            if g == _FONE:
                return RationalFunction._raw(n, b1)
            return RationalFunction._raw(n // g, b1 // g)
        # Henrici: only factors of gcd(b1, b2) can cancel
        g = b1.gcd(b2)
        if g == _FONE:
            return RationalFunction._raw(a1 * b2 + a2 * b1, b1 * b2)
        b1g, b2g = b1 // g, b2 // g
        n = a1 * b2g + a2 * b1g
        if n.is_zero():
            return _RF_ZERO
        g2 = n.gcd(g)
        if g2 == _FONE:
            return RationalFunction._raw(n, b1g * b2)
        return RationalFunction._raw(n // g2, b1g * (b2 // g2))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self._n, self._d)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        a1, b1, a2, b2 = self._n, self._d, other._n, other._d
        if a1.is_zero() or a2.is_zero():
            return _RF_ZERO
        if b2 != _FONE:
            g = a1.gcd(b2)
            if g != _FONE:
                a1, b2 = a1 // g, b2 // g
        if b1 != _FONE:
            g = a2.gcd(b1)
            if g != _FONE:
                a2, b1 = a2 // g, b1 // g
        return RationalFunction._raw(a1 * a2, b1 * b2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        n = self._n
        if n.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = n[n.degree()]
        return RationalFunction._raw(self._d / lc, n / lc)

    def __truediv__(self, other) -> "RationalFunction":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self._n**n, self._d**n)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        fx = fmpq(x.numerator, x.denominator)
        d = self._d(fx)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {x}")
        return _fraction(self._n(fx) / d)

    def __str__(self) -> str:
        if self._d == _FONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self!s})"


def _fraction(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _to_fmpq_poly(x) -> fmpq_poly:
    if isinstance(x, fmpq_poly):
        return x
    if isinstance(x, Poly):
        if x.field is not QQ:
            raise TypeError("rational functions need polynomials over QQ")
        return fmpq_poly([fmpq(c.numerator, c.denominator) for c in x.coeffs])
    c = QQ.convert(x)
    return fmpq_poly([fmpq(c.numerator, c.denominator)])


def _from_fmpq_poly(p: fmpq_poly) -> Poly:
    return Poly._make([_fraction(c) for c in p.coeffs()], QQ, "q")


def _canonical(n: fmpq_poly, d: fmpq_poly) -> tuple[fmpq_poly, fmpq_poly]:
    if n.is_zero():
        return _FZERO, _FONE
    g = n.gcd(d)
    if g != _FONE:
        n, d = n // g, d // g
    lc = d[d.degree()]
    if lc != 1:
        n, d = n / lc, d / lc
    return n, d


_FZERO = fmpq_poly([])
_FONE = fmpq_poly([1])
_RF_ZERO = RationalFunction._raw(_FZERO, _FONE)
_RF_ONE = RationalFunction._raw(_FONE, _FONE)


def q_integer(k: int) -> RationalFunction:
    """``[k]_q = (1 - q**k)/(1 - q)`` for any integer ``k``."""
    if k >= 0:
        return RationalFunction._raw(fmpq_poly([1] * k), _FONE)
    # [-m]_q = -q^{-m} [m]_q
    return RationalFunction._raw(fmpq_poly([-1] * (-k)), fmpq_poly([0] * (-k) + [1]))


def format_poly(p: Poly) -> str:
    """Human-readable form, highest degree first."""
    if not p.coeffs:
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if isinstance(c, RationalFunction):
            if c.is_polynomial() and c.num.is_constant():
                c = c.num.coeffs[0]
            else:
                cs = f"({c})"
                mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
                terms.append(("+", cs + ("*" + mono if mono else "")))
                continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
