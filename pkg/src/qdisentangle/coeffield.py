"""Exact arithmetic in the rational function field Q(q).

Elements are stored as a coprime pair of integer polynomials (ascending
coefficient tuples).  The pair is normalized so that the integer content of
numerator and denominator together is 1 and the denominator has a positive
leading coefficient; this is a unique normal form, so equality is tuple
equality.  The monic-denominator form with rational coefficients is available
through :meth:`QRationalFunction.monic_parts` and is what JSON export uses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Union

__all__ = [
    "PoleError",
    "QRationalFunction",
    "Q",
    "ONE",
    "ZERO",
    "as_qrf",
    "q_power",
    "q_number",
    "q_factorial",
    "q_binomial",
    "c_coeff",
    "eval_at",
    "limit_q1",
]

Poly = tuple  # tuple[int, ...], ascending powers of q, no trailing zeros


class PoleError(ZeroDivisionError):
    """Raised when a rational function is divided by zero or evaluated at a pole."""


# ---------------------------------------------------------------------------
# integer polynomial kernel

def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    if len(a) == len(b):
        return _trim(out)
    return tuple(out)


def pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pscale(a: Poly, k: int) -> Poly:
    if not k:
        return ()
    return tuple(c * k for c in a)


_KRONECKER_MIN = 24


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    if la == 1:
        return pscale(b, a[0])
    if lb == 1:
        return pscale(a, b[0])
    if la * lb < _KRONECKER_MIN * _KRONECKER_MIN:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return tuple(out)
    return _kronecker_mul(a, b)


def _kronecker_mul(a: Poly, b: Poly) -> Poly:
    # signed Kronecker substitution: pack at 2**k, multiply, unpack balanced digits
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    k = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 2
    va = 0
    for c in reversed(a):
        va = (va << k) + c
    vb = 0
    for c in reversed(b):
        vb = (vb << k) + c
    v = va * vb
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    full = 1 << k
    n = len(a) + len(b) - 1
    out = [0] * n
    for i in range(n):
        d = v & mask
        v >>= k
        if d >= half:
            d -= full
            v += 1
        out[i] = d
    return tuple(out)


def pcontent(a: Poly) -> int:
    return gcd(*a) if a else 0


def pprimitive(a: Poly) -> Poly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def peval(a: Poly, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def ptrydiv(a: Poly, b: Poly):
    """Exact quotient a/b in Z[q], or None when b does not divide a."""
    if not b:
        raise PoleError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None
    lb = b[-1]
    if db == 0:
        if any(c % lb for c in a):
            return None
        return tuple(c // lb for c in a)
    rem = list(a)
    quot = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        top = rem[i + db]
        if top:
            qc, r = divmod(top, lb)
            if r:
                return None
            quot[i] = qc
            for j in range(db + 1):
                rem[i + j] -= qc * b[j]
    if any(rem[:db]):
        return None
    return tuple(quot)


def pdivexact(a: Poly, b: Poly) -> Poly:
    out = ptrydiv(a, b)
    if out is None:
        raise ArithmeticError("inexact polynomial division")
    return out


def _prem(a: Poly, b: Poly) -> Poly:
    # pseudo-remainder of a by b over Z
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        top = r[-1]
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] -= top * b[j]
        r = list(_trim(r))
    return tuple(r)


def _prs_gcd(a: Poly, b: Poly) -> Poly:
    a, b = pprimitive(a), pprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, pprimitive(r)
    return pprimitive(a)


def _interpolate(h: int, x: int) -> Poly:
    out = []
    while h:
        g = h % x
        if g > x // 2:
            g -= x
        out.append(g)
        h = (h - g) // x
    return pprimitive(tuple(out))


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[q] (positive leading coefficient)."""
    a, b = _trim(a), _trim(b)
    if not a:
        return pprimitive(b)
    if not b:
        return pprimitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a, b = pprimitive(a), pprimitive(b)
    if a == b:
        return a
    # shared power of q handled separately keeps the heuristic evaluation small
    za = next(i for i, c in enumerate(a) if c)
    zb = next(i for i, c in enumerate(b) if c)
    z = min(za, zb)
    if za or zb:
        a, b = a[za:], b[zb:]
        g = pgcd(a, b) if len(a) > 1 and len(b) > 1 else (1,)
        return (0,) * z + g
    return _heu_gcd(a, b)


def _heu_gcd(a: Poly, b: Poly) -> Poly:
    # heuristic gcd: gcd of integer images, read back in balanced base x
    an = max(abs(c) for c in a)
    bn = max(abs(c) for c in b)
    bound = 2 * min(an, bn) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2 * min(an // abs(a[-1]), bn // abs(b[-1])) + 2)
    for _ in range(6):
        va, vb = peval(a, x), peval(b, x)
        if va and vb:
            h = _interpolate(gcd(va, vb), x)
            if h and ptrydiv(a, h) is not None and ptrydiv(b, h) is not None:
                return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _prs_gcd(a, b)


@lru_cache(maxsize=1 << 16)
def _den_gcd(b: Poly, d: Poly) -> Poly:
    # denominators recur constantly, so their pairwise gcds are worth caching
    return pgcd(b, d)


# ---------------------------------------------------------------------------
# field elements

def _normalize(num: Poly, den: Poly):
    if not den:
        raise PoleError("division by zero in Q(q)")
    if not num:
        return (), (1,)
    if len(den) > 1 and len(num) > 1:
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivexact(num, g)
            den = pdivexact(den, g)
    c = gcd(gcd(*num), gcd(*den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class QRationalFunction:
    """An element of Q(q) in normal form; immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), _normalized=False):
        if not _normalized:
            num, den = _normalize(_trim(num), _trim(den))
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, value) -> "QRationalFunction":
        value = Fraction(value)
        if not value:
            return ZERO
        return cls._raw((value.numerator,), (value.denominator,))

    @classmethod
    def from_fraction_coeffs(cls, num, den=(Fraction(1),)) -> "QRationalFunction":
        """Build from rational coefficient sequences (ascending powers)."""
        num = [Fraction(c) for c in num]
        den = [Fraction(c) for c in den]
        lcm = 1
        for c in num + den:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        return cls(tuple(int(c * lcm) for c in num), tuple(int(c * lcm) for c in den))

    # -- predicates

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num[0], self.den[0]) if self.num else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, QRationalFunction):
            try:
                other = as_qrf(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic

    def __neg__(self):
        return QRationalFunction._raw(pneg(self.num), self.den)

    def __add__(self, other):
        if not isinstance(other, QRationalFunction):
            try:
                other = as_qrf(other)
            except TypeError:
                return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if len(b) == 1 and len(d) == 1:
            if b == d:
                num = padd(a, c)
                return _content_fix(num, b) if num else ZERO
            return _content_fix(padd(pscale(a, d[0]), pscale(c, b[0])), (b[0] * d[0],))
        # Henrici: with g = gcd(b, d), only g can share factors with the new numerator
        if b == d:
            g, b1, d1 = b, (1,), (1,)
        else:
            g = _den_gcd(b, d)
            b1 = pdivexact(b, g) if len(g) > 1 else b
            d1 = pdivexact(d, g) if len(g) > 1 else d
        num = padd(pmul(a, d1), pmul(c, b1))
        if not num:
            return ZERO
        if len(g) > 1 and len(num) > 1:
            h = pgcd(num, g)
            if len(h) > 1:
                num = pdivexact(num, h)
                g = pdivexact(g, h)
        return _content_fix(num, pmul(pmul(b1, d1), g))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QRationalFunction):
            try:
                other = as_qrf(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_qrf(other) - self

    def __mul__(self, other):
        if not isinstance(other, QRationalFunction):
            try:
                other = as_qrf(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return ZERO
        if len(b) == 1 and len(d) == 1:
            return _content_fix(pmul(a, c), (b[0] * d[0],))
        # cross-cancel: gcd(a, d) and gcd(c, b)
        if len(a) > 1 and len(d) > 1:
            g = pgcd(a, d)
            if len(g) > 1:
                a = pdivexact(a, g)
                d = pdivexact(d, g)
        if len(c) > 1 and len(b) > 1:
            g = pgcd(c, b)
            if len(g) > 1:
                c = pdivexact(c, g)
                b = pdivexact(b, g)
        return _content_fix(pmul(a, c), pmul(b, d))

    __rmul__ = __mul__

    def inv(self) -> "QRationalFunction":
        if not self.num:
            raise PoleError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        return QRationalFunction._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, QRationalFunction):
            try:
                other = as_qrf(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return as_qrf(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- views and rendering

    def monic_parts(self):
        """Numerator and denominator as Fraction lists with a monic denominator."""
        lc = self.den[-1]
        return ([Fraction(c, lc) for c in self.num], [Fraction(c, lc) for c in self.den])

    def degrees(self):
        return (len(self.num) - 1, len(self.den) - 1)

    def to_json(self) -> dict:
        num, den = self.monic_parts()
        return {"num": [str(c) for c in num], "den": [str(c) for c in den]}

    @classmethod
    def from_json(cls, data) -> "QRationalFunction":
        return cls.from_fraction_coeffs([Fraction(s) for s in data["num"]],
                                        [Fraction(s) for s in data["den"]])

    def render(self, compact: bool = False) -> str:
        """Plain text, ascending powers, e.g. ``(1 - q)/(2 + 2*q)``."""
        num = _render_poly(self.num, compact)
        if self.den == (1,):
            return num
        den = _render_poly(self.den, compact)
        if sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        if not (len(self.den) == 1 or (sum(1 for c in self.den if c) == 1 and self.den[-1] == 1)):
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QRationalFunction({self.render()!r})"

    def latex(self) -> str:
        num = _render_poly(self.num, True, latex=True)
        if len(self.den) == 1 and self.den[0] == 1:
            return num
        return r"\frac{%s}{%s}" % (num, _render_poly(self.den, True, latex=True))


def _content_fix(num, den):
    c = gcd(gcd(*num), gcd(*den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return QRationalFunction._raw(num, den)


def _render_monomial(c: int, i: int, latex: bool) -> str:
    if i == 0:
        return str(c)
    var = "q" if i == 1 else (f"q^{{{i}}}" if latex and i > 9 else f"q^{i}")
    if c == 1:
        return var
    return f"{c}{'' if latex else '*'}{var}"


def _render_poly(p: Poly, compact: bool, latex: bool = False) -> str:
    if not p:
        return "0"
    sep_plus, sep_minus = ("+", "-") if compact else (" + ", " - ")
    out = ""
    for i, c in enumerate(p):
        if not c:
            continue
        if not out:
            out = ("-" if c < 0 else "") + _render_monomial(abs(c), i, latex)
        else:
            out += (sep_minus if c < 0 else sep_plus) + _render_monomial(abs(c), i, latex)
    return out


ZERO = QRationalFunction._raw((), (1,))
ONE = QRationalFunction._raw((1,), (1,))
Q = QRationalFunction._raw((0, 1), (1,))


def as_qrf(x) -> QRationalFunction:
    """Coerce an int, Fraction or QRationalFunction into Q(q)."""
    if isinstance(x, QRationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return QRationalFunction.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(q)")


Scalar = Union[int, Fraction, QRationalFunction]


# ---------------------------------------------------------------------------
# q-combinatorics

@lru_cache(maxsize=None)
def q_power(e: int) -> QRationalFunction:
    """q**e for any integer e."""
    if e >= 0:
        return QRationalFunction._raw((0,) * e + (1,), (1,))
    return QRationalFunction._raw((1,), (0,) * (-e) + (1,))


@lru_cache(maxsize=None)
def q_number(n: int, alpha: int = 1) -> QRationalFunction:
    """The q-number [n] in base q**alpha; alpha = 0 gives the integer n."""
    if n < 0:
        raise ValueError("q_number needs n >= 0")
    if n == 0:
        return ZERO
    if alpha == 0:
        return QRationalFunction.from_rational(n)
    m = abs(alpha)
    poly = [0] * (m * (n - 1) + 1)
    for i in range(n):
        poly[m * i] = 1
    poly = tuple(poly)
    if alpha > 0:
        return QRationalFunction._raw(poly, (1,))
    # [n]_{q^-m} = [n]_{q^m} / q^{m(n-1)}
    return QRationalFunction(poly, (0,) * (m * (n - 1)) + (1,))


@lru_cache(maxsize=None)
def q_factorial(n: int, alpha: int = 1) -> QRationalFunction:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1, alpha) * q_number(n, alpha)


@lru_cache(maxsize=None)
def q_binomial(k: int, j: int) -> QRationalFunction:
    """Gaussian binomial coefficient in base q."""
    if k < 0 or j < 0:
        raise ValueError("q_binomial needs nonnegative arguments")
    if j > k:
        raise ValueError(f"q_binomial({k}, {j}): j exceeds k")
    return q_factorial(k) / (q_factorial(j) * q_factorial(k - j))


@lru_cache(maxsize=None)
def c_coeff(k: int, alpha: int = 1) -> QRationalFunction:
    """k-th coefficient of log E_{q^alpha}(z): (1 - q^a)^(k-1) / (k [k]_{q^a})."""
    if k < 1:
        raise ValueError("c_coeff needs k >= 1")
    if k == 1:
        return ONE
    if alpha == 0:
        return ZERO
    return (1 - q_power(alpha)) ** (k - 1) / (k * q_number(k, alpha))


# ---------------------------------------------------------------------------
# numeric instantiation

def _frac_eval(p: Poly, r: Fraction) -> Fraction:
    # integer Horner on the homogenized form avoids Fraction churn
    n, d = r.numerator, r.denominator
    v = 0
    for i, c in enumerate(reversed(p)):
        v = v * n + c * d ** i
    return Fraction(v, d ** (len(p) - 1)) if p else Fraction(0)


def eval_at(f: Scalar, r) -> Fraction:
    """Exact value of f at q = r."""
    f = as_qrf(f)
    r = Fraction(r)
    den = _frac_eval(f.den, r)
    if not den:
        raise PoleError(f"denominator of {f} vanishes at q = {r}")
    return _frac_eval(f.num, r) / den


def _div_q_minus_1(p: Poly) -> Poly:
    # synthetic division by (q - 1); caller guarantees p(1) == 0
    out = [0] * (len(p) - 1)
    carry = 0
    for i in range(len(p) - 1, 0, -1):
        carry += p[i]
        out[i - 1] = carry
    return _trim(out)


def limit_q1(f: Scalar) -> Fraction:
    """Limit of f as q -> 1, cancelling common (q - 1) factors first."""
    f = as_qrf(f)
    num, den = f.num, f.den
    while num and sum(num) == 0 and sum(den) == 0:
        num, den = _div_q_minus_1(num), _div_q_minus_1(den)
    if sum(den) == 0:
        raise PoleError(f"{f} has a pole at q = 1")
    return Fraction(sum(num), sum(den))
