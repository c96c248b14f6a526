"""Truncated power series in z over Q(q), and the q-exponential identity checks."""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import List, Sequence

from .coeffield import (
    ONE,
    ZERO,
    QRationalFunction,
    as_qrf,
    c_coeff,
    eval_at,
    limit_q1,
    q_binomial,
    q_factorial,
    q_number,
    q_power,
)

__all__ = [
    "PowerSeries",
    "jackson_series",
    "scale_compose",
    "dq_apply",
    "verify_appendix",
]


class PowerSeries:
    """sum_{n<=order} coeffs[n] z^n with Q(q) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int = None):
        coeffs = [as_qrf(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1] + [ZERO] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def z(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> QRationalFunction:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})*z^{n}" for n, c in enumerate(self.coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}, order={self.order})"

    def _common(self, other: "PowerSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._common(other)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PowerSeries":
        c = as_qrf(c)
        return PowerSeries([c * x for x in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        n = self._common(other)
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return PowerSeries(out, n)

    __rmul__ = scale

    def derivative(self) -> "PowerSeries":
        n = max(self.order - 1, 0)
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)] or [0], n)

    def inv(self) -> "PowerSeries":
        f0 = self.coeffs[0]
        if not f0:
            raise ValueError("series inverse needs a nonzero constant term")
        r = f0.inv()
        out = [r]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-r * acc)
        return PowerSeries(out, self.order)

    def exp(self) -> "PowerSeries":
        if self.coeffs[0]:
            raise ValueError("series exp needs a zero constant term")
        # n f_n = sum_k k g_k f_{n-k}
        out = [ONE]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + k * self.coeffs[k] * out[n - k]
            out.append(acc * Fraction(1, n))
        return PowerSeries(out, self.order)

    def log(self) -> "PowerSeries":
        if self.coeffs[0] != ONE:
            raise ValueError("series log needs constant term 1")
        # log f = integral of f'/f
        ratio = self.derivative() * self.inv()
        out = [ZERO] + [ratio.coeffs[n - 1] * Fraction(1, n) for n in range(1, self.order + 1)]
        return PowerSeries(out, self.order)


def jackson_series(alpha: int, order: int) -> PowerSeries:
    """E_{q^alpha}(z) = sum z^n / [n]_{q^alpha}! through z^order."""
    return PowerSeries([q_factorial(n, alpha).inv() for n in range(order + 1)], order)


def scale_compose(s: PowerSeries, lam, m: int = 1) -> PowerSeries:
    """S(lam * z^m), truncated at the order of S."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    lam = as_qrf(lam)
    out = [ZERO] * (s.order + 1)
    power = ONE
    for k in range(s.order // m + 1):
        out[m * k] = power * s.coeffs[k]
        power = power * lam
    return PowerSeries(out, s.order)


def dq_apply(s: PowerSeries) -> PowerSeries:
    """Jackson derivative (f(z) - f(qz)) / ((1 - q) z), order drops by one."""
    if s.order == 0:
        return PowerSeries([0], 0)
    return PowerSeries([q_number(n) * s.coeffs[n] for n in range(1, s.order + 1)], s.order - 1)


# ---------------------------------------------------------------------------
# identity checks


def _entry(identity, rng, ok, note="", expect_fail=False):
    if expect_fail:
        verdict = "expected-fail" if not ok else "fail"
    else:
        verdict = "pass" if ok else "fail"
    return {"identity": identity, "range": rng, "verdict": verdict, "note": note}


def _first_mismatch(lhs: PowerSeries, rhs: PowerSeries):
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return n, a - b
    return None


def _series_identity(name, rng, pairs, expect_fail=False, explain=""):
    notes = []
    ok = True
    for label, lhs, rhs in pairs:
        bad = _first_mismatch(lhs, rhs)
        if bad is not None:
            ok = False
            notes.append(f"{label}: first mismatch at z^{bad[0]}, lhs - rhs = {bad[1]}")
    note = "; ".join(notes)
    if explain:
        note = f"{explain} {note}".strip()
    return _entry(name, rng, ok, note, expect_fail)


def _numeric_jackson(q: float, order: int) -> List[float]:
    out = [1.0]
    fact = 1.0
    for n in range(1, order + 1):
        fact *= (1 - q ** n) / (1 - q)
        out.append(1.0 / fact)
    return out


def _cmul(a, b, order):
    out = [0j] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return out


def _ceval(coeffs, z):
    v = 0j
    for c in reversed(coeffs):
        v = v * z + c
    return v


def roots_of_unity_check(n: int, q: float, order: int = 16, tol: float = 1e-10):
    """Floating check of prod_m E_q(w^m z) = E_{q^n}((1-q)^(n-1)/[n]_q z^n).

    Both sides are truncated at z^order and compared at sample points with
    |z| at most half the convergence radius 1/(1-q).  Returns the worst
    absolute error.
    """
    base = _numeric_jackson(q, order)
    lhs = [1 + 0j] + [0j] * order
    for m in range(n):
        w = cmath.exp(2j * cmath.pi * m / n)
        lhs = _cmul(lhs, [c * w ** k for k, c in enumerate(base)], order)
    lam = (1 - q) ** (n - 1) / ((1 - q ** n) / (1 - q))
    inner = _numeric_jackson(q ** n, order // n)
    rhs = [0j] * (order + 1)
    for k, c in enumerate(inner):
        rhs[n * k] = c * lam ** k
    radius = 0.5 / (1 - q)
    worst = 0.0
    for r in (0.1 * radius, 0.5 * radius, radius):
        for theta in (0.0, 0.7, 2.3, 4.1):
            z = cmath.rect(r, theta)
            worst = max(worst, abs(_ceval(lhs, z) - _ceval(rhs, z)))
    return worst, worst < tol


def verify_appendix(order: int = 12, kmax: int = 12, kcoef: int = 8, nmax: int = 4):
    """Run every q-exponential identity check; return a list of report entries.

    Failures are entries, never exceptions.  The product E_q(z) E_{1/q}(z)
    is not 1 (its z coefficient is 2), so that entry is reported as
    ``expected-fail``; E_q(z) E_{1/q}(-z) = 1 must pass.
    """
    if order < 2 or kmax < 2:
        raise ValueError("order and kmax must be >= 2")
    report = []
    q = q_power(1)
    one_minus_q = 1 - q

    # log E_{q^a}(z) has coefficients c_k(q^a)
    pairs = []
    for a in (-2, -1, 1, 2, 3):
        lhs = jackson_series(a, order).log()
        rhs = PowerSeries([0] + [c_coeff(k, a) for k in range(1, order + 1)], order)
        pairs.append((f"alpha={a}", lhs, rhs))
    report.append(_series_identity("log-jackson-coefficients", f"k<={order}, alpha in -2,-1,1,2,3", pairs))

    # coefficient recursion from the logarithm of a unit series
    bad = [k for k in range(2, kmax + 1)
           if c_coeff(k) != q_factorial(k).inv() - Fraction(1, k) * _sum(
               j * c_coeff(j) / q_factorial(k - j) for j in range(1, k))]
    report.append(_entry("log-coefficient-recursion", f"2<=k<={kmax}", not bad and c_coeff(1) == ONE,
                         f"failing k: {bad}" if bad else ""))

    bad = [k for k in range(2, kmax + 1)
           if _sum(q_binomial(k, j) * one_minus_q ** (j - 1) * q_factorial(j - 1)
                   for j in range(1, k + 1)) != k]
    report.append(_entry("q-binomial-sum", f"2<=k<={kmax}", not bad, f"failing k: {bad}" if bad else ""))

    bad = [(k, j) for k in range(2, kmax + 1) for j in range(1, k)
           if q_binomial(k, j) != q ** j * q_binomial(k - 1, j) + q_binomial(k - 1, j - 1)]
    report.append(_entry("q-pascal", f"1<=j<k<={kmax}", not bad, f"failing (k, j): {bad}" if bad else ""))

    e_q = jackson_series(1, order)
    e_inv = jackson_series(-1, order)
    unit = PowerSeries([1], order)
    report.append(_series_identity(
        "jackson-inverse-same-sign", f"order {order}",
        [("E_q(z) E_{1/q}(z)", e_q * e_inv, unit)], expect_fail=True,
        explain="product with both arguments equal is not the unit series;"))
    report.append(_series_identity(
        "jackson-inverse-negated", f"order {order}",
        [("E_q(z) E_{1/q}(-z)", e_q * scale_compose(e_inv, -1), unit)]))

    lhs = e_q * scale_compose(e_q, -1)
    rhs = scale_compose(jackson_series(2, order), one_minus_q / (1 + q), 2)
    report.append(_series_identity("jackson-reflection", f"order {order}", [("E_q(z)E_q(-z)", lhs, rhs)]))

    pairs = []
    for n in range(2, nmax + 1):
        lhs = scale_compose(e_q, q_number(n))
        e_qn = jackson_series(n, order)
        rhs = PowerSeries([1], order)
        for m in range(n):
            rhs = rhs * scale_compose(e_qn, q ** m)
        pairs.append((f"n={n}", lhs, rhs))
    report.append(_series_identity("jackson-dilation", f"n=2..{nmax}, order {order}", pairs))

    for n in (2, 3):
        for qv in (Fraction(1, 2), Fraction(1, 3)):
            err, ok = roots_of_unity_check(n, float(qv))
            report.append(_entry("jackson-roots-of-unity", f"n={n}, q={qv}, truncation 16",
                                 ok, f"max abs error {err:.1e} (tolerance 1e-10)"))

    ks = range(1, kcoef + 1)
    bad = [k for k in ks if c_coeff(k, -1) != (-1) ** (k - 1) * c_coeff(k)]
    report.append(_entry("c-inversion", f"k<={kcoef}", not bad, f"failing k: {bad}" if bad else ""))
    bad = [k for k in ks if 2 * c_coeff(2 * k) != (one_minus_q / (1 + q)) ** k * c_coeff(k, 2)]
    report.append(_entry("c-doubling", f"k<={kcoef}", not bad, f"failing k: {bad}" if bad else ""))
    bad = [(k, n) for k in ks for n in range(2, nmax + 1)
           if q_number(n, k) * c_coeff(k, n) != q_number(n) ** k * c_coeff(k)]
    report.append(_entry("c-base-power", f"k<={kcoef}, 2<=n<={nmax}", not bad,
                         f"failing (k, n): {bad}" if bad else ""))
    bad = [(k, n) for k in ks for n in range(2, nmax + 1)
           if n * c_coeff(n * k) != (one_minus_q ** (n - 1) / q_number(n)) ** k * c_coeff(k, n)]
    report.append(_entry("c-multisection", f"k<={kcoef}, 2<=n<={nmax}", not bad,
                         f"failing (k, n): {bad}" if bad else ""))

    bad = [k for k in range(1, kmax + 1) if limit_q1(c_coeff(k)) != (1 if k == 1 else 0)]
    report.append(_entry("c-classical-limit", f"k<={kmax}", not bad, f"failing k: {bad}" if bad else ""))

    pairs = []
    for lam in (ONE, as_qrf(2), as_qrf(Fraction(-1, 3)), q):
        scaled = scale_compose(e_q, lam)
        pairs.append((f"lambda={lam}", dq_apply(scaled), PowerSeries(scaled.coeffs[:-1]).scale(lam)))
    report.append(_series_identity("jackson-eigenfunction", f"order {order - 1}", pairs))
    return report


def _sum(values):
    total = ZERO
    for v in values:
        total = total + v
    return total


def numeric_value(s: PowerSeries, q, z) -> Fraction:
    """Exact value of the truncated series at rational q and z."""
    z = Fraction(z)
    return sum((eval_at(c, q) * z ** n for n, c in enumerate(s.coeffs)), Fraction(0))
