"""Closed-form BCH, Zassenhaus and q-Zassenhaus terms as bracket expressions.

Identifiers:

* ``Z2`` .. ``Z6`` -- BCH terms of exp(A) exp(B), written with X = A, Y = B.
* ``C2`` .. ``C6`` -- classical Zassenhaus terms.
* ``qC2`` .. ``qC6`` -- q-Zassenhaus terms for bases (1, 1, a, b, ...);
  ``qC4`` needs ``a`` and ``qC6`` needs ``a`` and ``b``.
* ``qC4_SJ``, ``qC6_SJ`` -- the a = 2, b = 3 forms, where the extra terms drop.
* ``qC4_K``, ``qC6_K`` -- the a = b = 1 forms.

``intermediate_block()`` gives the components G^(j)_k of the residual
logarithms for order 3 and alpha_0 = alpha_1 = 1, keyed by (j, k).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .coeffield import c_coeff, q_factorial, q_number, q_power
from .freealgebra import Bracket, CommutatorExpr, Leaf, NCPolynomial

__all__ = ["FORMULA_IDS", "PARAMETERS", "catalog_formula", "intermediate_block"]

_A = Leaf("A")
_B = Leaf("B")


def _br(x, y, e=0):
    return Bracket(x, y, e)


def _n(k, alpha=1):
    return q_number(k, alpha)


def _f(k):
    return q_factorial(k)


# ---------------------------------------------------------------------------
# BCH with X = A, Y = B

def _ad(*letters):
    # [l1, [l2, ... [X, Y]]] for letters l1, l2, ...
    expr = _br(_A, _B)
    for ch in reversed(letters):
        expr = _br(_A if ch == "X" else _B, expr)
    return expr


def _bch(i):
    if i == 2:
        return Fraction(1, 2) * _br(_A, _B)
    if i == 3:
        return Fraction(1, 12) * (_ad("X") - _ad("Y"))
    if i == 4:
        return Fraction(-1, 24) * _ad("X", "Y")
    if i == 5:
        return _combo([
            (-720, "XXX"), (-120, "XXY"), (360, "YXX"),
            (-360, "XYY"), (120, "YXY"), (720, "YYY"),
        ])
    if i == 6:
        return _combo([
            (720, "XXXY"), (-360, "XYXX"), (480, "YXXX"), (-480, "XXYY"),
            (160, "XYXY"), (-480, "YXXY"), (1440, "YYXX"), (288, "XYYY"),
            (-180, "YXYY"), (360, "YYXY"),
        ])
    raise KeyError(i)


def _combo(entries):
    expr = None
    for den, letters in entries:
        term = Fraction(1, den) * _ad(*letters)
        expr = term if expr is None else expr + term
    return expr


# ---------------------------------------------------------------------------
# classical Zassenhaus

def _w(k):
    return Fraction(1, k)


def _zassenhaus(i):
    ba = _br(_B, _A)
    bab = _br(ba, _B)
    baa = _br(ba, _A)
    if i == 2:
        return _w(2) * ba
    if i == 3:
        return _w(3) * bab + _w(6) * baa
    if i == 4:
        return _w(8) * (_br(bab, _B) + _br(baa, _B)) + _w(24) * _br(baa, _A)
    if i == 5:
        return (_w(30) * (_br(_br(bab, _B), _B) + _br(_br(baa, _A), _B))
                + _w(20) * (_br(_br(baa, _B), _B) + _br(baa, ba))
                + _w(10) * _br(bab, ba)
                + _w(120) * _br(_br(baa, _A), _A))
    if i == 6:
        return (_w(144) * (_br(_br(_br(bab, _B), _B), _B) + _br(_br(_br(baa, _A), _A), _B))
                + _w(72) * (_br(_br(_br(baa, _B), _B), _B) + _br(_br(_br(baa, _A), _B), _B)
                           + _br(_br(baa, _A), ba))
                + _w(24) * (_br(_br(bab, _B), ba) + _br(_br(baa, _B), ba))
                + _w(720) * _br(_br(_br(baa, _A), _A), _A))
    raise KeyError(i)


# ---------------------------------------------------------------------------
# q-Zassenhaus, bases (1, 1, a, b, ...)

# [B, A]_q and the nested q-commutators built on it
_P = _br(_B, _A, 1)
_PB = _br(_P, _B, 1)          # [[B,A]_q, B]_q
_PA = _br(_P, _A, 2)          # [[B,A]_q, A]_{q^2}
_PBB = _br(_PB, _B, 2)
_PAB = _br(_PA, _B, 1)
_PAA = _br(_PA, _A, 3)


def _qc2():
    return 1 / _n(2) * _P


def _qc3():
    return 1 / _n(3) * _PB + 1 / _f(3) * _PA


def _qc4_common():
    return 1 / (_n(2) * _n(4)) * (_PBB + _PAB) + 1 / _f(4) * _PAA


def _qc4(a):
    return _qc4_common() + q_power(a) / (_n(2) * _n(4) * _n(2, a)) * _br(_P, _P, 2 - a)


def _qc5():
    return (1 / (_f(3) * _n(5)) * (_br(_PBB, _B, 3) + _br(_PAA, _B, 1))
            + 1 / (_n(2) ** 2 * _n(5)) * (_br(_PAB, _B, 2) + _br(_PA, _P, 2))
            + 1 / (_n(2) * _n(5)) * _br(_PB, _P, 2)
            + 1 / _f(5) * _br(_PAA, _A, 4))


def _qc6_common():
    return (1 / (_f(4) * _n(6)) * (_br(_br(_PBB, _B, 3), _B, 4) + _br(_br(_PAA, _A, 4), _B, 1))
            + 1 / (_n(2) ** 2 * _n(3) * _n(6)) * (_br(_br(_PAB, _B, 2), _B, 3)
                                                  + _br(_br(_PAA, _B, 1), _B, 2)
                                                  + _br(_PAA, _P, 2))
            + 1 / (_n(2) ** 2 * _n(6)) * (_br(_PBB, _P, 2) + _br(_PAB, _P, 2))
            + 1 / _f(6) * _br(_br(_PAA, _A, 4), _A, 5))


def _qc6(a, b):
    qa, qb = q_power(a), q_power(b)
    return (_qc6_common()
            + qa / (_n(2) ** 2 * _n(6) * _n(3, a)) * _br(_br(_P, _P, 2 - a), _P, 2 + a)
            + qb / (_n(3) * _n(6) * _n(2, b)) * _br(_PB, _PB, 3 - b)
            + qb / (_f(3) * _n(6) * _n(2, b)) * (_br(_PB, _PA, 3 - b) + _br(_PA, _PB, 3 - b))
            + qb / (_n(2) ** 2 * _n(3) * _n(6) * _n(2, b)) * _br(_PA, _PA, 3 - b))


def _qc4_k():
    return _qc4_common() + q_power(1) / (_n(2) ** 2 * _n(4)) * _br(_P, _P, 1)


def _qc6_k():
    qq = q_power(1)
    return (1 / (_f(4) * _n(6)) * (_br(_br(_PBB, _B, 3), _B, 4) + _br(_br(_PAA, _A, 4), _B, 1))
            + 1 / (_n(2) ** 2 * _n(3) * _n(6)) * (_br(_br(_PAB, _B, 2), _B, 3)
                                                  + _br(_br(_PAA, _B, 1), _B, 2)
                                                  + _br(_PAA, _P, 2)
                                                  + qq * _br(_br(_P, _P, 1), _P, 3)
                                                  + qq * _br(_PB, _PA, 2)
                                                  + qq * _br(_PA, _PB, 2))
            + 1 / (_n(2) ** 2 * _n(6)) * (_br(_PBB, _P, 2) + _br(_PAB, _P, 2))
            + 1 / _f(6) * _br(_br(_PAA, _A, 4), _A, 5)
            + qq / (_f(3) * _n(6)) * _br(_PB, _PB, 2)
            + qq / (_n(2) ** 3 * _n(3) * _n(6)) * _br(_PA, _PA, 2))


_BUILDERS = {
    **{f"Z{i}": (lambda i=i: _bch(i), ()) for i in range(2, 7)},
    **{f"C{i}": (lambda i=i: _zassenhaus(i), ()) for i in range(2, 7)},
    "qC2": (_qc2, ()),
    "qC3": (_qc3, ()),
    "qC4": (_qc4, ("a",)),
    "qC5": (_qc5, ()),
    "qC6": (_qc6, ("a", "b")),
    "qC4_SJ": (_qc4_common, ()),
    "qC6_SJ": (_qc6_common, ()),
    "qC4_K": (_qc4_k, ()),
    "qC6_K": (_qc6_k, ()),
}

FORMULA_IDS = tuple(_BUILDERS)
PARAMETERS = {k: v[1] for k, v in _BUILDERS.items()}


def catalog_formula(formula_id: str, a: Optional[int] = None,
                    b: Optional[int] = None) -> CommutatorExpr:
    """Bracket expression for a catalogued term.

    >>> catalog_formula("qC2").render()
    '(1/(1+q))*[B, A]_q'
    """
    try:
        build, params = _BUILDERS[formula_id]
    except KeyError:
        raise KeyError(f"unknown formula id {formula_id!r}; known: {', '.join(FORMULA_IDS)}") from None
    given = {"a": a, "b": b}
    for name in ("a", "b"):
        if name in params and given[name] is None:
            raise ValueError(f"{formula_id} needs parameter {name}")
        if name not in params and given[name] is not None:
            raise ValueError(f"{formula_id} takes no parameter {name}")
    return build(*(given[name] for name in params))


def intermediate_block():
    """{(j, k): G^(j)_k} for order 3 with alpha_0 = alpha_1 = 1."""
    c2, c3 = c_coeff(2), c_coeff(3)
    h, t, s6, tw = Fraction(1, 2), Fraction(1, 3), Fraction(1, 6), Fraction(1, 12)

    def poly(pairs):
        return NCPolynomial({w: c for w, c in pairs})

    g12 = poly([("BA", c2 + h), ("AB", c2 - h)])
    g13 = poly([("BBA", c3 - t), ("BAB", c3 + 2 * t), ("ABB", c3 - t),
                ("BAA", c3 + c2 + s6), ("ABA", c3 - t), ("AAB", c3 - c2 + s6)])
    return {
        (0, 1): NCPolynomial.word("B"),
        (0, 2): poly([("BB", c2), ("BA", c2 + h), ("AB", c2 - h)]),
        (0, 3): poly([("BBB", c3), ("BBA", c3 + h * c2 - tw), ("BAB", c3 + s6),
                      ("ABB", c3 - h * c2 - tw), ("BAA", c3 + c2 + s6), ("ABA", c3 - t),
                      ("AAB", c3 - c2 + s6)]),
        (1, 2): g12,
        (1, 3): g13,
        (2, 3): g13,
    }
