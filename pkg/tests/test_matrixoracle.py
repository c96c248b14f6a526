from fractions import Fraction

import pytest

from qdisentangle.coeffield import Q
from qdisentangle.disentangle import q_zassenhaus_terms
from qdisentangle.freealgebra import NCPolynomial
from qdisentangle.matrixoracle import (
    RationalMatrix,
    eval_ncpoly,
    factorization_check,
    mat_qexp,
    qplane_pair,
    random_nilpotent,
)

E = RationalMatrix.unit


def test_random_nilpotent():
    m = random_nilpotent(3, 7, 3)
    assert m.is_strictly_upper()
    assert m == random_nilpotent(3, 7, 3)
    assert (random_nilpotent(4, 1, 5) ** 4).is_zero()
    with pytest.raises(ValueError):
        random_nilpotent(1, 0, 1)


def test_mat_qexp():
    m = E(3, 1, 3)
    assert mat_qexp(m, 1, 2) == RationalMatrix.identity(3) + m
    m = E(3, 1, 2) + E(3, 2, 3)
    for q0 in (2, Fraction(1, 2)):
        want = RationalMatrix.identity(3) + m + E(3, 1, 3).scale(1 / (1 + Fraction(q0)))
        assert mat_qexp(m, 1, q0) == want
    assert mat_qexp(m, 0, 3) == RationalMatrix.identity(3) + m + E(3, 1, 3).scale(Fraction(1, 2))


def test_mat_qexp_errors():
    with pytest.raises(ValueError):
        mat_qexp(RationalMatrix.identity(2), 1, 2)
    with pytest.raises(ZeroDivisionError, match=r"\[2\]"):
        mat_qexp(E(3, 1, 2) + E(3, 2, 3), 1, -1)


def test_eval_ncpoly():
    a, b = E(3, 1, 2), E(3, 2, 3)
    assert eval_ncpoly(NCPolynomial.scalar(1), a, b, 2) == RationalMatrix.identity(3)
    p = NCPolynomial({"BA": 1, "AB": -Q})
    assert eval_ncpoly(p, a, b, 2) == E(3, 1, 3).scale(-2)
    c2 = q_zassenhaus_terms(2, (1, 1, 2)).terms[2]
    assert eval_ncpoly(c2, a, b, 5) == E(3, 1, 3).scale(Fraction(-5, 6))


def test_factorization_small():
    assert all(e["verdict"] == "pass" for e in factorization_check(2, 3, 1, (1, 1, 2)))
    report = factorization_check(1, 2, 4, (1, 1))
    assert [set(e) for e in report] == [{"dim", "seed", "q", "verdict"}] * 3
    with pytest.raises(ValueError):
        factorization_check(2, 4, 1)


def test_irregular_schedule():
    sched = (2, -1, 0, 3, 1)
    assert all(e["verdict"] == "pass" for e in factorization_check(4, 5, 9, sched))


def test_qplane_pair_relation():
    for q0 in (2, Fraction(1, 3)):
        a, b = qplane_pair(5, q0)
        assert b * a == (a * b).scale(q0)
