from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qdisentangle.coeffield import Q, c_coeff, q_number
from qdisentangle.qseries import (
    PowerSeries,
    dq_apply,
    jackson_series,
    numeric_value,
    roots_of_unity_check,
    scale_compose,
    verify_appendix,
)

series = st.lists(st.sampled_from([0, 1, -1, Fraction(1, 2), Q, 1 / (1 + Q)]), min_size=1, max_size=6)


def test_series_basics():
    z = PowerSeries.z(3)
    assert z.exp() == PowerSeries([1, 1, Fraction(1, 2), Fraction(1, 6)])
    e = jackson_series(1, 6)
    assert e * e.inv() == PowerSeries([1], 6)
    assert jackson_series(1, 2) == PowerSeries([1, 1, 1 / (1 + Q)])
    assert jackson_series(0, 4) == PowerSeries.z(4).exp()


def test_log_of_jackson_series():
    for alpha in (-1, 2):
        log = jackson_series(alpha, 6).log()
        assert all(log[k] == c_coeff(k, alpha) for k in range(1, 7))


def test_substitutions():
    assert scale_compose(PowerSeries([1, 1, 1]), Q, 1) == PowerSeries([1, Q, Q ** 2])
    assert scale_compose(PowerSeries([1, 1, 0]), 5, 2) == PowerSeries([1, 0, 5])
    lhs = scale_compose(jackson_series(1, 8), q_number(2))
    e2 = jackson_series(2, 8)
    assert lhs == e2 * scale_compose(e2, Q)


def test_jackson_derivative():
    for n in range(1, 6):
        monomial = PowerSeries([0] * n + [1])
        assert dq_apply(monomial) == PowerSeries([0] * (n - 1) + [q_number(n)])
    assert dq_apply(PowerSeries([7])) == PowerSeries([0])
    e = jackson_series(1, 7)
    assert dq_apply(e) == PowerSeries(e.coeffs[:-1])


@settings(max_examples=50, deadline=None)
@given(series, series)
def test_dq_is_linear(a, b):
    n = min(len(a), len(b)) - 1
    s, t = PowerSeries(a, n), PowerSeries(b, n)
    assert dq_apply(s + t) == dq_apply(s) + dq_apply(t)


@settings(max_examples=40, deadline=None)
@given(series)
def test_exp_log_round_trip(coeffs):
    s = PowerSeries([0] + coeffs)
    assert s.exp().log() == s


def test_hand_checks():
    # q-binomial sum at k = 2 and doubling at k = 1
    assert (1 + Q) + (1 - Q) == 2
    assert 2 * c_coeff(2) == (1 - Q) / (1 + Q)
    product = jackson_series(1, 3) * jackson_series(-1, 3)
    assert product[1] == 2


def test_numeric_value():
    e = jackson_series(1, 3)
    assert numeric_value(e, Fraction(1, 2), 1) == 1 + 1 + Fraction(2, 3) + Fraction(8, 21)


def test_roots_of_unity_numeric():
    err, ok = roots_of_unity_check(2, 0.5)
    assert ok and err < 1e-10


def test_appendix_report_shape():
    report = verify_appendix(4, 4, kcoef=3, nmax=3)
    assert all(set(e) == {"identity", "range", "verdict", "note"} for e in report)
    verdicts = {e["identity"]: e["verdict"] for e in report}
    assert verdicts["jackson-inverse-same-sign"] == "expected-fail"
    assert verdicts["jackson-inverse-negated"] == "pass"
    assert all(v in ("pass", "expected-fail") for v in verdicts.values())
    with pytest.raises(ValueError):
        verify_appendix(1, 4)
