import doctest

import pytest

import qdisentangle.catalog as catalog
from qdisentangle.catalog import FORMULA_IDS, PARAMETERS, catalog_formula
from qdisentangle.coeffield import q_number
from qdisentangle.freealgebra import Bracket, Leaf, expand_comm_expr


def test_doctests():
    assert doctest.testmod(catalog).failed == 0


def test_ids_and_parameters():
    assert {"Z2", "C6", "qC4", "qC6", "qC4_SJ", "qC6_K"} <= set(FORMULA_IDS)
    assert PARAMETERS["qC6"] == ("a", "b")
    assert PARAMETERS["qC5"] == ()


def test_qc2_is_weighted_q_commutator():
    want = 1 / q_number(2) * Bracket(Leaf("B"), Leaf("A"), 1)
    assert expand_comm_expr(catalog_formula("qC2")) == expand_comm_expr(want)


def test_errors():
    with pytest.raises(KeyError):
        catalog_formula("qC9")
    with pytest.raises(ValueError):
        catalog_formula("qC4")
    with pytest.raises(ValueError):
        catalog_formula("qC5", a=2)


@pytest.mark.parametrize("fid", [f for f in FORMULA_IDS if not PARAMETERS[f]])
def test_homogeneous_of_the_right_degree(fid):
    degree = int("".join(ch for ch in fid.split("_")[0] if ch.isdigit()))
    assert expand_comm_expr(catalog_formula(fid)).is_homogeneous(degree)


def test_renders():
    expr = catalog_formula("qC3")
    assert "[[B, A]_q, B]_q" in expr.render()
    assert "[[B, A]_q, A]_{q^{2}}" in expr.latex()
