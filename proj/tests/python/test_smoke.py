from fractions import Fraction

import pytest

import so3inv


def test_lens_tau_is_integral():
    t = so3inv.tau("lens 3 1", 5)
    assert t["r"] == 5
    assert t["integral"]


def test_sphere():
    t = so3inv.tau("lens 1 1", 7)
    assert [Fraction(c) for c in t["coeffs"]][0] == 1
    assert all(Fraction(c) == 0 for c in t["coeffs"][1:])


def test_unified_round_trip():
    element = so3inv.unified("lens 2 1", 4)
    value = so3inv.evaluate(element, 5)
    tau = so3inv.tau("lens 2 1", 5)
    # (2/5) = -1
    assert [Fraction(c) for c in value["coeffs"]] == [-Fraction(c) for c in tau["coeffs"]]


def test_number_theory():
    assert so3inv.dedekind_sum(1, 3) == Fraction(1, 18)
    assert so3inv.jacobi(2, 3) == -1
    assert so3inv.h1_order("twist 1 f=5/3") == 5


def test_verify_suite():
    assert so3inv.verify("lemma33", 9, 3)["passed"] > 0


def test_errors():
    with pytest.raises(ValueError):
        so3inv.tau("lens 4 2", 5)
    with pytest.raises(ValueError):
        so3inv.tau("lens 5 x", 5)
