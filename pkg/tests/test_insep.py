import random

import pytest

from quarticfibres.finitefield import GF
from quarticfibres.insep import (InsepElem, fourth_root, is_fourth_power,
                                 sqrt_in_quarter, subalgebra_dimension)
from quarticfibres.scalars import ScalarK
from quarticfibres.upoly import UPoly

random.seed(71004)

F2 = GF.get(1)


def _scalar(max_deg=2):
    num = UPoly.from_coeffs(F2, [random.randrange(2)
                                 for _ in range(max_deg + 1)])
    den = UPoly.zero(F2)
    while den.is_zero():
        den = UPoly.from_coeffs(F2, [random.randrange(2)
                                     for _ in range(max_deg + 1)])
    return ScalarK(num, den)


def test_fourth_root_of_t():
    t = ScalarK.t(F2)
    r = fourth_root(t)
    assert r.pow(4) == InsepElem.from_scalar(t)
    assert str(r) == "t^(1/4)"
    assert str(r.square()) == "t^(1/2)"
    assert not r.in_base_field()


def test_fourth_root_generic():
    for _ in range(60):
        x = _scalar()
        r = fourth_root(x)
        assert r.pow(4) == InsepElem.from_scalar(x)
        y = sqrt_in_quarter(x)
        assert y.square() == InsepElem.from_scalar(x)


def test_base_field_detection():
    x = _scalar()
    e = InsepElem.from_scalar(x)
    assert e.in_base_field()
    assert e.as_scalar() == x
    t = ScalarK.t(F2)
    assert is_fourth_power(t ** 4)
    assert not is_fourth_power(t)
    with pytest.raises(ValueError):
        fourth_root(t).as_scalar()


def test_arithmetic():
    t = ScalarK.t(F2)
    a = fourth_root(t)
    b = a.square()  # t^(1/2)
    assert a * a == b
    assert b * b == InsepElem.from_scalar(t)
    assert (a + b).square() == a.square() + b.square()  # char 2
    assert a.scalar_mul(t).pow(4) == InsepElem.from_scalar(t ** 5)


def test_subalgebra_dimension():
    # the subfield lattice of K(t^(1/4))/K only has steps 1, 2, 4
    t = ScalarK.t(F2)
    one = InsepElem.one(F2)
    assert subalgebra_dimension([one]) == 1
    assert subalgebra_dimension([one, sqrt_in_quarter(t)]) == 2
    assert subalgebra_dimension([one, fourth_root(t)]) == 4
    assert subalgebra_dimension([one, one + one]) == 1
