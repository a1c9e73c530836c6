from fractions import Fraction
from math import gamma, pi, prod, isclose

import pytest

from endolift.errors import DomainError
from endolift.exactnum import PiPower
from endolift.volumes import (
    conversion_exponent,
    vol_ch,
    vol_ch_recursive,
    vol_st,
    vol_st_so,
    vol_st_sp,
    volume_record,
)


def _sphere(n):
    return 2 * pi ** (n / 2) / gamma(n / 2)


def test_vol_st_sp_examples():
    assert vol_st_sp(0) == PiPower(1)
    assert vol_st_sp(1) == PiPower(2, 4)
    assert vol_st_sp(2) == PiPower(Fraction(2, 3), 12)


def test_vol_st_so_examples():
    assert vol_st_so(1) == PiPower(1)
    assert vol_st_so(2) == PiPower(2, 2)
    assert vol_st_so(3) == PiPower(8, 4)


@pytest.mark.parametrize("g", range(0, 8))
def test_standard_volumes_numerically(g):
    assert isclose(float(vol_st_sp(g)), prod(_sphere(4 * k) for k in range(1, g + 1)), rel_tol=1e-10)
    n = 2 * g + 1
    assert isclose(float(vol_st_so(n)), prod(_sphere(k) for k in range(2, n + 1)), rel_tol=1e-10)


def test_vol_ch_examples():
    assert vol_ch("Sp", 1) == PiPower(4, 4)
    assert vol_ch("SO", 1) == PiPower(2, 4)
    assert vol_ch("Sp", 2) == PiPower(Fraction(32, 3), 12)
    assert vol_ch("SO", 2) == PiPower(Fraction(16, 3), 12)
    assert vol_ch("Spin", 1) == PiPower(4, 4)


@pytest.mark.parametrize("g", range(1, 11))
def test_routes_agree(g):
    for group in ("Sp", "SO", "Spin"):
        assert vol_ch(group, g) == vol_ch_recursive(group, g)
        assert vol_ch(group, g) == vol_st(group, g) * Fraction(2) ** conversion_exponent(group, g)


def test_conversion_exponents():
    assert conversion_exponent("Sp", 3) == 9
    assert conversion_exponent("SO", 3) == -4
    with pytest.raises(DomainError):
        conversion_exponent("G2", 2)


def test_invalid_ranks():
    with pytest.raises(DomainError):
        vol_ch("SO", 0)
    with pytest.raises(DomainError):
        vol_st("E8", 8)
    with pytest.raises(DomainError):
        vol_st_sp(-1)


def test_volume_record_json():
    rec = volume_record("Sp", 2).to_json()
    assert rec["vol_ch"] == {"coeff": [32, 3], "pi_exp_twice": 12}
    assert rec["conversion_exponent"] == 4
