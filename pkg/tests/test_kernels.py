import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special

from fsbounds.errors import InvalidKernelParam
from fsbounds.kernels import Kernel, coeff, kernel_series, parse_kernel, pochhammer
from fsbounds.series import TruncSeries, mul


def test_salagean_coefficient():
    assert coeff(Kernel.salagean(2), 3) == 9


@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_identity_coefficients(n):
    assert coeff(Kernel.identity(), n) == 1


def test_owa_srivastava_example():
    delta = 0.5
    b2 = coeff(Kernel.owa_srivastava(delta), 2)
    assert b2 == pytest.approx(4 / 3, abs=1e-15)
    assert b2 == pytest.approx(2 / (2 - delta), abs=1e-15)
    direct = special.gamma(3) * special.gamma(2 - delta) / special.gamma(3 - delta)
    assert b2 == pytest.approx(direct, rel=1e-14)


@pytest.mark.parametrize("delta", [-3.0, -0.5, 0.0, 0.25, 0.5, 0.9])
def test_owa_srivastava_against_scipy_gamma(delta):
    k = Kernel.owa_srivastava(delta)
    for n in range(1, 30):
        expected = math.exp(special.gammaln(n + 1) + special.gammaln(2 - delta) - special.gammaln(n + 1 - delta))
        assert coeff(k, n) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("delta", [-1.5, 0.3, 0.75])
def test_owa_srivastava_recurrence(delta):
    k = Kernel.owa_srivastava(delta)
    for n in list(range(1, 40)) + [168, 169, 170, 171, 200]:
        ratio = coeff(k, n + 1) / coeff(k, n)
        assert ratio == pytest.approx((n + 1) / (n + 1 - delta), rel=1e-12)


def test_kernel_series_examples():
    assert kernel_series(Kernel.identity(), 4).allclose([0, 1, 1, 1, 1])
    rus = kernel_series(Kernel.ruscheweyh(1), 3)
    geometric = TruncSeries(np.ones(4), 3)
    assert rus.allclose(mul(geometric, geometric).shift_up())
    assert rus.allclose([0, 1, 2, 3])
    assert kernel_series(Kernel.salagean(1), 3).allclose([0, 1, 2, 3])


def test_kernel_series_needs_order_3():
    with pytest.raises(InvalidKernelParam):
        kernel_series(Kernel.identity(), 2)


@pytest.mark.parametrize("k", range(5))
def test_ruscheweyh_matches_series_of_power(k):
    # g = z / (1 - z)^(k+1): multiply k+1 geometric series together
    order = 8
    geo = TruncSeries(np.ones(order + 1), order)
    prod = TruncSeries.constant(1, order)
    for _ in range(k + 1):
        prod = mul(prod, geo)
    assert kernel_series(Kernel.ruscheweyh(k), order).allclose(prod.shift_up(), atol=1e-12)


@pytest.mark.parametrize("k", range(5))
def test_dziok_srivastava_reproduces_ruscheweyh(k):
    rus = Kernel.ruscheweyh(k)
    via_two = Kernel.dziok_srivastava([k + 1, 1], [1])
    via_one = Kernel.dziok_srivastava([k + 1], [])
    for n in range(1, 9):
        assert coeff(via_two, n) == pytest.approx(coeff(rus, n), rel=1e-12, abs=1e-12)
        assert coeff(via_one, n) == pytest.approx(coeff(rus, n), rel=1e-12, abs=1e-12)


def test_dziok_srivastava_general_formula():
    k = Kernel.dziok_srivastava([0.5, 2.5], [1.5])
    for n in range(1, 8):
        expected = special.poch(0.5, n - 1) * special.poch(2.5, n - 1) / (special.poch(1.5, n - 1) * math.factorial(n - 1))
        assert coeff(k, n) == pytest.approx(expected, rel=1e-13)


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(-2, 3) == 0


@given(st.floats(-0.9, 5), st.integers(1, 20))
def test_multiplier_r0_is_identity(lam, n):
    assert coeff(Kernel.multiplier(0, lam), n) == 1


def test_multiplier_values():
    k = Kernel.multiplier(2, 1.0)
    assert k.b2 == pytest.approx(9 / 4)
    assert k.b3 == pytest.approx(4)


@pytest.mark.parametrize(
    "kernel",
    [
        Kernel.identity(),
        Kernel.ruscheweyh(3),
        Kernel.salagean(2),
        Kernel.owa_srivastava(-0.7),
        Kernel.multiplier(3, -0.5),
        Kernel.dziok_srivastava([2, 3], [4]),
    ],
)
def test_normalization_and_positivity(kernel):
    assert coeff(kernel, 1) == 1
    assert kernel.b2 > 0 and kernel.b3 > 0


@pytest.mark.parametrize(
    "make",
    [
        lambda: Kernel.ruscheweyh(-1),
        lambda: Kernel.ruscheweyh(1.5),
        lambda: Kernel.salagean(-2),
        lambda: Kernel.owa_srivastava(1.0),
        lambda: Kernel.owa_srivastava(2.0),
        lambda: Kernel.multiplier(1, -1.0),
        lambda: Kernel.multiplier(-1, 0.0),
        lambda: Kernel.dziok_srivastava([1], [0]),
        lambda: Kernel.dziok_srivastava([1], [-3]),
        lambda: Kernel("bogus"),
        lambda: Kernel("ruscheweyh", {"m": 1}),
    ],
)
def test_invalid_params(make):
    with pytest.raises(InvalidKernelParam):
        make()


@pytest.mark.parametrize("n", [0, -1, 2.0])
def test_invalid_index(n):
    with pytest.raises(InvalidKernelParam):
        coeff(Kernel.identity(), n)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("identity", Kernel.identity()),
        ("ruscheweyh:2", Kernel.ruscheweyh(2)),
        ("salagean:1", Kernel.salagean(1)),
        ("owa:0.5", Kernel.owa_srivastava(0.5)),
        ("owa_srivastava:0.5", Kernel.owa_srivastava(0.5)),
        ("multiplier:2,1", Kernel.multiplier(2, 1.0)),
        ("dziok_srivastava:2,1/1", Kernel.dziok_srivastava([2, 1], [1])),
        ("coefficients:2,3", Kernel.from_coefficients([2, 3])),
    ],
)
def test_parse_kernel(text, expected):
    assert parse_kernel(text) == expected
    assert parse_kernel(expected.label()) == expected


@pytest.mark.parametrize("text", ["nope", "ruscheweyh", "ruscheweyh:1,2", "salagean:x", "identity:3", "multiplier:1"])
def test_parse_kernel_errors(text):
    with pytest.raises(InvalidKernelParam):
        parse_kernel(text)


def test_json_round_trip():
    for k in (Kernel.identity(), Kernel.multiplier(2, 1.0), Kernel.dziok_srivastava([2, 1], [1])):
        d = k.to_dict()
        assert set(d) == {"family", "params"}
        assert Kernel.from_dict(d) == k


def test_explicit_coefficients():
    k = Kernel.from_coefficients([2, 3])
    assert [coeff(k, n) for n in range(1, 6)] == [1, 2, 3, 0, 0]
