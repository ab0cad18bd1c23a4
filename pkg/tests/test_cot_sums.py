import math
from fractions import Fraction

import pytest

from basel_linalg.cot_sums import (
    float_power_sum,
    power_sum,
    s2_closed_form_times3,
    verify_lemma2,
    verify_remark,
)
from basel_linalg.exact_matrices import trace_power
from basel_linalg.spectrum import bisection_eigenvalues


@pytest.mark.parametrize("n,p,expected", [(1, 1, 3), (2, 2, 90), (2, 1, 10)])
def test_power_sum_examples(n, p, expected):
    r = power_sum(n, p)
    assert r.value == expected
    assert isinstance(r.value, Fraction)


def test_s2_n2_trace_decomposition():
    # 16 tr(A_2^2) - 8 tr(A_2) + 2 with tr(A_2) = 3 and tr(A_2^2) = 7
    r = power_sum(2, 2)
    assert r.trace_terms == [(0, 1, 2), (1, 2, 3), (2, 1, 7)]
    assert 16 * 7 - 8 * 3 + 2 == 90 == r.value


def test_cot_pi_over_6():
    assert (1 / math.tan(math.pi / 6)) ** 2 == pytest.approx(3.0, rel=1e-15)
    assert power_sum(1, 2).value == 9


@pytest.mark.parametrize("n_max", [1, 2, 200])
def test_verify_closed_forms(n_max):
    assert verify_lemma2(n_max)
    assert verify_remark(n_max)


@pytest.mark.parametrize("f", [verify_lemma2, verify_remark])
def test_n_max_zero_rejected(f):
    with pytest.raises(ValueError):
        f(0)


def test_exact_identities_sweep():
    for n in range(1, 201):
        assert power_sum(n, 1).value == 2 * n * n + n
        assert 3 * power_sum(n, 2).value == s2_closed_form_times3(n)


def test_trace_expansion_invariant():
    for n in (1, 4, 23):
        for p in (1, 2, 3, 4):
            r = power_sum(n, p)
            expected = sum(
                math.comb(p, j) * 4**j * (-1) ** (p - j) * (n if j == 0 else trace_power(n, j).value)
                for j in range(p + 1)
            )
            assert r.value == expected > 0


@pytest.mark.parametrize("n", [1, 2, 5, 10, 50, 200])
@pytest.mark.parametrize("p", [1, 2])
def test_float_cross_check(n, p):
    value = float(power_sum(n, p).value)
    assert abs(float_power_sum(n, p) - value) <= 1e-9 * value


def test_float_cross_check_up_to_512():
    for n in (300, 512):
        for p in (1, 2, 3):
            value = float(power_sum(n, p).value)
            assert abs(float_power_sum(n, p) - value) <= 1e-9 * value


def test_brute_force_spectral_oracle():
    for n in range(1, 9):
        mus = [1 / b for b in bisection_eigenvalues(n)]
        for p in (1, 2, 3):
            brute = math.fsum((4 * mu - 1) ** p for mu in mus)
            value = float(power_sum(n, p).value)
            assert abs(brute - value) <= 1e-9 * value


def test_strictly_increasing_in_n():
    for p in (1, 2, 3):
        values = [power_sum(n, p).value for n in range(1, 101)]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_extension_flag():
    assert not power_sum(3, 1).extension
    assert not power_sum(3, 2).extension
    assert power_sum(3, 3).extension
