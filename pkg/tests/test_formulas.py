from math import comb, factorial

import pytest

import ordpat as op
from ordpat import StructureError


def test_lb_formula():
    assert op.lb_formula(0) == 1
    assert op.lb_formula(4) == 9
    assert op.lb_formula(8) == 361
    assert [op.lb_formula(n) for n in range(1, 9)] == [1, 2, 4, 9, 21, 52, 134, 361]
    # direct-summation oracle
    for n in range(12):
        assert op.lb_formula(n) == sum(
            comb(n, 2 * k) * factorial(k) for k in range(n // 2 + 1)
        )


def test_catalan_and_telephone():
    assert op.catalan(0) == 1
    assert op.catalan(3) == 5
    assert [op.catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    assert op.telephone(4) == 10
    # recurrence oracle T(n) = T(n-1) + (n-1) T(n-2)
    vals = [1, 1]
    for n in range(2, 10):
        vals.append(vals[-1] + (n - 1) * vals[-2])
    assert [op.telephone(n) for n in range(10)] == vals
    assert op.double_factorial_odd(3) == 15


def test_g_d():
    assert op.g_d(2, 0) == 1
    assert op.g_d(2, 3) == 7
    assert op.g_d(3, 2) == 8
    with pytest.raises(StructureError):
        op.g_d(0, 1)
    # the internal bound check covers x > 3D; sample the range here
    for d in range(1, 7):
        for x in range(3 * d + 1, 40):
            assert op.g_d(d, x) < 2 * d * comb(x, d - 1)


def test_constants():
    assert op.c_bound(2) == 2 * 16 * comb(4, 2) == 192
    assert op.c_one(1) == 2 * op.c_bound(2) + 1 == 385
    rec = op.constants(1)
    assert rec.C_bound == 2 * comb(1, 1) == 2
    assert rec.C_1 == 385
    assert rec.c_k == 32 * comb(6160, 4)
    assert rec.c_k > rec.threshold_2_pow == 2**8
    rec2 = op.constants(2)
    assert rec2.C_bound == 192
    assert rec2.C_1 == 2 * op.c_bound(3) + 1
    assert rec2.c_k == 32 * 16 * comb(16 * 64 * rec2.C_1, 32)
    assert rec2.c_k > 2**64


def test_f_recurrence_bound():
    # base case
    assert op.f_recurrence_bound(3, 1) == 3 * 2**3 == 24
    for n in range(1, 9):
        assert op.f_recurrence_bound(n, 1) == n * 2**n
    # hand-unfolded: f(5)=160; f(10)=f(5)+g_2(770)*10; f(20)=f(10)+g_2(770)*20
    g = op.g_d(2, 2 * comb(2, 2) * 385)
    assert g == 1541
    assert op.f_recurrence_bound(20, 1) == 160 + g * 10 + g * 20 == 46390
    ck = op.constants(1).c_k
    for n in range(1, 101):
        assert op.f_recurrence_bound(n, 1) < ck * n
    # k = 2 sanity: base region and one recurrence step stay below c_k n
    assert op.f_recurrence_bound(64, 2) == 64 * 2**64
    op.f_recurrence_bound(100, 2)
