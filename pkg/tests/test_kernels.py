import cmath
import math
import random

import pytest

from gaussrec.errors import SingularPoint
from gaussrec.kernels import (
    BASIC_FORMS,
    coefficient_limits,
    coefficients,
    k3_computation,
    residual,
    shifted_params,
)
from gaussrec.evaluate import eval_f21
from gaussrec.types import ParameterSet

from conftest import rel_err


def test_form5_coefficients_example():
    co = coefficients(5, ParameterSet(2.0, 1.0, 3.0), 0.5, 0)
    assert (co.A, co.B, co.C) == (1.0, 0.5, -1.0)


def test_form13_coefficients_example():
    # c + n = 3 with c = 1, n = 2
    co = coefficients(13, ParameterSet(1.0, 1.0, 1.0), 0.5, 2)
    assert rel_err(co.A, -3.0) < 1e-15
    assert rel_err(co.B, 1.5) < 1e-15
    assert rel_err(co.C, 2.0) < 1e-15


def test_shifted_params_per_form():
    p = ParameterSet(0.4, 1.1, 2.3)
    expected = {
        2: (3.4, 4.1, 2.3),
        3: (3.4, 4.1, -0.7),
        5: (3.4, 1.1, 2.3),
        6: (3.4, 1.1, -0.7),
        13: (0.4, 1.1, 5.3),
    }
    for form, (ea, eb, ec) in expected.items():
        sp = shifted_params(form, p, 3)
        assert abs(sp.a - ea) < 1e-12
        assert abs(sp.b - eb) < 1e-12
        assert abs(sp.c - ec) < 1e-12


def test_limits_form5_example():
    alpha, beta = coefficient_limits(5, 0.5)
    assert rel_err(alpha, -3.0) < 1e-15
    assert rel_err(beta, 2.0) < 1e-15


def test_limits_form13_example():
    alpha, beta = coefficient_limits(13, 0.25)
    assert rel_err(alpha, 2.0) < 1e-15
    assert rel_err(beta, -3.0) < 1e-15


def test_limits_singular_points():
    for form in BASIC_FORMS:
        with pytest.raises(SingularPoint):
            coefficient_limits(form, 1.0)
    with pytest.raises(SingularPoint):
        coefficient_limits(13, 0.0)


def test_k3_computation_record():
    a, b, c, z = 0.4, 1.1, 2.3, 0.35
    rec = k3_computation(a, b, c, z)
    assert rel_err(rec.U, z * (a + b - c + 1) * (a + b - c + 2) + a * b * (1 - z)) < 1e-15
    assert rel_err(rec.c3, c - 2 * b - (a - b) * z) < 1e-15


def _series_solution(form, p, z):
    return lambda m: eval_f21(shifted_params(form, p, m), z)


def test_residual_series_solution_example():
    p = ParameterSet(0.3, 0.7, 1.1)
    r = residual(5, p, 0.4 + 0.2j, 5, _series_solution(5, p, 0.4 + 0.2j))
    assert r <= 1e-10


def test_residual_all_forms_small():
    rng = random.Random(3)
    for form in BASIC_FORMS:
        for _ in range(10):
            p = ParameterSet(
                rng.uniform(0.2, 2.2), rng.uniform(0.2, 2.2), rng.uniform(0.2, 2.2)
            )
            z = cmath.rect(rng.uniform(0.05, 0.6), rng.uniform(-math.pi, math.pi))
            sol = _series_solution(form, p, z)
            for n in (2, 6, 10):
                assert residual(form, p, z, n, sol) <= 1e-9, (form, n)


def test_residual_terminating_family():
    # a + n reaches 0: the family passes through a polynomial member
    p = ParameterSet(-6.0, 0.7, 1.3)
    z = 0.45
    sol = _series_solution(5, p, z)
    for n in (2, 5, 8):
        assert residual(5, p, z, n, sol) <= 1e-10


def test_ratio_limits_converge():
    rng = random.Random(41)
    for form in BASIC_FORMS:
        p = ParameterSet(0.37, 1.21, 1.83)
        z = cmath.rect(rng.uniform(0.31, 0.5), rng.uniform(-math.pi, math.pi))
        alpha, beta = coefficient_limits(form, z)
        errs = []
        for n in (100, 1000, 10000):
            co = coefficients(form, p, z, n)
            errs.append(abs(co.A / co.C - beta) + abs(co.B / co.C - alpha))
        assert errs[0] > errs[1] > errs[2], form
        co = coefficients(form, p, z, 10000)
        assert abs(co.A / co.C - beta) <= 1e-2, form


def test_typo_variant_form2_rejected():
    # C for form 2 with (1-z)*2 instead of (1-z)**2 breaks the recurrence
    p = ParameterSet(0.37, 1.21, 1.83)
    z = 0.3 + 0.2j
    sol = _series_solution(2, p, z)

    def bad_solution_residual(n):
        co = coefficients(2, p, z, n)
        sp = shifted_params(2, p, n)
        c_bad = sp.a * sp.b * (p.c - sp.a - sp.b + 1) * (1 - z) * 2
        ta = co.A * sol(n - 1)
        tb = co.B * sol(n)
        tc = c_bad * sol(n + 1)
        return abs(ta + tb + tc) / max(abs(ta), abs(tb), abs(tc))

    assert residual(2, p, z, 4, sol) <= 1e-10
    assert bad_solution_residual(4) > 1e-3
