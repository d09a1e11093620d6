"""Acceptance gate: eight end-to-end checks with pinned tolerances.

Each test prints one PASS line (visible with -s or on failure) and asserts
the pinned bound; random draws are seeded so reruns are identical.
"""

import cmath
import math
import random
import time

from gaussrec.connection import ARGUMENT_KINDS, argument_modulus
from gaussrec.domains import characteristic_roots, classify, trace_boundary
from gaussrec.engine import eval_by_c_recursion, jacobi_eval, run_recursion
from gaussrec.errors import DegenerateConnection
from gaussrec.evaluate import eval_f21, eval_via_kind
from gaussrec.kernels import (
    BASIC_FORMS,
    coefficient_limits,
    coefficients,
    k3_computation,
    residual,
    shifted_params,
)
from gaussrec.solutions import (
    backward_companions_k15,
    f_solution,
    g_solution,
    h_solution_k6,
)
from gaussrec.types import ParameterSet

from conftest import rel_err

GOLDEN_P = ParameterSet(2.0 / 3.0, 1.0, 4.0 / 3.0)
GOLDEN_Z = complex(0.5, math.sqrt(3.0) / 2.0)
GOLDEN_VALUE = complex(0.883319375142724, 0.509984679019064)


def test_criterion_1_golden_value():
    start = time.perf_counter()
    value = eval_by_c_recursion(GOLDEN_P, GOLDEN_Z, n_seed=30)
    elapsed = time.perf_counter() - start
    err = rel_err(value, GOLDEN_VALUE)
    assert err < 1e-12
    assert elapsed < 1.0
    print(f"criterion 1 PASS: golden value rel err {err:.2e} in {elapsed:.3f}s")


def _bad_c_form2(p, z, n):
    # rejected reading: last factor (1-z)*2 instead of (1-z)**2
    s = shifted_params(2, p, n)
    return s.a * s.b * (s.c - s.a - s.b + 1) * (1 - z) * 2


def _bad_b_form3(p, z, n):
    # rejected reading: c**3 in the cross term instead of the cubic c3
    s = shifted_params(3, p, n)
    r = k3_computation(s.a, s.b, s.c, z)
    return s.c * (r.c1 * r.U + r.c2 * r.V + s.c**3 * r.U * r.V)


def test_criterion_2_residual_certification():
    rng = random.Random(101)
    params = [
        ParameterSet(
            complex(rng.uniform(0.2, 2.2), rng.uniform(-0.5, 0.5)),
            complex(rng.uniform(0.2, 2.2), rng.uniform(-0.5, 0.5)),
            complex(rng.uniform(0.2, 2.2), rng.uniform(-0.5, 0.5)),
        )
        for _ in range(50)
    ]
    zs = []
    while len(zs) < 10:
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        if 0.05 <= abs(z) <= 0.6 and abs(z + 0.125) > 0.02:
            zs.append(z)
    worst = 0.0
    weakest_rejection = math.inf
    for form in BASIC_FORMS:
        for p in params:
            for z in zs:
                vals = {m: eval_f21(shifted_params(form, p, m), z) for m in range(1, 12)}
                sol = vals.__getitem__
                for n in range(2, 11):
                    r = residual(form, p, z, n, sol)
                    worst = max(worst, r)
                    assert r <= 1e-9, (form, p, z, n, r)
                    if form in (2, 3):
                        co = coefficients(form, p, z, n)
                        bad = (
                            _bad_c_form2(p, z, n)
                            if form == 2
                            else None
                        )
                        if form == 2:
                            terms = (co.A * vals[n - 1], co.B * vals[n], bad * vals[n + 1])
                        else:
                            bad = _bad_b_form3(p, z, n)
                            terms = (co.A * vals[n - 1], bad * vals[n], co.C * vals[n + 1])
                        bad_res = abs(sum(terms)) / max(abs(t) for t in terms)
                        weakest_rejection = min(weakest_rejection, bad_res)
                        assert bad_res > 1e-3, (form, p, z, n, bad_res)
    print(
        f"criterion 2 PASS: worst residual {worst:.2e} <= 1e-9; "
        f"typo variants rejected, weakest residual {weakest_rejection:.2e} > 1e-3"
    )


def test_criterion_3_vieta_and_ratio_limit():
    rng = random.Random(31)
    p = ParameterSet(0.37, 1.21, 1.83)
    worst_vieta = 0.0
    worst_ratio = 0.0
    for form in BASIC_FORMS:
        count = 0
        while count < 1000:
            z = cmath.rect(rng.uniform(0.0, 5.0), rng.uniform(-math.pi, math.pi))
            if abs(z - 1) < 0.05 or abs(z) < 0.05:
                continue
            count += 1
            r = characteristic_roots(form, z)
            v1 = abs(r.t1 + r.t2 + r.alpha) / max(1.0, abs(r.alpha))
            v2 = abs(r.t1 * r.t2 - r.beta) / max(1.0, abs(r.beta))
            worst_vieta = max(worst_vieta, v1, v2)
            assert v1 <= 1e-12 and v2 <= 1e-12, (form, z)
            if abs(z - 1) < 0.5:
                continue  # ratio-limit subcheck away from the blow-up point
            _, beta = coefficient_limits(form, z)
            errs = []
            for n in (1000, 10000):
                co = coefficients(form, p, z, n)
                errs.append(abs(co.A / co.C - beta) / max(1.0, abs(beta)))
            worst_ratio = max(worst_ratio, errs[-1])
            assert errs[1] <= 1e-2, (form, z, errs)
            assert errs[1] < errs[0], (form, z, errs)
    print(
        f"criterion 3 PASS: worst Vieta defect {worst_vieta:.2e} <= 1e-12; "
        f"worst n=1e4 ratio error {worst_ratio:.2e} <= 1e-2 and decreasing"
    )


def test_criterion_4_boundary_anchors():
    tol = 1e-10

    def nearest(points, target):
        return min(abs(s.z - target) for s in points)

    pts2 = trace_boundary(2, 64)
    for s in pts2:
        assert abs(s.z.imag) <= tol and s.z.real <= tol
    pts5 = trace_boundary(5, 64)
    for s in pts5:
        assert abs(abs(s.z - 1) - 1) <= tol
    pts13 = trace_boundary(13, 64)
    for s in pts13:
        assert abs(s.z.real - 0.5) <= tol
    pts6 = trace_boundary(6, 64)
    for target in (3 - 2 * math.sqrt(2), 3 + 2 * math.sqrt(2), -1.0):
        assert nearest(pts6, target) <= tol, target
    pts3 = trace_boundary(3, 64)
    for target in ((6 * math.sqrt(3) - 10) / 8, -0.125):
        assert nearest(pts3, target) <= tol, target
    print("criterion 4 PASS: all traced boundaries hit their anchors within 1e-10")


_PERRON_POINTS = {
    2: (0.5,),
    3: (0.02, 2j),
    5: (0.5, 3.0),
    6: (0.05, 1.5j, 8.0),
    13: (0.25, 0.75),
}


def _labeled_solution(tag, form, p, z):
    if tag == "F":
        return lambda n: f_solution(form, p, z, n)
    if tag == "G":
        return lambda n: g_solution(form, p, z, n)
    if tag == "H" and form == 6:
        return lambda n: h_solution_k6(p, z, n)
    raise ValueError(f"no forward solution labeled {tag} for form {form}")


def test_criterion_5_perron_ratios():
    p = ParameterSet(0.37, 1.21, 1.83)
    worst = 0.0
    for form, points in _PERRON_POINTS.items():
        for z in points:
            z = complex(z)
            roots = characteristic_roots(form, z)
            cls = classify(form, z, "forward")
            # dominant: forward run seeded from the labeled dominant solution
            dom = _labeled_solution(cls.dominant.tag, form, p, z)
            run = run_recursion(form, p, z, (dom(0), dom(1)), 0, 220)
            err_d = abs(abs(run.ratio(200)) - abs(roots.dominant_root())) / abs(
                roots.dominant_root()
            )
            # minimal: generic-seeded backward recursion isolates it
            back = run_recursion(form, p, z, (1.0, 1.0), 320, 150)
            err_m = abs(abs(back.ratio(200)) - abs(roots.subdominant_root())) / abs(
                roots.subdominant_root()
            )
            worst = max(worst, err_d, err_m)
            assert err_d <= 0.02, (form, z, err_d)
            assert err_m <= 0.02, (form, z, err_m)
    print(f"criterion 5 PASS: worst ratio-vs-root mismatch {worst:.2%} <= 2%")


def test_criterion_6_two_path_consistency():
    rng = random.Random(77)
    rho = 0.75
    checked = 0
    attempts = 0
    worst = 0.0
    while checked < 100 and attempts < 2000:
        attempts += 1
        z = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        if abs(z - 1) < 0.05 or abs(z) < 0.05:
            continue
        kinds = sorted(
            (argument_modulus(k, z), k)
            for k in ARGUMENT_KINDS
            if argument_modulus(k, z) < rho
        )
        if len(kinds) < 2:
            continue
        p = ParameterSet(
            complex(rng.uniform(0.3, 1.7), rng.uniform(-0.3, 0.3)),
            complex(rng.uniform(0.3, 1.7), rng.uniform(-0.3, 0.3)),
            complex(rng.uniform(0.6, 2.0), rng.uniform(-0.3, 0.3)),
        )
        try:
            v1 = eval_via_kind(p, z, kinds[0][1])
            v2 = eval_via_kind(p, z, kinds[1][1])
        except DegenerateConnection:
            continue
        err = rel_err(v1, v2)
        worst = max(worst, err)
        assert err < 1e-11, (p, z, kinds[0][1], kinds[1][1], err)
        checked += 1
    assert checked == 100
    print(f"criterion 6 PASS: 100 two-path evaluations agree, worst {worst:.2e} < 1e-11")


def _jacobi_classical(n, alpha, beta, x):
    if n == 0:
        return 1.0
    p_prev, p_cur = 1.0, (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2.0
    for m in range(2, n + 1):
        c1 = 2 * m * (m + alpha + beta) * (2 * m + alpha + beta - 2)
        c2 = (2 * m + alpha + beta - 1) * (alpha**2 - beta**2)
        c3 = (
            (2 * m + alpha + beta - 2)
            * (2 * m + alpha + beta - 1)
            * (2 * m + alpha + beta)
        )
        c4 = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + alpha + beta)
        p_prev, p_cur = p_cur, ((c2 + c3 * x) * p_cur - c4 * p_prev) / c1
    return p_cur


def test_criterion_7_jacobi_application():
    worst = 0.0
    for alpha, beta in ((0.0, 0.0), (0.5, -0.3), (2.0, 3.0)):
        for x in (-0.9, -0.5, 0.0, 0.5, 0.9, 1.0):
            for n in range(0, 51):
                ref = _jacobi_classical(n, alpha, beta, x)
                got = jacobi_eval(n, alpha, beta, x)
                if ref == 0.0:
                    assert abs(got) < 1e-10
                    continue
                err = rel_err(got, ref)
                worst = max(worst, err)
                assert err < 1e-10, (alpha, beta, x, n, err)
    print(f"criterion 7 PASS: jacobi_eval matches classical recurrence, worst {worst:.2e}")


def test_criterion_8_backward_companion_separation():
    p = ParameterSet(0.41, 0.59, 1.17)  # a + b = 1 keeps every prefactor finite
    z = 0.3
    n = 100
    _, j, g = backward_companions_k15(p, z, n)
    f = f_solution(13, p, z, -n)
    non_sep = abs(math.log(abs(g / f)) / n)
    sep = math.log(abs(f / j)) / n
    assert non_sep <= 0.01
    assert sep >= 0.1
    print(
        f"criterion 8 PASS: (f,g) fail to separate ({non_sep:.2e} <= 0.01); "
        f"(f,j) separate ({sep:.3f} >= 0.1)"
    )
