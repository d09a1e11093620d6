"""Labeled solutions of the five basic recurrences.

Each basic form has the direct solution f_n plus a companion solution g_n
(and, for form 6, h_n = g_n - f_n).  Running form 13 backward needs its
own companions h, j, g.  All gamma prefactors are assembled in log-space
so that shifts up to n ~ 1e3 never overflow, and (-1)^n, (-z)^n, (1-z)^n
factors are tracked on principal branches.
"""

import cmath
from dataclasses import dataclass

from .errors import CatastrophicCancellation, PoleOfGamma, SingularPrefactor
from .evaluate import eval_f21
from .gammafns import denominator_pole, log_gamma, reflect_negative_gamma
from .kernels import shifted_params
from .types import ParameterSet

NEAR_POLE_TOL = 1e-8


@dataclass(frozen=True)
class LabeledSolution:
    label: str  # F | G | H | J
    form: int
    direction: str  # forward | backward


def _check_gamma_args(args) -> None:
    # near-pole arguments are rejected, not limit-evaluated
    if denominator_pole(args, NEAR_POLE_TOL):
        raise PoleOfGamma(f"gamma argument within {NEAR_POLE_TOL} of a pole: {args}")


def _log_base(base: complex, what: str) -> complex:
    base = complex(base)
    if base == 0:
        raise SingularPrefactor(f"zero base in prefactor factor {what}")
    return cmath.log(base)


def f_solution(form: int, p: ParameterSet, z: complex, n: int) -> complex:
    """The direct solution f_n = F(shifted parameters; z)."""
    return eval_f21(shifted_params(form, p, n), z)


def g_solution(form: int, p: ParameterSet, z: complex, n: int) -> complex:
    """The companion solution g_n of the basic form."""
    a, b, c = p.a, p.b, p.c
    if form == 2:
        num = (a + n + 1 - c, b + n + 1 - c)
        den = (a + b + 2 * n - c + 1,)
        q = ParameterSet(a + n, b + n, a + b + 2 * n - c + 1)
        zz = 1 - z
        log_extra = 0j
    elif form == 3:
        num = (a + 1 - c + 2 * n, b + 1 - c + 2 * n)
        den = (a + n, b + n, 2 - c + n, 1 - c + n)
        q = ParameterSet(a - c + 1 + 2 * n, b - c + 1 + 2 * n, 2 - c + n)
        zz = z
        log_extra = n * _log_base(-z, "(-z)^n")
    elif form == 5:
        num = (a + n + 1 - c,)
        den = (a + n,)
        q = ParameterSet(1 - a - n, 1 - b, 2 - c)
        zz = z
        log_extra = -n * _log_base(1 - z, "(1-z)^-n")
    elif form == 6:
        num = (a + 1 - c + 2 * n, b + 1 - c + n)
        den = (a + b - c + 1 + 2 * n, 1 - c + n)
        q = ParameterSet(a + n, b, a + b - c + 1 + 2 * n)
        zz = 1 - z
        log_extra = 0j
    elif form == 13:
        num = (c + n,)
        den = (c - a - b + 1 + n,)
        q = ParameterSet(c - a + n, c - b + n, c - a - b + 1 + n)
        zz = 1 - z
        log_extra = n * _log_base(1 - z, "(1-z)^n") + 1j * cmath.pi * (n % 2)
    else:
        raise ValueError(f"not a basic form: {form}")
    _check_gamma_args(num + den + (q.c,))
    log_pref = log_extra
    for x in num:
        log_pref += log_gamma(x)
    for x in den:
        log_pref -= log_gamma(x)
    return cmath.exp(log_pref) * eval_f21(q, zz)


def h_solution_k6(p: ParameterSet, z: complex, n: int) -> complex:
    """h_n = g_n - f_n for the form-6 recurrence; the pairing companion of
    g_n since f_n alone is never minimal there."""
    f = f_solution(6, p, z, n)
    g = g_solution(6, p, z, n)
    h = g - f
    if abs(h) < 1e-10 * max(abs(f), abs(g)):
        raise CatastrophicCancellation(
            f"|g - f| = {abs(h):.3e} below cancellation floor at n={n}, z={z}"
        )
    return h


def backward_companions_k15(p: ParameterSet, z: complex, n: int) -> tuple:
    """Solutions of the form-13 recurrence run backward, at index -n (n >= 0).

    Returns (h, j, g): h pairs with f as the minimal solution when
    |z/(1-z)| > 1 (Re z > 1/2), j pairs with f when |z/(1-z)| < 1; g is the
    forward companion continued to negative index, which fails to separate
    from f and is returned for diagnostics.
    """
    if n < 0:
        raise ValueError("n indexes the backward shift c - n and must be >= 0")
    a, b, c = p.a, p.b, p.c
    w = z / (1 - z)

    h_num = (n + 1 - c + a, n + 1 - c + b)
    h_den = (n + 1 - c, n + 1 - c + a + b)
    _check_gamma_args(h_num + h_den + (n + 1 - c + a + b,))
    log_h = sum(log_gamma(x) for x in h_num) - sum(log_gamma(x) for x in h_den)
    h = cmath.exp(log_h) * eval_f21(ParameterSet(a, b, n + 1 - c + a + b), 1 - z)

    j_num = (a - c + n + 1, b - c + n + 1)
    j_den = (2 - c + n, 1 - c + n)
    _check_gamma_args(j_num + j_den + (2 - c + n,))
    log_j = (
        sum(log_gamma(x) for x in j_num)
        - sum(log_gamma(x) for x in j_den)
        + n * _log_base(w, "(z/(1-z))^n")
        + 1j * cmath.pi * (n % 2)
    )
    j = cmath.exp(log_j) * eval_f21(ParameterSet(1 - a, 1 - b, 2 - c + n), z)

    # Gamma(c-n) and Gamma(c-a-b+1-n) via reflection: only positive-shift
    # gammas are formed.
    log_g = (
        reflect_negative_gamma(c, n)
        - reflect_negative_gamma(c - a - b + 1, n)
        + (1 - c) * _log_base(z, "z^(1-c)")
        + n * _log_base(w, "(z/(1-z))^n")
        + 1j * cmath.pi * (n % 2)
    )
    if denominator_pole((c - a - b + 1 - n,), NEAR_POLE_TOL):
        raise PoleOfGamma("g companion prefactor pole")
    g = cmath.exp(log_g) * eval_f21(ParameterSet(1 - b, 1 - a, c - a - b + 1 - n), 1 - z)
    return h, j, g
