"""Recurrence coefficients of the five basic forms, their n -> infinity
limits, and the residual oracle that certifies the formulas.

Two candidate coefficient readings were disambiguated by the residual oracle against
series-evaluated solutions: the last factor of C for form 2 is (1-z)
squared, and the cross term of B for form 3 is c3*U*V with the cubic
polynomial coefficient c3 (not c**3).
"""

from dataclasses import dataclass

from .errors import SingularPoint
from .types import ParameterSet

BASIC_FORMS = (2, 3, 5, 6, 13)


def _check_form(form: int):
    if form not in BASIC_FORMS:
        raise ValueError(f"not a basic form: {form} (expected one of {BASIC_FORMS})")


@dataclass(frozen=True)
class RecurrenceCoefficients:
    A: complex
    B: complex
    C: complex
    n: int


@dataclass(frozen=True)
class K3ComputationRecord:
    """Intermediates of the form-3 coefficient evaluation."""

    U: complex
    V: complex
    c1: complex
    c2: complex
    c3: complex


def shifted_params(form: int, p: ParameterSet, n: int) -> ParameterSet:
    """Parameter triple of the family member at shift n."""
    _check_form(form)
    if form == 2:
        return ParameterSet(p.a + n, p.b + n, p.c)
    if form == 3:
        return ParameterSet(p.a + n, p.b + n, p.c - n)
    if form == 5:
        return ParameterSet(p.a + n, p.b, p.c)
    if form == 6:
        return ParameterSet(p.a + n, p.b, p.c - n)
    return ParameterSet(p.a, p.b, p.c + n)


def k3_computation(a: complex, b: complex, c: complex, z: complex) -> K3ComputationRecord:
    U = z * (a + b - c + 1) * (a + b - c + 2) + a * b * (1 - z)
    V = (1 - z) * (1 - a - b + a * b) + z * (a + b - c - 1) * (a + b - c - 2)
    c1 = (1 - z) * (b - c) * (b - 1) * (a - 1 + z * (b - c - 1))
    c2 = b * (b + 1 - c) * (1 - z) * (a + b * z - c * z + 2 * z)
    c3 = c - 2 * b - (a - b) * z
    return K3ComputationRecord(U, V, c1, c2, c3)


def coefficients(form: int, p: ParameterSet, z: complex, n: int) -> RecurrenceCoefficients:
    """Coefficient triple (A_n, B_n, C_n) of the basic-form recurrence
    A_n y_{n-1} + B_n y_n + C_n y_{n+1} = 0 at index n."""
    _check_form(form)
    z = complex(z)
    s = shifted_params(form, p, n)
    a, b, c = s.a, s.b, s.c
    if form == 2:
        A = (c - a) * (c - b) * (c - a - b - 1)
        B = (c - a - b) * (
            c * (a + b - c) + c - 2 * a * b
            + z * ((a + b) * (c - a - b) + 2 * a * b + 1 - c)
        )
        C = a * b * (c - a - b + 1) * (1 - z) ** 2
    elif form == 3:
        r = k3_computation(a, b, c, z)
        A = -(a - c) * (a - c - 1) * (b - 1 - c) * (b - c) * z * r.U
        B = c * (r.c1 * r.U + r.c2 * r.V + r.c3 * r.U * r.V)
        C = a * b * c * (c - 1) * (1 - z) ** 3 * r.V
    elif form == 5:
        A = c - a
        B = 2 * a - c - (a - b) * z
        C = a * (z - 1)
    elif form == 6:
        A = z * (a - c) * (a - c - 1) * (b - c) * (a + z * (b + 1 - c))
        B = c * (
            a * (a - 1) * (c - 1)
            + a * (a - 1) * (a + 3 * b - 4 * c + 2) * z
            + (b - c) * (b + 1 - c) * (4 * a - c - 1) * z**2
            - (a - b) * (b - c) * (b + 1 - c) * z**3
        )
        C = -a * c * (c - 1) * (a - 1 + z * (b - c)) * (1 - z) ** 2
    else:  # form 13
        A = c * (c - 1) * (z - 1)
        B = c * (c - 1 - (2 * c - p.a - p.b - 1) * z)
        C = (c - p.a) * (c - p.b) * z
    return RecurrenceCoefficients(A, B, C, n)


def coefficient_limits(form: int, z: complex) -> tuple:
    """(alpha, beta) = limits of B_n/C_n and A_n/C_n as n -> infinity.

    Functions of z only; singular at z = 1 for all forms and additionally
    at z = 0 for form 13.
    """
    _check_form(form)
    z = complex(z)
    if z == 1:
        raise SingularPoint("coefficient limits are singular at z = 1")
    if form == 2:
        return -2 * (z + 1) / (1 - z) ** 2, 1 / (1 - z) ** 2
    if form == 3:
        return (8 * z**2 + 20 * z - 1) / (1 - z) ** 3, -16 * z / (1 - z) ** 3
    if form == 5:
        return (z - 2) / (1 - z), 1 / (1 - z)
    if form == 6:
        return -(z**2 - 6 * z + 1) / (1 - z) ** 2, -4 * z / (1 - z) ** 2
    if z == 0:
        raise SingularPoint("form 13 limits are singular at z = 0")
    return -(2 * z - 1) / z, (z - 1) / z


def residual(form: int, p: ParameterSet, z: complex, n: int, solution) -> float:
    """Normalized defect |A y_{n-1} + B y_n + C y_{n+1}| / max |.| of a
    candidate solution (a callable index -> complex)."""
    co = coefficients(form, p, z, n)
    ta = co.A * solution(n - 1)
    tb = co.B * solution(n)
    tc = co.C * solution(n + 1)
    scale = max(abs(ta), abs(tb), abs(tc))
    if scale == 0:
        return 0.0
    return abs(ta + tb + tc) / scale
