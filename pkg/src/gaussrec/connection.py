"""Argument transformations and connection formulas for 2F1.

Six candidate power-series arguments are available for a given z; the
one- and two-term relations below move an evaluation from z to any of
them.  Gamma-ratio prefactors are always formed in log space.
"""

import cmath
from dataclasses import dataclass

from .errors import DegenerateConnection, DomainError, SingularPrefactor
from .gammafns import denominator_pole, log_gamma_ratio
from .types import ParameterSet

ARGUMENT_KINDS = ("z", "1-z", "1/z", "(z-1)/z", "1/(1-z)", "z/(z-1)")

DEFAULT_RHO = 0.75
NEAR_INTEGER_TOL = 1e-8


def transform_argument(kind: str, z: complex) -> complex:
    z = complex(z)
    if kind == "z":
        return z
    if kind == "1-z":
        return 1 - z
    if kind == "1/z":
        return 1 / z
    if kind == "(z-1)/z":
        return (z - 1) / z
    if kind == "1/(1-z)":
        return 1 / (1 - z)
    if kind == "z/(z-1)":
        return z / (z - 1)
    raise ValueError(f"unknown argument kind {kind!r}")


def argument_modulus(kind: str, z: complex) -> float:
    try:
        return abs(transform_argument(kind, z))
    except ZeroDivisionError:
        return float("inf")


@dataclass(frozen=True)
class TransformPath:
    """Selected series argument; kind == 'none' when no argument is small."""

    argument_kind: str
    modulus: float


@dataclass(frozen=True)
class ExpansionTerm:
    prefactor: complex
    params: ParameterSet
    argument: complex


@dataclass(frozen=True)
class ConnectionExpansion:
    """1- or 2-term sum of prefactor * 2F1(params; argument)."""

    terms: tuple

    def __iter__(self):
        return iter(self.terms)


def select_transform(z: complex, rho: float = DEFAULT_RHO) -> TransformPath:
    """Smallest of the six candidate argument moduli, if below rho.

    Returns kind 'none' (carrying the smallest modulus found) when no
    candidate is small enough; that happens in the light regions around
    exp(+-i*pi/3).
    """
    if not 0 < rho < 1:
        raise ValueError("rho must satisfy 0 < rho < 1")
    best_kind, best_mod = None, float("inf")
    for kind in ARGUMENT_KINDS:
        m = argument_modulus(kind, z)
        if m < best_mod:
            best_kind, best_mod = kind, m
    if best_mod < rho:
        return TransformPath(best_kind, best_mod)
    return TransformPath("none", best_mod)


def _near_integer(x: complex, tol: float = NEAR_INTEGER_TOL) -> bool:
    return abs(x.imag) <= tol and abs(x.real - round(x.real)) <= tol


def _power(base: complex, exponent: complex) -> complex:
    """Principal-branch base**exponent with explicit handling of base 0."""
    if base == 0:
        if exponent == 0:
            return 1 + 0j
        if exponent.real > 0:
            return 0j
        raise SingularPrefactor(f"0 raised to exponent {exponent}")
    return cmath.exp(exponent * cmath.log(base))


def _gamma_prefactor(nums, dens) -> complex:
    """prod Gamma(nums)/prod Gamma(dens); zero when a denominator sits on
    a pole (the corresponding term then drops out of the expansion)."""
    if denominator_pole(dens):
        return 0j
    return cmath.exp(log_gamma_ratio(nums, dens))


def apply_connection(relation_id: str, p: ParameterSet, z: complex) -> ConnectionExpansion:
    """Expand 2F1(p; z) through one named relation.

    'sym', 'i5', 'i6', 'i7' are single-term rewrites; 'b2' (argument 1-z)
    and 'b5' (mixed 1/z and z arguments) are two-term connection formulas.
    Raises DegenerateConnection when the formula's gamma prefactors sit
    within NEAR_INTEGER_TOL of the logarithmic cases (integer c-a-b for
    b2, integer b-a for b5).
    """
    a, b, c = p.a, p.b, p.c
    z = complex(z)
    if relation_id == "sym":
        return ConnectionExpansion((ExpansionTerm(1 + 0j, ParameterSet(b, a, c), z),))
    if relation_id == "i5":
        pref = _power(1 - z, -a)
        return ConnectionExpansion(
            (ExpansionTerm(pref, ParameterSet(a, c - b, c), z / (z - 1)),)
        )
    if relation_id == "i6":
        pref = _power(1 - z, -b)
        return ConnectionExpansion(
            (ExpansionTerm(pref, ParameterSet(c - a, b, c), z / (z - 1)),)
        )
    if relation_id == "i7":
        pref = _power(1 - z, c - a - b)
        return ConnectionExpansion(
            (ExpansionTerm(pref, ParameterSet(c - a, c - b, c), z),)
        )
    if relation_id == "b2":
        if _near_integer(c - a - b):
            raise DegenerateConnection(
                f"b2 is logarithmic/unstable for integer c-a-b (got {c - a - b})"
            )
        t1 = ExpansionTerm(
            _gamma_prefactor([c, c - a - b], [c - a, c - b]),
            ParameterSet(a, b, a + b - c + 1),
            1 - z,
        )
        t2 = ExpansionTerm(
            _gamma_prefactor([c, a + b - c], [a, b]) * _power(1 - z, c - a - b),
            ParameterSet(c - a, c - b, c - a - b + 1),
            1 - z,
        )
        return ConnectionExpansion((t1, t2))
    if relation_id == "b5":
        if _near_integer(b - a):
            raise DegenerateConnection(
                f"b5 is logarithmic/unstable for integer b-a (got {b - a})"
            )
        if z.imag == 0 and z.real >= 0:
            raise DomainError("b5 requires |phase(-z)| < pi (z off [0, inf))")
        common = _power(1 - z, c - a - b)
        t1 = ExpansionTerm(
            _gamma_prefactor([1 - a, b - c + 1], [1 - c, b - a + 1])
            * _power(-z, a - c)
            * common,
            ParameterSet(1 - a, c - a, b - a + 1),
            1 / z,
        )
        t2 = ExpansionTerm(
            -_gamma_prefactor([c - 1, b - c + 1, 1 - a], [b, c - a, 1 - c])
            * _power(-z, 1 - c)
            * common,
            ParameterSet(1 - a, 1 - b, 2 - c),
            z,
        )
        return ConnectionExpansion((t1, t2))
    raise ValueError(f"unknown relation {relation_id!r}")


# Composition chains producing an expansion whose every term carries the
# requested series argument.  A single two-term step appears at most once,
# so expansions never exceed two terms.
_CHAINS = {
    "z": (),
    "z/(z-1)": ("i5",),
    "1-z": ("b2",),
    "1/(1-z)": ("i5", "b2"),
    "1/z": ("i5", "b2", "i5"),
    "(z-1)/z": ("b2", "i5"),
}


def expand_to(p: ParameterSet, z: complex, kind: str) -> ConnectionExpansion:
    """Expansion of 2F1(p; z) with every term at the transformed argument
    of the given kind, built by composing the basic relations."""
    if kind not in _CHAINS:
        raise ValueError(f"no expansion chain for argument kind {kind!r}")
    terms = [ExpansionTerm(1 + 0j, p, z)]
    for rel in _CHAINS[kind]:
        new_terms = []
        for t in terms:
            if t.prefactor == 0:
                continue
            sub = apply_connection(rel, t.params, t.argument)
            for s in sub:
                new_terms.append(
                    ExpansionTerm(t.prefactor * s.prefactor, s.params, s.argument)
                )
        terms = new_terms
    return ConnectionExpansion(tuple(terms))
