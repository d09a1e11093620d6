"""Reference evaluation of 2F1 over the complex plane.

Dispatch: direct series when |z| is small, otherwise the connection
expansion whose transformed argument has the smallest modulus below rho.
Two-term expansions can cancel catastrophically for extreme parameters;
each candidate therefore carries a cancellation-aware error estimate and
a poor one falls through to the next-best argument.  When no argument is
small enough (the light regions around exp(+-i*pi/3)) evaluation falls
back to backward recursion in c.
"""

from dataclasses import dataclass

from .connection import (
    ARGUMENT_KINDS,
    DEFAULT_RHO,
    argument_modulus,
    expand_to,
)
from .engine import eval_by_c_recursion
from .errors import DegenerateConnection, SingularPoint
from .series import DEFAULT_MAX_TERMS, DEFAULT_TOL, series_f21
from .types import ParameterSet

_EPS = 2.3e-16


@dataclass(frozen=True)
class EvalResult:
    value: complex
    method: str  # argument kind used, or "c-recursion"
    est_error: float


def _eval_via_kind_detailed(p, z, kind, tol, max_terms):
    """(value, relative error estimate) through one argument kind.

    The estimate folds in both the series truncation errors and the
    cancellation between the expansion's terms (ratio of largest term to
    the final sum).
    """
    total = 0j
    scale = 0.0
    err_abs = 0.0
    for term in expand_to(p, z, kind):
        if term.prefactor == 0:
            continue
        r = series_f21(term.params, term.argument, tol=tol, max_terms=max_terms)
        piece = term.prefactor * r.value
        total += piece
        scale = max(scale, abs(piece))
        err_abs += abs(piece) * max(r.est_error, _EPS)
    if total == 0:
        return total, err_abs + scale * _EPS
    return total, (err_abs + scale * _EPS) / abs(total)


def eval_via_kind(
    p: ParameterSet,
    z: complex,
    kind: str,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> complex:
    """Evaluate 2F1(p; z) through the expansion at one argument kind,
    summing each term by power series at the transformed argument."""
    return _eval_via_kind_detailed(p, z, kind, tol, max_terms)[0]


def eval_f21_detailed(
    p: ParameterSet,
    z: complex,
    rho: float = DEFAULT_RHO,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Evaluate 2F1(a, b; c; z) anywhere off z = 1 (z = 1 itself is allowed
    only when Re(c-a-b) > 0).

    Candidate argument kinds with modulus below rho are tried in order of
    increasing modulus; a DegenerateConnection or a poor cancellation
    estimate falls through to the next candidate, and the best-estimated
    value wins.  With no usable candidate the backward c-recursion takes
    over.
    """
    z = complex(z)
    if z == 0:
        return EvalResult(1 + 0j, "z", 0.0)
    if z == 1 and (p.c - p.a - p.b).real <= 0:
        raise SingularPoint("2F1 is singular at z=1 for Re(c-a-b) <= 0")
    candidates = sorted(
        (argument_modulus(kind, z), kind)
        for kind in ARGUMENT_KINDS
        if argument_modulus(kind, z) < rho
    )
    accept = 100 * max(tol, _EPS)
    best = None
    last_degenerate = None
    for modulus, kind in candidates:
        try:
            value, est = _eval_via_kind_detailed(p, z, kind, tol, max_terms)
        except DegenerateConnection as exc:
            last_degenerate = exc
            continue
        if best is None or est < best.est_error:
            best = EvalResult(value, kind, est)
        if est <= accept:
            return best
    if best is not None:
        return best
    if candidates:
        raise last_degenerate
    return EvalResult(eval_by_c_recursion(p, z), "c-recursion", tol)


def eval_f21(
    p: ParameterSet,
    z: complex,
    rho: float = DEFAULT_RHO,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> complex:
    return eval_f21_detailed(p, z, rho=rho, tol=tol, max_terms=max_terms).value
