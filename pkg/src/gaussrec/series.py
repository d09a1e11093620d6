"""Direct power-series evaluation of 2F1."""

from .errors import NoConvergence, PoleOfGamma
from .types import ParameterSet, SeriesResult

DEFAULT_TOL = 1e-15
DEFAULT_MAX_TERMS = 5000

_INT_TOL = 1e-12


def _terminating_index(x: complex):
    """Index m >= 0 with x + m == 0 when x is a non-positive integer, else None."""
    if abs(x.imag) > _INT_TOL:
        return None
    m = round(x.real)
    if m > 0 or abs(x.real - m) > _INT_TOL:
        return None
    return -m


def series_f21(
    p: ParameterSet,
    z: complex,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Sum the hypergeometric power series at z.

    Requires |z| < 1 (|z| = 1 tolerated: convergence is then driven by the
    term decay and guarded by max_terms) unless the series terminates
    because a or b is a non-positive integer.

    The stopping rule demands two consecutive terms below tol*|sum|; when
    Re(c) < 0 summation additionally continues past the index where the
    (c)_k Pochhammer factor crosses its near-zero values, since terms can
    rise sharply again there.
    """
    a, b, c = complex(p.a), complex(p.b), complex(p.c)
    z = complex(z)

    n_stop = _terminating_index(a)
    mb = _terminating_index(b)
    if mb is not None and (n_stop is None or mb < n_stop):
        n_stop = mb

    if abs(z) > 1.0 and n_stop is None:
        raise NoConvergence(f"series diverges at |z|={abs(z):.3f} > 1")

    # No early stop while (c)_k can still pass near zero and re-inflate terms.
    min_k = 0
    if c.real < 0:
        min_k = int(-c.real) + 10
        if n_stop is not None:
            min_k = min(min_k, n_stop)

    term = 1 + 0j
    total = 1 + 0j
    peak = 1.0  # largest term magnitude: cancellation floor for est_error
    below = 0
    k = 0

    def _estimate(truncation: float) -> float:
        scale = abs(total) if total != 0 else 1.0
        return truncation / scale + 2.3e-16 * peak / scale

    while k < max_terms:
        if n_stop is not None and k >= n_stop:
            return SeriesResult(total, _estimate(0.0), k + 1)
        ck = c + k
        if abs(ck) == 0.0:
            raise PoleOfGamma(f"series undefined: c+k = 0 at k={k}")
        term *= (a + k) * (b + k) / (ck * (k + 1)) * z
        total += term
        peak = max(peak, abs(term))
        k += 1
        if abs(term) <= tol * abs(total) and k >= min_k:
            below += 1
            if below >= 2:
                return SeriesResult(total, _estimate(abs(term)), k + 1)
        else:
            below = 0
    raise NoConvergence(f"series: no convergence within {max_terms} terms")
