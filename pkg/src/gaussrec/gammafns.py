"""Complex log-gamma support.

All gamma-ratio prefactors in the package are assembled as exp(sum of
log-gamma terms) so that shifts up to n ~ 1e4 never overflow.
"""

import cmath
import math

import scipy.special as sp

from .errors import PoleOfGamma

_POLE_TOL = 1e-13


def _is_nonpositive_integer(z: complex, tol: float = _POLE_TOL) -> bool:
    z = complex(z)
    if z.real > 0.5:
        return False
    near = round(z.real)
    scale = max(1.0, abs(z))
    return near <= 0 and abs(z.real - near) <= tol * scale and abs(z.imag) <= tol * scale


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    Raises PoleOfGamma at the poles z = 0, -1, -2, ...  For negative real
    non-integer z the result is complex; exp(log_gamma(z)) always
    reproduces Gamma(z).
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleOfGamma(f"log_gamma pole at z={z}")
    return complex(sp.loggamma(z))


def gamma_fn(z: complex) -> complex:
    """Gamma(z), through the log representation."""
    return cmath.exp(log_gamma(z))


def log_gamma_ratio(numerators, denominators) -> complex:
    """log of prod Gamma(num_i) / prod Gamma(den_j).

    Raises PoleOfGamma when a numerator argument sits on a pole.  A pole in
    a denominator makes the ratio vanish; callers detect that separately
    (the ratio has no finite log), so here it also raises.
    """
    total = 0j
    for x in numerators:
        total += log_gamma(x)
    for x in denominators:
        total -= log_gamma(x)
    return total


def denominator_pole(arguments, tol: float = 1e-8) -> bool:
    """True when some argument is within `tol` of a non-positive integer,
    i.e. a gamma factor in a denominator annihilates the whole term."""
    return any(_is_nonpositive_integer(x, tol) for x in arguments)


def reflect_negative_gamma(a: complex, n: int) -> complex:
    """Log-space representation of Gamma(a - n) for non-integer a.

    Uses the reflection identity
        Gamma(a - n) = (-1)^n pi / (sin(pi a) Gamma(n + 1 - a)),
    so only the gamma of a positive-real-part argument is ever formed.
    Returns L with exp(L) = Gamma(a - n).
    """
    a = complex(a)
    if abs(a.imag) <= 1e-8 and abs(a.real - round(a.real)) <= 1e-8:
        raise PoleOfGamma(f"reflection undefined at integer a={a}")
    sin_term = cmath.sin(cmath.pi * a)
    # (-1)^n enters as i*pi*(n mod 2): exact sign, no n*pi rounding.
    return (
        math.log(math.pi)
        - cmath.log(sin_term)
        - log_gamma(n + 1 - a)
        + 1j * math.pi * (n % 2)
    )
