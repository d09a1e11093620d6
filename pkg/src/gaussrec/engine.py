"""Recursion runner with overflow-safe scaling, direction advice, the
backward c-recursion evaluator, and the Jacobi polynomial application."""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NoConvergence, StepSingular
from .kernels import coefficients
from .series import series_f21
from .types import ParameterSet

# Mantissas are renormalized into [2**-512, 2**512).
_EXP_LIMIT = 512


def _normalize(mantissa: complex, exponent: int) -> tuple:
    m = abs(mantissa)
    if m == 0.0:
        return 0j, 0
    k = int(math.floor(math.log2(m)))
    if abs(k) >= _EXP_LIMIT:
        mantissa *= 2.0 ** (-k)
        exponent += k
    return mantissa, exponent


@dataclass(frozen=True)
class ScaledValue:
    """mantissa * 2**exponent, with |mantissa| kept in a safe range."""

    mantissa: complex
    exponent: int

    def to_complex(self) -> complex:
        return self.mantissa * 2.0**self.exponent

    def log_abs(self) -> float:
        if self.mantissa == 0:
            return float("-inf")
        return math.log(abs(self.mantissa)) + self.exponent * math.log(2.0)


@dataclass(frozen=True)
class RecursionRun:
    """Sequence y_n for n in n_from..n_to (inclusive, possibly descending)."""

    n_from: int
    n_to: int
    direction: str  # forward | backward
    values: tuple  # of ScaledValue, indexed from n_from toward n_to

    def index(self, n: int) -> int:
        step = 1 if self.n_to >= self.n_from else -1
        i = (n - self.n_from) * step
        if not 0 <= i < len(self.values):
            raise IndexError(f"n={n} outside run range {self.n_from}..{self.n_to}")
        return i

    def value(self, n: int) -> ScaledValue:
        return self.values[self.index(n)]

    def ratio(self, n: int) -> complex:
        """y_{n+1} / y_n, formed from the scaled pairs (exact in exponents)."""
        ya = self.value(n)
        yb = self.value(n + 1)
        if ya.mantissa == 0:
            raise ZeroDivisionError(f"y_{n} = 0")
        return yb.mantissa / ya.mantissa * 2.0 ** (yb.exponent - ya.exponent)


def run_recursion(
    form: int,
    p: ParameterSet,
    z: complex,
    seeds: tuple,
    n_from: int,
    n_to: int,
) -> RecursionRun:
    """Run the basic-form recurrence from two seed values.

    seeds = (y at n_from, y at the next index toward n_to).  Forward runs
    (n_to > n_from) solve for y_{n+1}; backward runs solve for y_{n-1}.
    Raises StepSingular (with the offending index) when the leading
    coefficient vanishes.
    """
    if n_to == n_from:
        raise ValueError("run needs at least two indices")
    step = 1 if n_to > n_from else -1
    direction = "forward" if step == 1 else "backward"
    y0 = _normalize(complex(seeds[0]), 0)
    y1 = _normalize(complex(seeds[1]), 0)
    values = [ScaledValue(*y0), ScaledValue(*y1)]
    n = n_from + step  # index of the most recent value
    while n != n_to:
        co = coefficients(form, p, z, n)
        lead = co.C if step == 1 else co.A
        if lead == 0:
            raise StepSingular(n)
        prev, cur = values[-2], values[-1]
        # work at cur's exponent; adjacent exponents stay close
        shift = 2.0 ** (prev.exponent - cur.exponent)
        if step == 1:
            nxt = -(co.A * prev.mantissa * shift + co.B * cur.mantissa) / lead
        else:
            nxt = -(co.B * cur.mantissa + co.C * prev.mantissa * shift) / lead
        values.append(ScaledValue(*_normalize(nxt, cur.exponent)))
        n += step
    return RecursionRun(n_from, n_to, direction, tuple(values))


@dataclass(frozen=True)
class DirectionAdvice:
    stable_direction: str  # forward | backward | either
    reason: str


def advise_direction(s, z: complex):
    """Stable recursion direction for the family selected by shift vector s.

    Backward when the family's own function is the minimal solution of the
    reduced basic form at the transformed argument, forward when dominant,
    either when no minimal solution exists.
    """
    from .domains import classify
    from .reduction import family_prefactor, reduce_case

    plan = reduce_case(s)
    # The gauge prefactor of the reduction multiplies every solution alike,
    # so dominance relations transfer; only the argument mapping matters.
    probe = ParameterSet(0.31 + 0j, 0.47 + 0j, 1.07 + 0j)
    _, _, z_basic = family_prefactor(plan, probe, z, 0)
    cls = classify(plan.basic_form, z_basic, plan.direction)
    where = f"form {plan.basic_form} {plan.direction} at transformed argument {z_basic}"
    if cls.no_minimal_pair:
        return DirectionAdvice(
            "either", f"no minimal solution ({where}); only rounding errors apply"
        )
    if cls.minimal is not None and cls.minimal.tag == "F":
        return DirectionAdvice("backward", f"family function is minimal ({where})")
    return DirectionAdvice("forward", f"family function is dominant ({where})")


def eval_by_c_recursion(p: ParameterSet, z: complex, n_seed="auto" ) -> complex:
    """Evaluate 2F1(p; z) by backward recursion in c from series seeds.

    Seeds 2F1(a, b; c+N; z) at N = n_seed and n_seed - 1 directly by power
    series (fast for large c+N) and recurses down to n = 0.  This covers
    the light regions near exp(+-i*pi/3) where no series argument is small.
    """
    z = complex(z)
    if n_seed == "auto":
        n_seed = _auto_seed(p, z)
    top = series_f21(ParameterSet(p.a, p.b, p.c + n_seed), z, max_terms=2000)
    below = series_f21(ParameterSet(p.a, p.b, p.c + n_seed - 1), z, max_terms=2000)
    run = run_recursion(13, p, z, (top.value, below.value), n_seed, 0)
    return run.value(0).to_complex()


def _auto_seed(p: ParameterSet, z: complex, start: int = 20, limit: int = 200) -> int:
    """Smallest N >= start whose seed series converges within 60 terms."""
    for n in range(start, limit):
        try:
            r = series_f21(ParameterSet(p.a, p.b, p.c + n), z, max_terms=60)
        except NoConvergence:
            continue
        if r.terms_used <= 60:
            return n
    raise NoConvergence(f"no series-computable seed index below {limit}")


def jacobi_eval(n: int, alpha: float, beta: float, x: float) -> float:
    """Jacobi polynomial P_n^(alpha, beta)(x) for x in (-1, 1].

    Evaluated through the hypergeometric family at argument
    z = (x-1)/(x+1) <= 0, run in the forward direction, which is well
    conditioned there (no minimal solution on the negative real axis).
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    if alpha <= -1 or beta <= -1:
        raise DomainError("alpha and beta must exceed -1")
    if x <= -1:
        raise DomainError("x <= -1 maps to an infinite argument")
    x = float(x)
    z = (x - 1.0) / (x + 1.0)
    lg = math.lgamma
    log_binom = lg(n + alpha + 1) - lg(alpha + 1) - lg(n + 1)

    # Family member m: F(alpha+1+m, alpha+beta+1+m; alpha+1; z), the
    # form-2 recursion at z <= 0, seeded from the terminating polynomial
    # representation F(-m, -beta-m; alpha+1; z) via the same gauge factor.
    p2 = ParameterSet(alpha + 1 + 0j, alpha + beta + 1 + 0j, alpha + 1 + 0j)

    def terminating(m):
        return series_f21(ParameterSet(-m + 0j, -beta - m + 0j, alpha + 1 + 0j), z).value

    log1mz = math.log(1.0 - z)  # 1 - z >= 1 here
    if n <= 1:
        return math.exp(log_binom) * ((1.0 + x) / 2.0) ** n * terminating(n).real
    seeds = (
        terminating(0) * math.exp(-(alpha + beta + 1) * log1mz),
        terminating(1) * math.exp(-(alpha + beta + 3) * log1mz),
    )
    run = run_recursion(2, p2, z, seeds, 0, n)
    y = run.value(n)
    # P_n = binom * ((1+x)/2)^n * (1-z)^(alpha+beta+1+2n) * y_n, and
    # ((1+x)/2)^n (1-z)^n = 1, so the n-dependent powers collapse.
    log_pref = log_binom + (alpha + beta + 1 + n) * log1mz
    if y.mantissa == 0:
        return 0.0
    return (cmath.exp(log_pref + y.log_abs()) * (y.mantissa / abs(y.mantissa))).real
