"""Shared oracle helpers: all reference values come from mpmath, an
implementation independent of this package."""

import mpmath as mp
import pytest


@pytest.fixture(scope="session")
def oracle_f21():
    def _eval(a, b=None, c=None, z=None, dps=40):
        if hasattr(a, "c"):  # called as (params, z)
            a, b, c, z = a.a, a.b, a.c, b
        with mp.workdps(dps):
            return complex(mp.hyp2f1(a, b, c, z))

    return _eval


@pytest.fixture(scope="session")
def oracle_gamma():
    def _eval(z, dps=40):
        with mp.workdps(dps):
            return complex(mp.gamma(z))

    return _eval


def rel_err(value, reference) -> float:
    scale = max(abs(reference), 1e-300)
    return abs(value - reference) / scale
