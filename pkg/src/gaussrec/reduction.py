"""Reduction of the 26 shift vectors to the 5 basic recursion forms.

Every admissible shift direction (e1, e2, e3) maps to one of the basic
forms 2, 3, 5, 6, 13 through a short chain of symmetry / argument
transformations, possibly followed by a reversal of the recursion
direction.  Chains that pass through several table rows are flattened at
import time and verified against the shift-vector algebra.
"""

import cmath
from dataclasses import dataclass

from .errors import SingularPrefactor, VoidShift
from .kernels import shifted_params
from .types import ParameterSet

STEP_KINDS = ("symmetry", "i5", "i6", "i7", "sign-flip")


@dataclass(frozen=True)
class ShiftVector:
    e1: int
    e2: int
    e3: int

    def __post_init__(self):
        for e in (self.e1, self.e2, self.e3):
            if e not in (-1, 0, 1):
                raise ValueError(f"shift entries must be in {{-1, 0, 1}}, got {self}")
        if self.e1 == self.e2 == self.e3 == 0:
            raise VoidShift("the (0, 0, 0) shift selects no family")

    def as_tuple(self):
        return (self.e1, self.e2, self.e3)


@dataclass(frozen=True)
class ReductionPlan:
    basic_form: int
    direction: str  # forward | backward
    steps: tuple  # of step kinds; the direction field carries any sign flip
    shift: tuple  # the (e1, e2, e3) this plan reduces


_BASIC_PATTERNS = {
    (1, 1, 0): 2,
    (1, 1, -1): 3,
    (1, 0, 0): 5,
    (1, 0, -1): 6,
    (0, 0, 1): 13,
}


def _apply_step_to_shift(step: str, e: tuple) -> tuple:
    e1, e2, e3 = e
    if step == "symmetry":
        return (e2, e1, e3)
    if step == "i5":
        return (e1, e3 - e2, e3)
    if step == "i6":
        return (e3 - e1, e2, e3)
    if step == "i7":
        return (e3 - e1, e3 - e2, e3)
    raise ValueError(f"unknown step {step!r}")


# Flattened chains: shift -> (steps, backward?).  Derived from the
# row-by-row table of single-step equivalences and checked below.
_TABLE = {
    (1, 1, 1): (("i7",), False),
    (1, 1, 0): ((), False),
    (1, 1, -1): ((), False),
    (1, 0, 1): (("i6",), False),
    (1, 0, 0): ((), False),
    (1, 0, -1): ((), False),
    (1, -1, 1): (("i6", "symmetry"), True),
    (1, -1, 0): (("i5",), False),
    (1, -1, -1): (("i5",), False),
    (0, 1, 1): (("i5",), False),
    (0, 1, 0): (("symmetry",), False),
    (0, 1, -1): (("symmetry",), False),
    (0, 0, 1): ((), False),
    (0, 0, -1): ((), True),
    (0, -1, 1): (("symmetry",), True),
    (0, -1, 0): (("i5", "symmetry"), False),
    (0, -1, -1): (("i5",), True),
    (-1, 1, 1): (("symmetry", "i6", "symmetry"), True),
    (-1, 1, 0): (("symmetry", "i5"), False),
    (-1, 1, -1): (("symmetry", "i5"), False),
    (-1, 0, 1): ((), True),
    (-1, 0, 0): (("symmetry", "i5", "symmetry"), False),
    (-1, 0, -1): (("symmetry", "i5"), True),
    (-1, -1, 1): ((), True),
    (-1, -1, 0): (("i7",), False),
    (-1, -1, -1): (("i7",), True),
}


def _resolve(e: tuple):
    steps, backward = _TABLE[e]
    cur = e
    for s in steps:
        cur = _apply_step_to_shift(s, cur)
    if backward:
        cur = tuple(-x for x in cur)
    form = _BASIC_PATTERNS.get(cur)
    if form is None:
        raise AssertionError(f"reduction table broken for {e}: reached {cur}")
    return ReductionPlan(form, "backward" if backward else "forward", steps, e)


_PLANS = {e: _resolve(e) for e in _TABLE}


def reduce_case(s: ShiftVector) -> ReductionPlan:
    """Reduction plan for a shift vector: target basic form, recursion
    direction, and the transformation chain reaching it."""
    return _PLANS[s.as_tuple()]


def _apply_step_to_params(step: str, p: ParameterSet, z: complex, log_pref: complex):
    a, b, c = p.a, p.b, p.c
    if step == "symmetry":
        return ParameterSet(b, a, c), z, log_pref
    one_minus = 1 - z
    if one_minus == 0:
        raise SingularPrefactor("transformation prefactor singular at z = 1")
    log1mz = cmath.log(one_minus)
    if step == "i5":
        return ParameterSet(a, c - b, c), z / (z - 1), log_pref - a * log1mz
    if step == "i6":
        return ParameterSet(c - a, b, c), z / (z - 1), log_pref - b * log1mz
    if step == "i7":
        return ParameterSet(c - a, c - b, c), z, log_pref + (c - a - b) * log1mz
    raise ValueError(f"unknown step {step!r}")


def family_prefactor(plan: ReductionPlan, p: ParameterSet, z: complex, n: int = 0):
    """Map member n of the original family onto the basic-form family.

    Returns (prefactor, p_basic, z_basic) with

        F(original params at shift n; z)
            = prefactor * F(basic-form params of (p_basic, m); z_basic),

    where m = n for forward plans and m = -n for backward plans, and the
    prefactor is assembled in log space.  p_basic is the base (n = 0)
    parameter triple of the basic family.
    """
    shift = plan.shift
    # apply the chain to the base parameters for p_basic / z_basic
    cur_p, cur_z, _ = ParameterSet(p.a, p.b, p.c), complex(z), 0j
    for step in plan.steps:
        cur_p, cur_z, _ = _apply_step_to_params(step, cur_p, cur_z, 0j)
    p_basic, z_basic = cur_p, cur_z
    # apply it to the shifted member for the prefactor
    pn = ParameterSet(p.a + shift[0] * n, p.b + shift[1] * n, p.c + shift[2] * n)
    cur_p, cur_z, log_pref = pn, complex(z), 0j
    for step in plan.steps:
        cur_p, cur_z, log_pref = _apply_step_to_params(step, cur_p, cur_z, log_pref)
    return cmath.exp(log_pref), p_basic, z_basic


def basic_member(plan: ReductionPlan, p_basic: ParameterSet, n: int) -> ParameterSet:
    """Parameters of the basic-family member matching original shift n."""
    m = n if plan.direction == "forward" else -n
    return shifted_params(plan.basic_form, p_basic, m)
