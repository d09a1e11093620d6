"""Characteristic roots, minimal/dominant classification per region of
the z-plane, and numeric tracing of the |t1| = |t2| boundary curves.

Roots carry the labeling of the source analysis (t1 is not necessarily
the larger root); the classification maps solution labels F/G/H/J onto
whichever root they track per form and recursion direction.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryIndeterminate, SingularPoint, TraceFailure
from .kernels import BASIC_FORMS, coefficient_limits

DEFAULT_BOUNDARY_BAND = 1e-3


@dataclass(frozen=True)
class CharacteristicData:
    t1: complex
    t2: complex
    alpha: complex
    beta: complex

    def dominant_root(self) -> complex:
        return self.t1 if abs(self.t1) >= abs(self.t2) else self.t2

    def subdominant_root(self) -> complex:
        return self.t2 if abs(self.t1) >= abs(self.t2) else self.t1


@dataclass(frozen=True)
class SolutionLabel:
    tag: str  # F | G | H | J


F, G, H, J = (SolutionLabel(t) for t in "FGHJ")


@dataclass(frozen=True)
class RegionClassification:
    relation: str  # t1_dominates | t2_dominates | boundary
    minimal: SolutionLabel | None
    dominant: SolutionLabel | None
    no_minimal_pair: bool = False


@dataclass(frozen=True)
class BoundarySample:
    z: complex
    defect: float  # | |t1| - |t2| |


def characteristic_roots(form: int, z: complex) -> CharacteristicData:
    """Both zeros of t**2 + alpha*t + beta at z, in the source labeling."""
    z = complex(z)
    if z == 1:
        raise SingularPoint("characteristic roots singular at z = 1")
    if form == 13 and z == 0:
        raise SingularPoint("form 13 roots singular at z = 0")
    alpha, beta = coefficient_limits(form, z)
    if form == 2:
        s = cmath.sqrt(z)
        t1 = 1 / (1 - s) ** 2 if s != 1 else complex("inf")
        t2 = 1 / (1 + s) ** 2
    elif form == 3:
        w = cmath.sqrt(8 * z + 1)
        t1 = 32 * (1 + w) / (3 + w) ** 3
        t2 = 32 * (1 - w) / (3 - w) ** 3
    elif form == 5:
        t1, t2 = 1 + 0j, 1 / (1 - z)
    elif form == 6:
        t1, t2 = 1 + 0j, -4 * z / (1 - z) ** 2
    else:
        t1, t2 = 1 + 0j, (z - 1) / z
    return CharacteristicData(t1, t2, alpha, beta)


# Per (form, direction): solution labels tracking (t1, t2).  Minimal is
# the label on the smaller root.  Form 6 forward excludes F (never
# minimal): the satisfactory pair there is (G, H).
_PAIRS = {
    (2, "forward"): (F, G),
    (3, "forward"): (G, F),
    (3, "backward"): (F, G),
    (5, "forward"): (G, F),
    (6, "forward"): (G, H),
    (6, "backward"): (F, G),
    (13, "forward"): (F, G),
}


def classify(
    form: int,
    z: complex,
    direction: str = "forward",
    boundary_band: float = DEFAULT_BOUNDARY_BAND,
) -> RegionClassification:
    """Which labeled solution is minimal/dominant at z.

    Within `boundary_band` (relative) of |t1| = |t2| the distinction
    disappears: form 2 reports no minimal pair there (its boundary is the
    whole region z <= 0), every other form raises BoundaryIndeterminate.
    """
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be forward or backward, got {direction!r}")
    if (form, direction) not in _PAIRS and (form, direction) != (13, "backward"):
        raise ValueError(f"form {form} has no {direction} classification")
    roots = characteristic_roots(form, z)
    m1, m2 = abs(roots.t1), abs(roots.t2)
    gap = abs(m1 - m2) / max(m1, m2)
    if gap <= boundary_band:
        if form == 2:
            return RegionClassification("boundary", None, None, no_minimal_pair=True)
        raise BoundaryIndeterminate(
            f"form {form}: z={z} lies within the |t1|=|t2| band (gap {gap:.2e})"
        )
    relation = "t1_dominates" if m1 > m2 else "t2_dominates"
    if form == 13 and direction == "backward":
        # F is dominant on both sides; the minimal companion differs.
        minimal = H if z.real > 0.5 else J
        return RegionClassification(relation, minimal, F)
    on_t1, on_t2 = _PAIRS[(form, direction)]
    if m1 > m2:
        return RegionClassification(relation, on_t2, on_t1)
    return RegionClassification(relation, on_t1, on_t2)


def _defect(form: int, z: complex) -> float:
    r = characteristic_roots(form, z)
    return abs(abs(r.t1) - abs(r.t2))


def _signed_gap(form: int, z: complex) -> float:
    r = characteristic_roots(form, z)
    return abs(r.t1) - abs(r.t2)


def _bisect_on_ray(form: int, origin: complex, direction: complex, r_lo: float, r_hi: float):
    f_lo = _signed_gap(form, origin + r_lo * direction)
    f_hi = _signed_gap(form, origin + r_hi * direction)
    if f_lo == 0.0:
        return origin + r_lo * direction
    if f_hi == 0.0:
        return origin + r_hi * direction
    if (f_lo > 0) == (f_hi > 0):
        raise TraceFailure(
            f"form {form}: no |t1|=|t2| crossing bracketed on ray from {origin}"
        )
    for _ in range(200):
        mid = 0.5 * (r_lo + r_hi)
        fm = _signed_gap(form, origin + mid * direction)
        if fm == 0.0:
            break
        if (fm > 0) == (f_lo > 0):
            r_lo, f_lo = mid, fm
        else:
            r_hi = mid
        if r_hi - r_lo < 1e-16 * max(1.0, r_hi):
            break
    return origin + 0.5 * (r_lo + r_hi) * direction


def _bisect_on_ray_u3(direction: complex) -> complex:
    def gap(r: float) -> float:
        return _signed_gap(3, (r * direction - 1) / 8)

    # At radii far below the lobe scale the root gap is pure rounding
    # noise, so the inner end of the bracket stays at 1e-4.
    r_lo, r_hi = 1e-4, 2.5
    f_lo, f_hi = gap(r_lo), gap(r_hi)
    if (f_lo > 0) == (f_hi > 0):
        raise TraceFailure(
            f"form 3: no |t1|=|t2| crossing bracketed along arg(8z+1)={cmath.phase(direction):.4f}"
        )
    for _ in range(200):
        mid = 0.5 * (r_lo + r_hi)
        fm = gap(mid)
        if fm == 0.0:
            return mid * direction
        if (fm > 0) == (f_lo > 0):
            r_lo, f_lo = mid, fm
        else:
            r_hi = mid
        if r_hi - r_lo < 1e-16:
            break
    return 0.5 * (r_lo + r_hi) * direction


def lobe_parameterization_form3(theta: float) -> complex:
    """UNVERIFIED: a closed-form polar parameterization of the form-3
    boundary, r = -9 + 6*sqrt(3)*cos(theta/2) in the 8z+1 plane.  It
    disagrees with the curve implied by the root formulas (which
    trace_boundary uses as ground truth); kept only for comparison."""
    r = -9 + 6 * math.sqrt(3) * math.cos(theta / 2)
    return (r * cmath.exp(1j * theta) - 1) / 8


def trace_boundary(form: int, samples: int = 64) -> list:
    """Points on the |t1| = |t2| curve of a basic form.

    Forms 2, 5, 13 have closed-form curves (negative real axis, circle
    |1-z| = 1, line Re z = 1/2) returned analytically; forms 3 and 6 are
    traced by bisection along rays, with the root formulas as ground
    truth.
    """
    if form not in BASIC_FORMS:
        raise ValueError(f"not a basic form: {form}")
    if samples < 2:
        raise ValueError("samples must be >= 2")
    points: list[BoundarySample] = []
    if form == 2:
        for x in np.linspace(0.0, 10.0, samples):
            z = complex(-x, 0.0)
            points.append(BoundarySample(z, _defect(form, z)))
    elif form == 5:
        for t in np.linspace(0.0, 2 * math.pi, samples, endpoint=False):
            z = 1 + cmath.exp(1j * t)
            if z == 1:
                continue
            points.append(BoundarySample(z, _defect(form, z)))
    elif form == 13:
        for y in np.linspace(-5.0, 5.0, samples):
            z = complex(0.5, y)
            points.append(BoundarySample(z, _defect(form, z)))
    elif form == 3:
        # Lobe from the double-root point z = -1/8 around to z ~ 0.049.
        # On z < -1/8 the roots are conjugate (|t1| = |t2| identically),
        # so rays are cast in the u = 8z + 1 plane from u = 0, where a
        # sign change is guaranteed for |arg u| below ~pi/3.
        phi_max = math.pi / 3 - 0.01
        angles = list(np.linspace(-phi_max, phi_max, max(samples - 2, 1)))
        angles.append(0.0)  # keep the real-axis crossing in every trace
        for phi in angles:
            direction = cmath.exp(1j * phi)
            u = _bisect_on_ray_u3(direction)
            z = (u - 1) / 8
            points.append(BoundarySample(z, _defect(form, z)))
        points.append(BoundarySample(-0.125 + 0j, _defect(form, -0.125)))
    else:  # form 6: two loops with common point -1
        half = max(samples // 2, 1)
        angles6 = [t for t in np.linspace(-math.pi, math.pi, half, endpoint=False)
                   if abs(abs(t) - math.pi) >= 1e-12]
        angles6.append(0.0)  # keep the real-axis crossings in every trace
        for t in angles6:
            direction = cmath.exp(1j * t)
            z_in = _bisect_on_ray(form, 0j, direction, 1e-9, 1 - 1e-9)
            z_out = _bisect_on_ray(form, 0j, direction, 1 + 1e-9, 50.0)
            points.append(BoundarySample(z_in, _defect(form, z_in)))
            points.append(BoundarySample(z_out, _defect(form, z_out)))
        points.append(BoundarySample(-1 + 0j, _defect(form, -1 + 0j)))
    return points


@dataclass(frozen=True)
class GridNode:
    z: complex
    status: str  # classified | boundary | singular
    classification: RegionClassification | None


def iter_region_grid(form, window, step, direction="forward", boundary_band=DEFAULT_BOUNDARY_BAND):
    """Row-major iteration (imaginary part ascending, then real part) of
    classifications over a rectangular window."""
    re_min, re_max, im_min, im_max = window
    if step <= 0:
        raise ValueError("step must be positive")
    n_re = int(math.floor((re_max - re_min) / step + 1e-9)) + 1
    n_im = int(math.floor((im_max - im_min) / step + 1e-9)) + 1
    for j in range(n_im):
        for i in range(n_re):
            z = complex(re_min + i * step, im_min + j * step)
            try:
                cls = classify(form, z, direction, boundary_band)
            except BoundaryIndeterminate:
                yield GridNode(z, "boundary", None)
                continue
            except SingularPoint:
                yield GridNode(z, "singular", None)
                continue
            status = "boundary" if cls.relation == "boundary" else "classified"
            yield GridNode(z, status, cls)


def region_grid(form, window, step, direction="forward", boundary_band=DEFAULT_BOUNDARY_BAND):
    return list(iter_region_grid(form, window, step, direction, boundary_band))
