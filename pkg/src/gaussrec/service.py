"""HTTP service exposing evaluation, classification, curves, and grids.

All endpoints accept and return JSON; complex numbers travel as separate
real/imaginary fields.  Region grids stream as newline-delimited JSON so
large windows stay memory-bounded.  Domain errors map to HTTP 400 with
the error class name in the body.
"""

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse
from pydantic import BaseModel, Field

from . import __version__
from .connection import DEFAULT_RHO
from .domains import (
    DEFAULT_BOUNDARY_BAND,
    characteristic_roots,
    classify,
    iter_region_grid,
    trace_boundary,
)
from .engine import advise_direction, run_recursion
from .errors import GaussRecError
from .evaluate import eval_f21_detailed
from .kernels import coefficients
from .reduction import ShiftVector, reduce_case
from .types import ParameterSet


class ParamsModel(BaseModel):
    a_re: float
    a_im: float = 0.0
    b_re: float
    b_im: float = 0.0
    c_re: float
    c_im: float = 0.0

    def to_params(self) -> ParameterSet:
        return ParameterSet(
            complex(self.a_re, self.a_im),
            complex(self.b_re, self.b_im),
            complex(self.c_re, self.c_im),
        )


class EvalRequest(ParamsModel):
    z_re: float
    z_im: float = 0.0
    rho: float = Field(default=DEFAULT_RHO, gt=0.0, lt=1.0)


class EvalResponse(BaseModel):
    value_re: float
    value_im: float
    method: str
    est_error: float


class RootsRequest(BaseModel):
    form: int
    z_re: float
    z_im: float = 0.0


class RootsResponse(BaseModel):
    t1_re: float
    t1_im: float
    t2_re: float
    t2_im: float
    alpha_re: float
    alpha_im: float
    beta_re: float
    beta_im: float


class ClassifyRequest(BaseModel):
    form: int
    z_re: float
    z_im: float = 0.0
    direction: str = "forward"
    boundary_band: float = DEFAULT_BOUNDARY_BAND


class ClassifyResponse(BaseModel):
    relation: str
    minimal: str | None
    dominant: str | None
    no_minimal_pair: bool


class CoeffsRequest(ParamsModel):
    form: int
    z_re: float
    z_im: float = 0.0
    n: int


class CoeffsResponse(BaseModel):
    A_re: float
    A_im: float
    B_re: float
    B_im: float
    C_re: float
    C_im: float
    n: int


class RecurseRequest(ParamsModel):
    form: int
    z_re: float
    z_im: float = 0.0
    n_from: int
    n_to: int
    seed0_re: float
    seed0_im: float = 0.0
    seed1_re: float
    seed1_im: float = 0.0


class ScaledValueModel(BaseModel):
    n: int
    mantissa_re: float
    mantissa_im: float
    exponent: int


class RecurseResponse(BaseModel):
    direction: str
    values: list[ScaledValueModel]


class BoundaryRequest(BaseModel):
    form: int
    samples: int = 64


class BoundaryPoint(BaseModel):
    re: float
    im: float
    defect: float


class BoundaryResponse(BaseModel):
    points: list[BoundaryPoint]


class GridRequest(BaseModel):
    form: int
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    step: float = Field(gt=0.0)
    direction: str = "forward"
    boundary_band: float = DEFAULT_BOUNDARY_BAND


class AdviseRequest(BaseModel):
    e1: int
    e2: int
    e3: int
    z_re: float
    z_im: float = 0.0


class AdviseResponse(BaseModel):
    stable_direction: str
    reason: str


app = FastAPI(title="gaussrec", version=__version__)


@app.exception_handler(GaussRecError)
async def domain_error_handler(request: Request, exc: GaussRecError):
    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=400,
        content={"error": "ValueError", "detail": str(exc)},
    )


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/eval", response_model=EvalResponse)
def eval_endpoint(req: EvalRequest):
    r = eval_f21_detailed(req.to_params(), complex(req.z_re, req.z_im), rho=req.rho)
    return EvalResponse(
        value_re=r.value.real,
        value_im=r.value.imag,
        method=r.method,
        est_error=r.est_error,
    )


@app.post("/roots", response_model=RootsResponse)
def roots_endpoint(req: RootsRequest):
    r = characteristic_roots(req.form, complex(req.z_re, req.z_im))
    return RootsResponse(
        t1_re=r.t1.real, t1_im=r.t1.imag,
        t2_re=r.t2.real, t2_im=r.t2.imag,
        alpha_re=r.alpha.real, alpha_im=r.alpha.imag,
        beta_re=r.beta.real, beta_im=r.beta.imag,
    )


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(req: ClassifyRequest):
    c = classify(req.form, complex(req.z_re, req.z_im), req.direction, req.boundary_band)
    return ClassifyResponse(
        relation=c.relation,
        minimal=c.minimal.tag if c.minimal else None,
        dominant=c.dominant.tag if c.dominant else None,
        no_minimal_pair=c.no_minimal_pair,
    )


@app.post("/coeffs", response_model=CoeffsResponse)
def coeffs_endpoint(req: CoeffsRequest):
    co = coefficients(req.form, req.to_params(), complex(req.z_re, req.z_im), req.n)
    return CoeffsResponse(
        A_re=co.A.real, A_im=co.A.imag,
        B_re=co.B.real, B_im=co.B.imag,
        C_re=co.C.real, C_im=co.C.imag,
        n=co.n,
    )


@app.post("/recurse", response_model=RecurseResponse)
def recurse_endpoint(req: RecurseRequest):
    seeds = (
        complex(req.seed0_re, req.seed0_im),
        complex(req.seed1_re, req.seed1_im),
    )
    run = run_recursion(
        req.form, req.to_params(), complex(req.z_re, req.z_im),
        seeds, req.n_from, req.n_to,
    )
    step = 1 if req.n_to > req.n_from else -1
    values = [
        ScaledValueModel(
            n=req.n_from + i * step,
            mantissa_re=sv.mantissa.real,
            mantissa_im=sv.mantissa.imag,
            exponent=sv.exponent,
        )
        for i, sv in enumerate(run.values)
    ]
    return RecurseResponse(direction=run.direction, values=values)


@app.post("/boundary", response_model=BoundaryResponse)
def boundary_endpoint(req: BoundaryRequest):
    pts = trace_boundary(req.form, req.samples)
    return BoundaryResponse(
        points=[BoundaryPoint(re=s.z.real, im=s.z.imag, defect=s.defect) for s in pts]
    )


@app.post("/region-grid")
def region_grid_endpoint(req: GridRequest):
    window = (req.re_min, req.re_max, req.im_min, req.im_max)

    def rows():
        for node in iter_region_grid(
            req.form, window, req.step, req.direction, req.boundary_band
        ):
            row = {
                "re": node.z.real,
                "im": node.z.imag,
                "status": node.status,
                "relation": node.classification.relation if node.classification else None,
                "minimal": (
                    node.classification.minimal.tag
                    if node.classification and node.classification.minimal
                    else None
                ),
                "dominant": (
                    node.classification.dominant.tag
                    if node.classification and node.classification.dominant
                    else None
                ),
                "no_minimal_pair": (
                    node.classification.no_minimal_pair if node.classification else False
                ),
            }
            yield json.dumps(row) + "\n"

    return StreamingResponse(rows(), media_type="application/x-ndjson")


@app.post("/advise", response_model=AdviseResponse)
def advise_endpoint(req: AdviseRequest):
    advice = advise_direction(ShiftVector(req.e1, req.e2, req.e3), complex(req.z_re, req.z_im))
    return AdviseResponse(stable_direction=advice.stable_direction, reason=advice.reason)


@app.post("/reduce")
def reduce_endpoint(req: AdviseRequest):
    plan = reduce_case(ShiftVector(req.e1, req.e2, req.e3))
    return {
        "basic_form": plan.basic_form,
        "direction": plan.direction,
        "steps": list(plan.steps),
    }
