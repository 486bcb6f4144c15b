"""HTTP front end wrapping the core solvers.

Run with ``uvicorn paretohull.service:app``.  Instances travel as the same
text format the CLI reads and writes, so files and requests stay
interchangeable.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .engine import (
    DegenerateOutcomeSetError,
    EngineInvariantError,
    bd_dichotomy,
    dummy_dichotomy,
    inflate_balloon,
    lexicographic_seed,
)
from .files import ParseError, generate, parse_instance, write_instance
from .oracle import OversizeError, enumerate_outcomes, oracle_ysn1
from .solvers import InstanceError, RunStats, canonicalize

app = FastAPI(
    title="paretohull",
    description="Nondominated extreme points of multi-objective assignment "
                "and knapsack problems.",
)


class GenerateRequest(BaseModel):
    kind: str = Field(pattern="^(ap|kp)$")
    p: int = Field(ge=2, le=5)
    n: int = Field(ge=2)
    seed: int = 0


class InstanceResponse(BaseModel):
    content: str


class SolveRequest(BaseModel):
    instance: str
    algorithm: str = Field(default="dummy", pattern="^(dummy|bd|balloon)$")
    arithmetic: str = Field(default="exact", pattern="^(exact|float)$")
    tolerance: float = 1e-7


class StatsModel(BaseModel):
    solver_calls: int
    float_calls: int
    extreme_points_found: int
    init_solver_calls: int
    wall_time: float


class SolveResponse(BaseModel):
    points: list[list[int]]
    stats: StatsModel
    warnings: list[str] = []


class CheckRequest(BaseModel):
    instance: str


class CheckResponse(BaseModel):
    status: str
    oracle_points: list[list[int]]
    dummy_points: list[list[int]]
    bd_points: list[list[int]]


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/instances/generate", response_model=InstanceResponse)
def generate_instance(request: GenerateRequest) -> InstanceResponse:
    raw = generate(request.kind, request.p, request.n, request.seed)
    return InstanceResponse(content=write_instance(raw))


@app.post("/solve", response_model=SolveResponse)
def solve(request: SolveRequest) -> SolveResponse:
    inst = _canonical(request.instance)
    try:
        if request.algorithm == "dummy":
            result = dummy_dichotomy(inst, request.arithmetic,
                                     tolerance=request.tolerance)
        elif request.algorithm == "bd":
            result = bd_dichotomy(inst, request.arithmetic,
                                  tolerance=request.tolerance)
        else:
            seed_stats = RunStats()
            seed = lexicographic_seed(inst, seed_stats)
            result = inflate_balloon(inst, seed, request.arithmetic,
                                     tolerance=request.tolerance)
            result.stats.solver_calls += seed_stats.solver_calls
    except (DegenerateOutcomeSetError, EngineInvariantError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    stats = result.stats
    return SolveResponse(
        points=[list(op.y) for op in result.points],
        stats=StatsModel(solver_calls=stats.solver_calls,
                         float_calls=stats.float_calls,
                         extreme_points_found=stats.extreme_points_found,
                         init_solver_calls=stats.init_solver_calls,
                         wall_time=stats.wall_time),
        warnings=list(result.warnings),
    )


@app.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    inst = _canonical(request.instance)
    try:
        truth = sorted(tuple(inst.to_original(v))
                       for v in oracle_ysn1(enumerate_outcomes(inst)))
    except OversizeError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    dummy = sorted(tuple(op.y) for op in dummy_dichotomy(inst, "exact").points)
    bd = sorted(tuple(op.y) for op in bd_dichotomy(inst, "exact").points)
    status = "PASS" if dummy == truth == bd else "FAIL"
    return CheckResponse(status=status,
                         oracle_points=[list(v) for v in truth],
                         dummy_points=[list(v) for v in dummy],
                         bd_points=[list(v) for v in bd])


def _canonical(text: str):
    try:
        return canonicalize(parse_instance(text))
    except (ParseError, InstanceError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
