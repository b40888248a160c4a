"""FastAPI service around the engine.

Every endpoint is a thin wrapper over a plain handler function taking the
request model; the CLI calls the same handlers in-process, so server and
command line cannot drift apart.  Domain errors map to HTTP 422.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import verification
from .diagrams import arcs, diagram_of, qdiagram_of, render_ascii
from .errors import SuperextError
from .extgraph import (
    EXT,
    EXT1,
    K0,
    ext1_graph_q,
    ext_block,
    ext_graph,
    graph_to_dict,
    graph_to_dot,
    k0_graph,
)
from .kpoly import k_hat, k_zero, kpoly, kpoly_q_recursive, s_zero
from .weights import (
    B0,
    Q,
    AlgebraContext,
    atypicality,
    block_weight_to_general,
    core_of,
    enumerate_block,
    format_rational,
    is_stable,
    parse_algebra,
    parse_block_weight,
    parse_weight_spec,
    pari_abs,
    reduce_weight,
    tail,
    to_epsilon_delta,
    validate_general_q,
)


class DiagramRequest(BaseModel):
    algebra: str
    block: str = B0
    weight: str
    general: bool = False


class DiagramResponse(BaseModel):
    algebra: str
    block: str
    weight: str
    diagram: str
    arcs: str
    tail: int
    pari: int
    epsilon_delta: str
    core: Optional[str] = None
    atypicality: Optional[int] = None
    stable: Optional[bool] = None
    reduced_algebra: Optional[str] = None
    reduced_block: Optional[str] = None
    reduced_weight: Optional[str] = None


class KpolyRequest(BaseModel):
    algebra: str
    block: str = B0
    lam: str
    nu: str
    oracle: bool = False
    ext: bool = False


class KpolyResponse(BaseModel):
    algebra: str
    block: str
    lam: str
    nu: str
    kpoly: str
    k_hat: str
    s_zero: Optional[int] = None
    k_zero: Optional[int] = None
    recursive: Optional[str] = None
    oracle_match: Optional[bool] = None
    ext: Optional[str] = None


class GraphRequest(BaseModel):
    algebra: str
    block: str = B0
    max: str
    min: Optional[str] = None
    kind: str = "k0"
    fold_signs: bool = False
    cap: int = 100_000
    general_vertices: Optional[list[str]] = None


class GraphResponse(BaseModel):
    graph: dict
    dot: str


class VerifyRequest(BaseModel):
    algebra: Optional[str] = None
    block: str = B0
    max: Optional[int] = None
    properties: Optional[list[str]] = None


class PropertyReport(BaseModel):
    name: str
    ok: bool
    checked: int
    seconds: float
    violations: list[str]


class VerifyResponse(BaseModel):
    passed: bool
    properties: list[PropertyReport]


def _ctx(algebra: str, block: str) -> AlgebraContext:
    return parse_algebra(algebra, block=block)


def handle_diagram(req: DiagramRequest) -> DiagramResponse:
    ctx = _ctx(req.algebra, req.block)
    if req.general:
        if ctx.family != Q:
            raise SuperextError("general weights exist for q only")
        coords, _ = parse_weight_spec(req.weight)
        w = validate_general_q(ctx.m, coords)
        d = qdiagram_of(w)
        cc = core_of(w)
        k = atypicality(w)
        resp = DiagramResponse(
            algebra=ctx.label(), block=ctx.block, weight=str(w),
            diagram=render_ascii(d), arcs=render_ascii(arcs(d)),
            tail=d.zero_count, pari=0,
            epsilon_delta=to_epsilon_delta(ctx, w),
            core="{" + ",".join(format_rational(c) for c in cc.core) + "}",
            atypicality=k, stable=is_stable(w),
        )
        if k > 0:
            rctx, red = reduce_weight(w)
            resp.pari = pari_abs(red)
            resp.reduced_algebra = rctx.label()
            resp.reduced_block = rctx.block
            resp.reduced_weight = str(red)
        return resp
    w = parse_block_weight(ctx, req.weight)
    d = diagram_of(ctx, w)
    return DiagramResponse(
        algebra=ctx.label(), block=ctx.block, weight=str(w),
        diagram=render_ascii(d), arcs=render_ascii(arcs(d)),
        tail=tail(w), pari=pari_abs(w),
        epsilon_delta=to_epsilon_delta(ctx, w),
    )


def handle_kpoly(req: KpolyRequest) -> KpolyResponse:
    ctx = _ctx(req.algebra, req.block)
    lam = parse_block_weight(ctx, req.lam)
    nu = parse_block_weight(ctx, req.nu)
    resp = KpolyResponse(
        algebra=ctx.label(), block=ctx.block, lam=str(lam), nu=str(nu),
        kpoly=str(kpoly(ctx, lam, nu)), k_hat=str(k_hat(ctx, lam, nu)),
    )
    if lam != nu:
        resp.s_zero = s_zero(lam, nu)
        resp.k_zero = k_zero(lam, nu)
    if req.oracle:
        if ctx.family != Q:
            raise SuperextError("the recursion oracle exists for q only")
        resp.recursive = str(kpoly_q_recursive(ctx, lam, nu))
        resp.oracle_match = resp.recursive == resp.kpoly
    if req.ext:
        resp.ext = str(ext_block(ctx, lam, nu))
    return resp


def handle_graph(req: GraphRequest) -> GraphResponse:
    ctx = _ctx(req.algebra, req.block)
    kind = req.kind.lower()
    if kind not in ("k0", "ext", "ext1"):
        raise SuperextError(f"unknown graph kind {req.kind!r}")
    if kind == "ext1":
        if ctx.family != Q:
            raise SuperextError("Ext1 graphs are computed for q only")
        if req.general_vertices:
            vs = [validate_general_q(ctx.m, parse_weight_spec(s)[0]) for s in req.general_vertices]
        else:
            block_vs = enumerate_block(ctx, req.max, cap=req.cap)
            vs = [block_weight_to_general(w) for w in block_vs]
        g = ext1_graph_q(vs)
    else:
        vertices = enumerate_block(ctx, req.max, req.min, cap=req.cap)
        if kind == "k0":
            g = k0_graph(ctx, vertices, fold_signs=req.fold_signs)
        else:
            g = ext_graph(ctx, vertices)
    return GraphResponse(graph=graph_to_dict(g), dot=graph_to_dot(g))


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    contexts = None
    if req.algebra:
        contexts = [_ctx(req.algebra, req.block)]
    results = verification.run_suite(req.properties, contexts=contexts, max_coord=req.max)
    reports = [
        PropertyReport(name=r.name, ok=r.ok, checked=r.checked,
                       seconds=round(r.seconds, 3), violations=r.violations)
        for r in results
    ]
    return VerifyResponse(passed=all(r.ok for r in results), properties=reports)


app = FastAPI(title="superext", version="0.1.0")


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


def _wrap(handler, req):
    try:
        return handler(req)
    except SuperextError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/diagram", response_model=DiagramResponse, response_model_exclude_none=True)
def diagram(req: DiagramRequest) -> DiagramResponse:
    return _wrap(handle_diagram, req)


@app.post("/kpoly", response_model=KpolyResponse, response_model_exclude_none=True)
def kpoly_route(req: KpolyRequest) -> KpolyResponse:
    return _wrap(handle_kpoly, req)


@app.post("/graph", response_model=GraphResponse)
def graph_route(req: GraphRequest) -> GraphResponse:
    return _wrap(handle_graph, req)


@app.post("/verify", response_model=VerifyResponse)
def verify_route(req: VerifyRequest) -> VerifyResponse:
    return _wrap(handle_verify, req)
