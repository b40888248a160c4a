"""Extension values, successor/predecessor enumeration and graph builders.

K0 edges point predecessor -> successor with multiplicity k_zero; EXT edges
are undirected and carry an ExtValue (exact where the theory pins the value,
a bound elsewhere).  The Ext1 builder for q_m handles both central-character
shapes: loops when the character is Pi-invariant, doubled vertices with
parity offsets otherwise.

Graph construction is deterministic: vertices and edges are sorted, so JSON
and DOT exports are byte-stable for a fixed request.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .diagrams import (
    THREE,
    arcs,
    diagram_of,
    move_one,
    move_two,
    qdiagram_of,
    render_ascii,
    unmove_one,
    unmove_two,
    weight_of,
)
from .errors import (
    ContextMismatch,
    MixedCharacters,
    MoveUndefined,
    SignRequired,
    SizeMismatch,
)
from .kpoly import k_restricted, k_zero, s_zero
from .weights import (
    GL,
    OSP,
    Q,
    B0,
    AlgebraContext,
    BlockWeight,
    GeneralQWeight,
    atypicality,
    core_of,
    format_rational,
    osp_context,
    pari_abs,
    reduce_weight,
    tail,
    tau_preimage,
    tau_weight,
)

K0 = "K0"
EXT = "EXT"
EXT1 = "EXT1"


@dataclass(frozen=True)
class ExtValue:
    """Either an exact extension dimension or the bracket [lo, hi]."""

    lo: int
    hi: int
    exact: bool

    @staticmethod
    def exact_value(v: int) -> "ExtValue":
        return ExtValue(v, v, True)

    @staticmethod
    def bounded(lo: int, hi: int) -> "ExtValue":
        if lo == hi:
            return ExtValue(lo, hi, True)
        return ExtValue(lo, hi, False)

    def __str__(self) -> str:
        if self.exact:
            return f"Exact({self.hi})"
        return f"Bounded({self.lo},{self.hi})"


@dataclass(frozen=True)
class Vertex:
    id: str
    coords: tuple[Fraction, ...]
    sign: Optional[int]
    diagram: str
    pari: int
    tail: int


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    kind: str
    multiplicity: int
    kpoly: str
    exact: bool
    parity_offset: Optional[int] = None


@dataclass
class ExtGraph:
    algebra: str
    block: str
    kind: str
    vertices: list[Vertex] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    cycle_parities: list[int] = field(default_factory=list)


def weight_id(w: BlockWeight) -> str:
    return str(w)


# ---------------------------------------------------------------------------
# successors / predecessors


def _restricted_kpoly_str(lam: BlockWeight, nu: BlockWeight) -> str:
    return str(k_restricted(lam.ctx, lam, nu, s_zero(lam, nu)))


def _move_candidates(ctx: AlgebraContext, nu: BlockWeight) -> set[BlockWeight]:
    d = diagram_of(ctx, nu)
    ad = arcs(d)
    cands: set[BlockWeight] = set()

    def add(moved) -> None:
        cands.add(weight_of(ctx, moved))

    origins = sorted({a.left for a in ad.arches if d.x_count(a.left) > 0})
    for a in origins:
        ends = {e for arch in ad.arches if arch.left == a for e in arch.ends}
        for q in sorted(ends):
            try:
                add(move_one(d, a, q))
            except SignRequired:
                add(move_one(d, a, q, 1))
                add(move_one(d, a, q, -1))
            except MoveUndefined:
                continue
    if ctx.family == OSP:
        for arch in ad.arches:
            if arch.kind != THREE:
                continue
            p, q = arch.ends
            try:
                add(move_two(d, p, q))
            except SignRequired:
                add(move_two(d, p, q, 1))
                add(move_two(d, p, q, -1))
            except MoveUndefined:
                continue
    return cands


def successors(ctx: AlgebraContext, nu: BlockWeight) -> list[tuple[BlockWeight, int]]:
    """All (lam, k_zero) with k_zero(lam, nu) nonzero, by constructive moves."""
    if ctx.family == OSP and ctx.t == 1:
        t2 = osp_context(ctx.n, 2)
        lifted = successors(t2, tau_preimage(nu))
        out = [(tau_weight(w), m) for w, m in lifted]
        out.sort(key=lambda pair: pair[0].key())
        return out
    out = []
    for lam in _move_candidates(ctx, nu):
        m = k_zero(lam, nu)
        if m:
            out.append((lam, m))
    out.sort(key=lambda pair: pair[0].key())
    return out


def _pullback_candidates(ctx: AlgebraContext, lam: BlockWeight) -> set[BlockWeight]:
    d = diagram_of(ctx, lam)
    cands: set[BlockWeight] = set()

    def add(moved) -> None:
        cands.add(weight_of(ctx, moved))

    step = Fraction(1)
    positions = sorted({p for p in d.xs})
    for q in positions:
        lo = q - (2 * ctx.n + 2) if ctx.family == GL else Fraction(1, 2) if d.half else Fraction(0)
        a = lo
        while a < q:
            try:
                add(unmove_one(d, q, a))
            except SignRequired:
                add(unmove_one(d, q, a, 1))
                add(unmove_one(d, q, a, -1))
            except MoveUndefined:
                pass
            a += step
    if ctx.family == OSP:
        nz = [p for p in positions if p != 0]
        for i in range(len(nz)):
            for j in range(i + 1, len(nz)):
                try:
                    add(unmove_two(d, nz[i], nz[j]))
                except SignRequired:
                    add(unmove_two(d, nz[i], nz[j], 1))
                    add(unmove_two(d, nz[i], nz[j], -1))
                except MoveUndefined:
                    pass
    return cands


def predecessors(ctx: AlgebraContext, lam: BlockWeight) -> list[tuple[BlockWeight, int]]:
    """All (nu, k_zero) with k_zero(lam, nu) nonzero, by inverted moves."""
    if ctx.family == OSP and ctx.t == 1:
        t2 = osp_context(ctx.n, 2)
        lifted = predecessors(t2, tau_preimage(lam))
        out = [(tau_weight(w), m) for w, m in lifted]
        out.sort(key=lambda pair: pair[0].key())
        return out
    out = []
    for nu in _pullback_candidates(ctx, lam):
        m = k_zero(lam, nu)
        if m:
            out.append((nu, m))
    out.sort(key=lambda pair: pair[0].key())
    return out


# ---------------------------------------------------------------------------
# ext values


def _effective_coords(w: BlockWeight) -> tuple[Fraction, ...]:
    if w.ctx.family == OSP and w.ctx.t == 1:
        return tau_preimage(w).coords
    return w.coords


def _dominates(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> bool:
    return all(x >= y for x, y in zip(a, b))


def _q_rank1_chain_ext(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight) -> ExtValue:
    """The two integral rank-one chains, pinned values."""
    i, j = int(lam.coords[0]), int(nu.coords[0])
    lo, hi = min(i, j), max(i, j)
    if ctx.m == 2:
        # chain 0 - theta - 2theta - ...
        return ExtValue.exact_value(1 if hi - lo == 1 else 0)
    # m == 3: chain theta - 0 - 2theta - 3theta - ... (no theta-2theta edge)
    if (lo, hi) in ((0, 1), (0, 2)):
        return ExtValue.exact_value(1)
    if lo >= 2 and hi - lo == 1:
        return ExtValue.exact_value(1)
    return ExtValue.exact_value(0)


def ext_block(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight) -> ExtValue:
    """ext between two block weights, symmetric in its arguments."""
    if lam.ctx != ctx or nu.ctx != ctx:
        raise ContextMismatch("weights do not belong to the given context")
    q_b0 = ctx.family == Q and ctx.block == B0
    if lam == nu:
        if q_b0 and tail(lam) > 0:
            return ExtValue.bounded(0, 1)
        return ExtValue.exact_value(0)

    a, b = _effective_coords(lam), _effective_coords(nu)
    if _dominates(a, b) and a != b:
        big, small = lam, nu
    elif _dominates(b, a) and a != b:
        big, small = nu, lam
    elif a == b and lam.sign != nu.sign:
        big, small = lam, nu  # sign twins: k_zero vanishes either way
    else:
        return ExtValue.exact_value(0)

    k0 = k_zero(big, small)
    if not q_b0:
        return ExtValue.exact_value(k0)
    if ctx.n == 1:
        return _q_rank1_chain_ext(ctx, lam, nu)
    lam_n = big.coords[-1]
    if lam_n > 1 + ctx.ell:
        return ExtValue.exact_value(k0)
    if ctx.ell == 1 and lam_n == 1 and ctx.n >= 2 and big.coords[-2] > 4:
        return ExtValue.exact_value(k0)
    if k0 == 0:
        return ExtValue.exact_value(0)
    return ExtValue.bounded(0, k0)


def ext_general_q(eta: GeneralQWeight, zeta: GeneralQWeight) -> ExtValue:
    """ext for arbitrary q_m weights, through the core reduction."""
    if eta.m != zeta.m:
        raise SizeMismatch("weights of different q_m")
    ce, cz = core_of(eta), core_of(zeta)
    if ce != cz:
        return ExtValue.exact_value(0)
    if atypicality(eta) == 0:
        if eta != zeta:
            return ExtValue.exact_value(0)
        if ce.integral and any(c == 0 for c in eta.coords):
            return ExtValue.bounded(0, 1)
        return ExtValue.exact_value(0)
    rctx_e, re = reduce_weight(eta)
    rctx_z, rz = reduce_weight(zeta)
    assert rctx_e == rctx_z
    val = ext_block(rctx_e, re, rz)
    assert val.hi <= 2
    return val


# ---------------------------------------------------------------------------
# graph builders


def _vertex(ctx: AlgebraContext, w: BlockWeight) -> Vertex:
    return Vertex(
        id=weight_id(w),
        coords=w.coords,
        sign=w.sign,
        diagram=render_ascii(diagram_of(ctx, w)),
        pari=pari_abs(w),
        tail=tail(w),
    )


def k0_graph(ctx: AlgebraContext, vertices: Sequence[BlockWeight], fold_signs: bool = False) -> ExtGraph:
    """Induced directed multigraph with k_zero multiplicities."""
    vs = sorted(set(vertices), key=BlockWeight.key)
    vset = set(vs)
    g = ExtGraph(ctx.label(), ctx.block, K0)
    edges: list[Edge] = []
    for nu in vs:
        for lam, m in successors(ctx, nu):
            if lam not in vset:
                continue
            edges.append(Edge(weight_id(nu), weight_id(lam), K0, m,
                              _restricted_kpoly_str(lam, nu), True))
    if fold_signs:
        return _fold_signs(ctx, vs, edges)
    g.vertices = [_vertex(ctx, w) for w in vs]
    g.edges = sorted(edges, key=lambda e: (e.src, e.dst))
    return g


def _fold_signs(ctx: AlgebraContext, vs: list[BlockWeight], edges: list[Edge]) -> ExtGraph:
    """Identify sign twins: the graph of the unsigned diagrams."""
    def fold_id(w: BlockWeight) -> str:
        return ",".join(format_rational(c) for c in w.coords)

    by_id = {weight_id(w): w for w in vs}
    g = ExtGraph(ctx.label(), ctx.block, K0)
    seen_vertices: dict[str, Vertex] = {}
    for w in vs:
        fid = fold_id(w)
        if fid not in seen_vertices:
            d = diagram_of(ctx, w)
            unsigned = render_ascii(d).lstrip("+- ")
            seen_vertices[fid] = Vertex(fid, w.coords, None, unsigned, pari_abs(w), tail(w))
    folded: dict[tuple[str, str], Edge] = {}
    for e in edges:
        src, dst = by_id[e.src], by_id[e.dst]
        key = (fold_id(src), fold_id(dst))
        if key in folded:
            assert folded[key].multiplicity == e.multiplicity
            continue
        folded[key] = Edge(key[0], key[1], K0, e.multiplicity, e.kpoly, True)
    g.vertices = sorted(seen_vertices.values(), key=lambda v: v.coords)
    g.edges = sorted(folded.values(), key=lambda e: (e.src, e.dst))
    return g


def ext_graph(ctx: AlgebraContext, vertices: Sequence[BlockWeight]) -> ExtGraph:
    """Induced undirected ext graph; bounded values are flagged inexact."""
    vs = sorted(set(vertices), key=BlockWeight.key)
    g = ExtGraph(ctx.label(), ctx.block, EXT)
    g.vertices = [_vertex(ctx, w) for w in vs]
    edges = []
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            a, b = vs[i], vs[j]
            val = ext_block(ctx, a, b)
            if val.hi == 0:
                continue
            big, small = (a, b) if _dominates(_effective_coords(a), _effective_coords(b)) else (b, a)
            edges.append(Edge(weight_id(a), weight_id(b), EXT, val.hi,
                              _restricted_kpoly_str(big, small), val.exact))
    g.edges = sorted(edges, key=lambda e: (e.src, e.dst))
    return g


# ---------------------------------------------------------------------------
# Ext1 graphs for q_m central characters


def _general_vertex_stats(w: GeneralQWeight) -> tuple[int, int]:
    """(pari, tail) of the reduced weight; typical weights count as (0, 0)."""
    if atypicality(w) == 0:
        return 0, 0
    _, red = reduce_weight(w)
    return pari_abs(red), tail(red)


def ext1_graph_q(vertices: Sequence[GeneralQWeight]) -> ExtGraph:
    """Ext1 graph of one q_m central character."""
    vs = sorted(set(vertices), key=GeneralQWeight.key)
    if not vs:
        raise MixedCharacters("empty vertex set")
    chars = {core_of(w) for w in vs}
    if len(chars) > 1:
        raise MixedCharacters("vertices mix central characters")
    chi = chars.pop()
    m = vs[0].m
    if any(w.m != m for w in vs):
        raise SizeMismatch("vertices mix q_m sizes")

    ext_edges = []
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            val = ext_general_q(vs[i], vs[j])
            if val.hi:
                ext_edges.append((vs[i], vs[j], val))

    g = ExtGraph(f"q({m})", "chi", EXT1)

    def vrec(w: GeneralQWeight, copy: Optional[int] = None) -> Vertex:
        pari, tl = _general_vertex_stats(w)
        base = str(w)
        vid = base if copy is None else f"{base}|{copy}"
        return Vertex(vid, w.coords, None, render_ascii(qdiagram_of(w)), pari, tl)

    if chi.pi_invariant():
        g.vertices = [vrec(w) for w in vs]
        edges = []
        for a, b, val in ext_edges:
            edges.append(Edge(str(a), str(b), EXT1, val.hi, "", val.exact))
        for w in vs:
            if any(c == 0 for c in w.coords):
                edges.append(Edge(str(w), str(w), EXT1, 1, "", True))
        g.edges = sorted(edges, key=lambda e: (e.src, e.dst))
        return g

    # doubled vertices (nu, 0), (nu, 1)
    g.vertices = [vrec(w, i) for w in vs for i in (0, 1)]

    offset: dict[tuple[str, str], int] = {}
    adj: dict[str, list[tuple[str, int]]] = {str(w): [] for w in vs}
    stats = {str(w): _general_vertex_stats(w) for w in vs}
    for a, b, val in ext_edges:
        t = (stats[str(a)][1] - stats[str(b)][1]) % 2
        offset[(str(a), str(b))] = t
        adj[str(a)].append((str(b), t))
        adj[str(b)].append((str(a), t))

    # breadth-first gauge from the least vertex: tree edges get offset zero
    gauge: dict[str, int] = {}
    tree: set[tuple[str, str]] = set()
    order = [str(w) for w in vs]
    for root in order:
        if root in gauge:
            continue
        gauge[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v, t in sorted(adj[u]):
                if v not in gauge:
                    gauge[v] = (gauge[u] + t) % 2
                    tree.add((min(u, v), max(u, v)))
                    queue.append(v)

    edges = []
    cycles = []
    for a, b, val in ext_edges:
        ka, kb = str(a), str(b)
        o = (offset[(ka, kb)] + gauge[ka] + gauge[kb]) % 2
        if (min(ka, kb), max(ka, kb)) not in tree:
            cycles.append(o)  # gauge-invariant parity of the closed cycle
        for i in (0, 1):
            edges.append(Edge(f"{ka}|{i}", f"{kb}|{(i + o) % 2}", EXT1, val.hi, "", val.exact, parity_offset=o))
    for w in vs:
        if any(c == 0 for c in w.coords):
            edges.append(Edge(f"{w}|0", f"{w}|1", EXT1, 1, "", True))
    g.edges = sorted(edges, key=lambda e: (e.src, e.dst))
    g.cycle_parities = sorted(cycles)
    return g


# ---------------------------------------------------------------------------
# graph checks


@dataclass
class BipartiteReport:
    ok: bool
    violations: list[tuple[str, str]]


def check_bipartite(g: ExtGraph, coloring: dict[str, int]) -> BipartiteReport:
    """List every non-loop edge whose endpoints share a color."""
    bad = []
    for e in g.edges:
        if e.src == e.dst:
            continue
        if coloring[e.src] == coloring[e.dst]:
            bad.append((e.src, e.dst))
    return BipartiteReport(not bad, bad)


def window_isomorphic(g1: ExtGraph, g2: ExtGraph, shift) -> bool:
    """Does shifting every coordinate of g1 by -shift give exactly g2?"""
    shift = Fraction(shift)

    def keyed(g: ExtGraph, delta: Fraction):
        vmap = {}
        for v in g.vertices:
            key = tuple(c - delta for c in v.coords)
            if key in vmap:
                return None, None
            vmap[v.id] = key
        edges = sorted((vmap[e.src], vmap[e.dst], e.kind, e.multiplicity, e.kpoly) for e in g.edges)
        return set(vmap.values()), edges

    v1, e1 = keyed(g1, shift)
    v2, e2 = keyed(g2, Fraction(0))
    if v1 is None or v2 is None:
        return False
    return v1 == v2 and e1 == e2


# ---------------------------------------------------------------------------
# export


def graph_to_dict(g: ExtGraph) -> dict:
    data = {
        "algebra": g.algebra,
        "block": g.block,
        "kind": g.kind,
        "vertices": [
            {
                "id": v.id,
                "coords": [format_rational(c) for c in v.coords],
                **({"sign": "+" if v.sign > 0 else "-"} if v.sign is not None else {}),
                "diagram": v.diagram,
                "pari": v.pari,
                "tail": v.tail,
            }
            for v in g.vertices
        ],
        "edges": [
            {
                "src": e.src,
                "dst": e.dst,
                "kind": e.kind,
                "multiplicity": e.multiplicity,
                "kpoly": e.kpoly,
                "exact": e.exact,
                **({"parity_offset": e.parity_offset} if e.parity_offset is not None else {}),
            }
            for e in g.edges
        ],
    }
    if g.cycle_parities:
        data["cycle_parities"] = g.cycle_parities
    return data


def graph_to_json(g: ExtGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


def graph_to_dot(g: ExtGraph) -> str:
    directed = g.kind == K0
    lines = ["digraph G {" if directed else "graph G {"]
    arrow = "->" if directed else "--"
    for v in g.vertices:
        lines.append(f'  "{v.id}" [label="{v.diagram}"];')
    for e in g.edges:
        attrs = []
        if e.kpoly:
            attrs.append(f'label="{e.kpoly}"')
        if not e.exact:
            attrs.append("style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        for _ in range(max(e.multiplicity, 1)):
            lines.append(f'  "{e.src}" {arrow} "{e.dst}"{suffix};')
    lines.append("}")
    return "\n".join(lines) + "\n"
