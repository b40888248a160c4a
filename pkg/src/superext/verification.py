"""The verification suite: golden tables, closed formulas, the recursion
oracle, parity/monomiality, w-support, graph figures, degree counts,
bipartiteness, window isomorphisms, brute-force agreement and round-trips.

Each property returns a PropertyResult; `run_suite` collects them and the
CLI/service turn the outcome into an exit code / response.  Window sizes
default to the documented acceptance windows; smaller budgets are available
for quick interactive runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .diagrams import arcs, diagram_of, parse_ascii, render_ascii, tau, tau_inv, weight_of
from .errors import OspLambdaZero
from .extgraph import (
    ExtValue,
    check_bipartite,
    ext_block,
    ext_general_q,
    ext_graph,
    k0_graph,
    predecessors,
    successors,
    window_isomorphic,
)
from .kpoly import KPoly, k_hat, k_restricted, k_zero, kpoly, kpoly_q_recursive, parity_bar, s_zero
from .weights import (
    B0,
    BHALF,
    GL,
    OSP,
    Q,
    AlgebraContext,
    BlockWeight,
    enumerate_block,
    gl_context,
    norm,
    osp_context,
    pari_abs,
    pari_rel,
    q_context,
    tail,
    validate_general_q,
    validate_weight,
)

MAX_VIOLATIONS = 12


@dataclass
class PropertyResult:
    name: str
    ok: bool
    checked: int
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f"  ({len(self.violations)} shown)"
        return f"{status}  {self.name}  [{self.checked} checks, {self.seconds:.2f}s]{extra}"


class _Check:
    def __init__(self) -> None:
        self.checked = 0
        self.violations: list[str] = []

    def expect(self, cond: bool, msg: str) -> None:
        self.checked += 1
        if not cond and len(self.violations) < MAX_VIOLATIONS:
            self.violations.append(msg)
        elif not cond:
            self.violations.append("")  # keep the count honest

    def result(self, name: str, t0: float) -> PropertyResult:
        bad = [v for v in self.violations if v]
        ok = not self.violations
        return PropertyResult(name, ok, self.checked, bad, time.time() - t0)


def _kp(ctx, lam_coords, nu_coords, lam_sign=None, nu_sign=None) -> KPoly:
    lam = validate_weight(ctx, lam_coords, lam_sign)
    nu = validate_weight(ctx, nu_coords, nu_sign)
    return kpoly(ctx, lam, nu)


# ---------------------------------------------------------------------------
# 1. golden tables


def golden_tables() -> PropertyResult:
    t0 = time.time()
    c = _Check()

    def eq(ctx, lam, nu, want, lam_sign=None):
        got = str(_kp(ctx, lam, nu, lam_sign))
        c.expect(got == want, f"{ctx.label()} K({lam}/{nu}) = {got}, want {want}")

    o44 = osp_context(2, 0)
    eq(o44, [2, 0], [1, 0], "1")
    eq(o44, [2, 1], [1, 0], "z", lam_sign=1)
    eq(o44, [3, 1], [1, 0], "1", lam_sign=1)

    o64 = osp_context(2, 2)
    eq(o64, [2, 0], [1, 0], "1")
    eq(o64, [2, 1], [1, 0], "z^2")
    eq(o64, [3, 1], [1, 0], "z")
    eq(o64, [4, 1], [1, 0], "1")

    o66 = osp_context(3, 0)
    eq(o66, [2, 0, 0], [1, 0, 0], "1")
    eq(o66, [2, 1, 0], [1, 0, 0], "z+z^3")
    eq(o66, [3, 1, 0], [1, 0, 0], "1+z^2")
    eq(o66, [4, 1, 0], [1, 0, 0], "z")
    eq(o66, [5, 1, 0], [1, 0, 0], "1")

    # osp(10|10), f = x^3 o o x x; uncontested rows plus the corrected family
    o10 = osp_context(5, 0)
    nu = [4, 3, 0, 0, 0]
    eq(o10, [5, 3, 0, 0, 0], nu, "1")
    eq(o10, [6, 4, 0, 0, 0], nu, "1")
    eq(o10, [5, 4, 3, 2, 0], nu, "z^2")
    eq(o10, [6, 4, 3, 2, 0], nu, "z")
    eq(o10, [7, 4, 3, 2, 0], nu, "1")
    eq(o10, [5, 4, 0, 0, 0], nu, "z")
    for i in range(5, 10):
        want = "1" if i == 9 else ("z" if i == 8 else f"z^{9 - i}")
        eq(o10, [i, 4, 3, 0, 0], nu, want)
    eq(o10, [10, 4, 3, 0, 0], nu, "0")

    q4 = q_context(4)
    eq(q4, [2, 0], [1, 0], "1")
    eq(q4, [3, 1], [1, 0], "2")
    eq(q4, [2, 1], [1, 0], "2z")

    q8 = q_context(8)
    nu = [4, 1, 0, 0]
    eq(q8, [5, 4, 1, 0], nu, "z+z^2")
    eq(q8, [6, 4, 1, 0], nu, "1+z")
    eq(q8, [7, 4, 1, 0], nu, "2")
    eq(q8, [5, 1, 0, 0], nu, "1")
    nu = [5, 1, 0, 0]
    eq(q8, [6, 5, 1, 0], nu, "2z")
    eq(q8, [7, 5, 1, 0], nu, "2")
    eq(q8, [6, 1, 0, 0], nu, "1")

    return c.result("golden_tables", t0)


# ---------------------------------------------------------------------------
# 2. closed formulas


def closed_formulas() -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for m in range(2, 9):
        ctx = q_context(m)
        theta = [1] + [0] * (ctx.n - 1)
        zero = [0] * ctx.n
        want = str(KPoly.monomial(0) + KPoly.monomial(m - 2))
        got = str(_kp(ctx, theta, zero))
        c.expect(got == want, f"q_{m}: K(theta/0) = {got}, want {want}")

    ctx = osp_context(1, 0)
    c.expect(str(_kp(ctx, [1], [0], lam_sign=1)) == "1", "osp(2|2) K = 1")
    for n in range(2, 5):
        ctx = osp_context(n, 0)
        got = str(_kp(ctx, [1] + [0] * (n - 1), [0] * n))
        want = f"1+z^{2 * n - 2}"
        c.expect(got == want, f"osp({2*n}|{2*n}): {got} want {want}")
    for n in range(1, 5):
        ctx = osp_context(n, 2)
        got = str(_kp(ctx, [1] + [0] * (n - 1), [0] * n))
        want = "z" if n == 1 else f"z^{2 * n - 1}"
        c.expect(got == want, f"osp({2*n+2}|{2*n}): {got} want {want}")

    for m in range(2, 7):
        ctx = q_context(m)
        zero = [0] * ctx.n
        got = str(_kp(ctx, zero, zero))
        want = str(KPoly.from_coeffs([0] + [1] * (m - 1)))
        c.expect(got == want, f"q_{m}: K(0/0) = {got}, want {want}")
    return c.result("closed_formulas", t0)


# ---------------------------------------------------------------------------
# window enumeration helpers


def q_contexts(max_m: int, include_half: bool = True) -> list[AlgebraContext]:
    out = []
    for m in range(2, max_m + 1):
        out.append(q_context(m))
        if include_half and m % 2 == 0:
            out.append(q_context(m, block=BHALF))
    return out


def window(ctx: AlgebraContext, max_coord, min_coord=None) -> list[BlockWeight]:
    if ctx.half:
        max_coord = Fraction(2 * int(max_coord) - 1, 2)
    return enumerate_block(ctx, max_coord, min_coord)


def standard_contexts(max_n: int = 3) -> list[AlgebraContext]:
    out: list[AlgebraContext] = []
    for n in range(1, max_n + 1):
        out.append(gl_context(n))
        for t in (0, 1, 2):
            out.append(osp_context(n, t))
    out.extend(q_contexts(2 * max_n + 1))
    return out


# ---------------------------------------------------------------------------
# 3. oracle equivalence


def oracle_equivalence(max_m: int = 7, max_coord: int = 6,
                       contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    pool = contexts if contexts is not None else q_contexts(max_m)
    for ctx in pool:
        if ctx.family != Q:
            continue
        weights = window(ctx, max_coord)
        for lam in weights:
            for nu in weights:
                a = kpoly(ctx, lam, nu)
                b = kpoly_q_recursive(ctx, lam, nu)
                c.expect(a == b, f"{ctx.label()}{ctx.block}: K({lam}/{nu}) closed {a} vs recursive {b}")
    return c.result("oracle_equivalence", t0)


# ---------------------------------------------------------------------------
# 4. parity and monomiality


def _dominates(a: BlockWeight, b: BlockWeight) -> bool:
    return all(x >= y for x, y in zip(a.coords, b.coords))


def parity_monomiality(max_n: int = 3, gl_lo: int = -3, gl_hi: int = 5, max_coord: int = 6,
                       contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for ctx in contexts if contexts is not None else standard_contexts(max_n):
        if ctx.family == GL:
            weights = enumerate_block(ctx, gl_hi, gl_lo)
        else:
            weights = window(ctx, max_coord)
        for lam in weights:
            if ctx.family != GL and all(x == 0 for x in lam.coords):
                continue
            for nu in weights:
                p = kpoly(ctx, lam, nu)
                if p.is_zero:
                    continue
                tag = f"{ctx.label()}{ctx.block} K({lam}/{nu})={p}"
                terms = [(i, co) for i, co in enumerate(p.coeffs) if co]
                top = terms[-1][0]
                pr = pari_rel(lam, nu)
                if ctx.family in (GL,) or ctx.half:
                    c.expect(len(terms) == 1 and terms[0][1] == 1, f"{tag}: not a monic monomial")
                    c.expect(top % 2 == (pr + 1) % 2, f"{tag}: exponent parity")
                    c.expect(_dominates(lam, nu) and lam != nu, f"{tag}: support order")
                elif ctx.family == OSP:
                    td = tail(nu) - tail(lam)
                    c.expect(td in (0, 1, 2), f"{tag}: tail difference {td}")
                    c.expect(top % 2 == (pr + 1) % 2, f"{tag}: top exponent parity")
                    if len(terms) > 1 or terms[0][1] > 1:
                        c.expect(ctx.t == 0, f"{tag}: two-term outside osp(2n|2n)")
                        c.expect(td == 1, f"{tag}: two-term needs tail difference 1")
                        c.expect(len(terms) == 2 and all(co == 1 for _, co in terms),
                                 f"{tag}: two-term shape")
                        c.expect((terms[0][0] - terms[1][0]) % 2 == 0, f"{tag}: equal term parity")
                else:
                    td = tail(nu) - tail(lam)
                    c.expect(td in (0, 1), f"{tag}: tail difference {td}")
                    if td == 0:
                        c.expect(len(terms) == 1 and terms[0][1] == 1, f"{tag}: not a monic monomial")
                        c.expect(top % 2 == (pr + 1) % 2, f"{tag}: exponent parity")
                    else:
                        c.expect(sum(co for _, co in terms) == 2, f"{tag}: two-term shape")
                        c.expect(top % 2 == (pr + 1 + ctx.ell) % 2, f"{tag}: top exponent parity")
                    c.expect(_dominates(lam, nu) and lam != nu, f"{tag}: support order")
    return c.result("parity_monomiality", t0)


# ---------------------------------------------------------------------------
# 5. w-support of k_hat


def w_support(max_n: int = 3, gl_lo: int = -3, gl_hi: int = 5, max_coord: int = 6,
              contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for ctx in contexts if contexts is not None else standard_contexts(max_n):
        if ctx.family == GL:
            weights = enumerate_block(ctx, gl_hi, gl_lo)
        else:
            weights = window(ctx, max_coord)
        for lam in weights:
            for nu in weights:
                if lam == nu:
                    continue
                kh = k_hat(ctx, lam, nu)
                s = s_zero(lam, nu)
                support = kh.w_support()
                c.expect(support <= {s},
                         f"{ctx.label()}{ctx.block} k_hat({lam},{nu}) supported on {sorted(support)}, s_zero={s}")
                if ctx.family != OSP:
                    c.expect(not kh.unknown, f"{ctx.label()} unexpected unknown flags")
    return c.result("w_support", t0)


# ---------------------------------------------------------------------------
# 6. graph figures


def _edge_set(g) -> set[tuple[str, str, int]]:
    return {(e.src, e.dst, e.multiplicity) for e in g.edges}


def graph_figures() -> PropertyResult:
    t0 = time.time()
    c = _Check()

    gl1 = gl_context(1)
    g = k0_graph(gl1, enumerate_block(gl1, 3, -2))
    c.expect(_edge_set(g) == {(str(i), str(i + 1), 1) for i in range(-2, 3)},
             f"gl(1|1) path: {sorted(_edge_set(g))}")

    o22 = osp_context(1, 0)
    g = k0_graph(o22, enumerate_block(o22, 3))
    want = {("0", "+1", 1), ("0", "-1", 1),
            ("+1", "+2", 1), ("-1", "-2", 1), ("+2", "+3", 1), ("-2", "-3", 1)}
    c.expect(_edge_set(g) == want, f"osp(2|2) double chain: {sorted(_edge_set(g))}")

    g = k0_graph(o22, enumerate_block(o22, 3), fold_signs=True)
    c.expect(_edge_set(g) == {(str(i), str(i + 1), 1) for i in range(0, 3)},
             f"OSP(2|2) folded chain: {sorted(_edge_set(g))}")

    o42 = osp_context(1, 2)
    vs42 = enumerate_block(o42, 3)
    g = k0_graph(o42, vs42)
    c.expect(_edge_set(g) == {("0", "2", 1), ("1", "2", 1), ("2", "3", 1)},
             f"osp(4|2) solid edges: {sorted(_edge_set(g))}")
    # dotted arrow 0 -> beta: K nonzero with zero constant term
    beta = validate_weight(o42, [1])
    zero = validate_weight(o42, [0])
    twob = validate_weight(o42, [2])
    c.expect(str(kpoly(o42, beta, zero)) == "z", "osp(4|2) dotted 0->beta label z")
    c.expect(k_zero(beta, zero) == 0, "osp(4|2) k_zero(beta,0) = 0")
    c.expect(k_zero(twob, zero) == 1, "osp(4|2) k_zero(2beta,0) = 1")
    g = ext_graph(o42, vs42)
    c.expect(_edge_set(g) == {("0", "2", 1), ("1", "2", 1), ("2", "3", 1)},
             f"osp(4|2) D-fork ext edges: {sorted(_edge_set(g))}")

    q2 = q_context(2)
    g = k0_graph(q2, enumerate_block(q2, 3))
    c.expect(_edge_set(g) == {("0", "1", 2), ("1", "2", 1), ("2", "3", 1)},
             f"q_2 K0: {sorted(_edge_set(g))}")
    g = ext_graph(q2, enumerate_block(q2, 3))
    c.expect(_edge_set(g) == {("0", "1", 1), ("1", "2", 1), ("2", "3", 1)},
             f"q_2 ext chain: {sorted(_edge_set(g))}")

    q3 = q_context(3)
    g = k0_graph(q3, enumerate_block(q3, 3))
    want = {("0", "1", 1), ("0", "2", 2), ("1", "2", 1), ("2", "3", 1)}
    c.expect(_edge_set(g) == want, f"q_3 K0: {sorted(_edge_set(g))}")
    lbl = {(e.src, e.dst): e.kpoly for e in g.edges}
    c.expect(lbl[("0", "1")] == "1+z", "q_3 edge 0->theta labeled 1+z")
    g = ext_graph(q3, enumerate_block(q3, 3))
    want = {("0", "1", 1), ("0", "2", 1), ("2", "3", 1)}
    c.expect(_edge_set(g) == want, f"q_3 ext chain (no theta-2theta): {sorted(_edge_set(g))}")

    return c.result("graph_figures", t0)


# ---------------------------------------------------------------------------
# 7. out-degrees and multiedges


def out_degrees(max_n: int = 3, max_coord: int = 4,
                contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for ctx in contexts if contexts is not None else standard_contexts(max_n):
        if ctx.family == GL:
            weights = enumerate_block(ctx, max_coord, -max_coord)
        else:
            weights = window(ctx, max_coord)
        n = ctx.n
        q_b0 = ctx.family == Q and ctx.block == B0
        for nu in weights:
            succ = successors(ctx, nu)
            tag = f"{ctx.label()}{ctx.block} nu={nu}"
            for lam, m in succ:
                limit = 2 if q_b0 else 1
                c.expect(m <= limit, f"{tag}: multiplicity {m} to {lam}")
            if ctx.family == GL or (ctx.family == OSP and ctx.t in (1, 2)) or ctx.half:
                c.expect(len(succ) == n, f"{tag}: {len(succ)} successors, want {n}")
            elif ctx.family == OSP and ctx.t == 0 and tail(nu) == 0:
                c.expect(len(succ) == n, f"{tag}: {len(succ)} successors, want {n}")
            elif q_b0:
                doubles = [lam for lam, m in succ if m == 2]
                c.expect(len(doubles) <= 1, f"{tag}: {len(doubles)} double edges")
                if tail(nu) == 0:
                    c.expect(len(succ) == n and not doubles,
                             f"{tag}: tail-0 vertex wants {n} simple successors")
    return c.result("out_degrees", t0)


# ---------------------------------------------------------------------------
# 8. bipartiteness


def bipartiteness(max_n: int = 3, max_coord: int = 4,
                  contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for ctx in contexts if contexts is not None else standard_contexts(max_n):
        if ctx.family == GL:
            weights = enumerate_block(ctx, max_coord, -max_coord)
        elif ctx.family == Q and ctx.block == B0:
            weights = [w for w in window(ctx, max_coord) if w.coords[-1] > 1 + ctx.ell]
        else:
            weights = window(ctx, max_coord)
        if not weights:
            continue
        g = k0_graph(ctx, weights)
        coloring = {v.id: v.pari % 2 for v in g.vertices}
        rep = check_bipartite(g, coloring)
        c.expect(rep.ok, f"{ctx.label()}{ctx.block}: violating edges {rep.violations[:4]}")
    return c.result("bipartiteness", t0)


# ---------------------------------------------------------------------------
# 9. window isomorphism


def window_isomorphism(width: int = 5) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for n in (2, 3):
        for p in (0, 1, 2):
            families = [
                (gl_context(n), Fraction(p), None),
                (osp_context(n, 0), Fraction(p), 1),
                (osp_context(n, 1), Fraction(p), None),
                (osp_context(n, 2), Fraction(p), None),
                (q_context(2 * n), Fraction(p), None),
                (q_context(2 * n + 1), Fraction(p), None),
                (q_context(2 * n, block=BHALF), Fraction(-1, 2), None),
            ]
            graphs = []
            for ctx, shift, sgn in families:
                vs = [validate_weight(ctx, [Fraction(x) + shift for x in tup], sgn)
                      for tup in _bplus(n, width)]
                graphs.append((k0_graph(ctx, vs), shift, f"{ctx.label()}{ctx.block}"))
            ref_graph, ref_shift, ref_label = graphs[0]
            for g, shift, label in graphs[1:]:
                ok = window_isomorphic(g, ref_graph, shift - ref_shift)
                c.expect(ok, f"n={n} p={p}: {label} window differs from {ref_label}")
    return c.result("window_isomorphism", t0)


def _bplus(n: int, width: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, lo):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(lo, width + 1):
            rec(prefix + [v], v + 1)

    # strictly increasing, then reversed to decreasing
    rec([], 1)
    return [tuple(reversed(t)) for t in out]


# ---------------------------------------------------------------------------
# 10. brute-force agreement


def brute_force_agreement(max_n: int = 3, max_coord: int = 3,
                          contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for ctx in contexts if contexts is not None else standard_contexts(max_n):
        reach = max_coord + 2 * ctx.n + 2
        if ctx.family == GL:
            small = enumerate_block(ctx, max_coord, -max_coord)
            big = enumerate_block(ctx, reach, -reach)
        else:
            small = window(ctx, max_coord)
            big = window(ctx, reach)
        for nu in small:
            want = sorted(((lam, k_zero(lam, nu)) for lam in big
                           if lam != nu and k_zero(lam, nu)), key=lambda p: p[0].key())
            got = successors(ctx, nu)
            c.expect(got == want,
                     f"{ctx.label()}{ctx.block} successors({nu}): {[(str(w), m) for w, m in got]} "
                     f"vs scan {[(str(w), m) for w, m in want]}")
        for lam in small:
            want = sorted(((nu, k_zero(lam, nu)) for nu in big
                           if nu != lam and k_zero(lam, nu)), key=lambda p: p[0].key())
            got = predecessors(ctx, lam)
            c.expect(got == want,
                     f"{ctx.label()}{ctx.block} predecessors({lam}) mismatch")
        for lam in small:
            for nu in small:
                if lam == nu:
                    continue
                val = ext_block(ctx, lam, nu)
                ks = max(k_zero(lam, nu), k_zero(nu, lam))
                c.expect(val.hi <= ks or not val.exact,
                         f"{ctx.label()} ext({lam},{nu}) = {val} exceeds k_zero {ks}")

    # q_5 lift of the rank-one chain: ext(2theta-lift, theta-lift) = 0
    eta = validate_general_q(5, [4, 2, 0, -2, -5])
    zeta = validate_general_q(5, [4, 1, 0, -1, -5])
    val = ext_general_q(eta, zeta)
    c.expect(val == ExtValue.exact_value(0), f"q_5 lifted chain gap: {val}")
    return c.result("brute_force_agreement", t0)


# ---------------------------------------------------------------------------
# 11. round trips


def round_trips(max_n: int = 3, max_coord: int = 4,
                contexts: Optional[list[AlgebraContext]] = None) -> PropertyResult:
    t0 = time.time()
    c = _Check()
    for ctx in contexts if contexts is not None else standard_contexts(max_n):
        if ctx.family == GL:
            weights = enumerate_block(ctx, max_coord, -max_coord)
        else:
            weights = window(ctx, max_coord)
        for w in weights:
            d = diagram_of(ctx, w)
            c.expect(weight_of(ctx, d) == w, f"{ctx.label()} diagram round trip {w}")
            c.expect(parse_ascii(render_ascii(d), ctx) == d,
                     f"{ctx.label()} ascii round trip {render_ascii(d)}")
            if ctx.family == OSP and ctx.t == 2:
                c.expect(tau_inv(tau(d)) == d, f"{ctx.label()} tau round trip {w}")
            if ctx.family == OSP and ctx.t == 1:
                c.expect(tau(tau_inv(d)) == d, f"{ctx.label()} tau_inv round trip {w}")
    from .diagrams import move_one, unmove_one
    from .errors import MoveUndefined, SignRequired
    for ctx in contexts if contexts is not None else standard_contexts(2):
        if ctx.family == OSP and ctx.t == 1:
            continue
        weights = enumerate_block(ctx, 2, -2) if ctx.family == GL else window(ctx, 2)
        for w in weights:
            d = diagram_of(ctx, w)
            positions = sorted({p for p in d.xs})
            for a in positions:
                q = a + 1
                while q <= max(positions, default=a) + 3:
                    try:
                        moved = move_one(d, a, q)
                    except MoveUndefined:
                        q += 1
                        continue
                    except SignRequired:
                        moved = move_one(d, a, q, 1)
                    back = unmove_one(moved, q, a, d.sign)
                    c.expect(back == d, f"{ctx.label()} move({a}->{q}) round trip on {w}")
                    q += 1
    return c.result("round_trips", t0)


# ---------------------------------------------------------------------------
# suite runner


GLOBAL_PROPERTIES: list[tuple[str, Callable[[], PropertyResult]]] = [
    ("golden_tables", golden_tables),
    ("closed_formulas", closed_formulas),
    ("graph_figures", graph_figures),
    ("window_isomorphism", window_isomorphism),
]

WINDOW_PROPERTIES = [
    ("oracle_equivalence", oracle_equivalence),
    ("parity_monomiality", parity_monomiality),
    ("w_support", w_support),
    ("out_degrees", out_degrees),
    ("bipartiteness", bipartiteness),
    ("brute_force_agreement", brute_force_agreement),
    ("round_trips", round_trips),
]

ALL_PROPERTY_NAMES = [n for n, _ in GLOBAL_PROPERTIES] + [n for n, _ in WINDOW_PROPERTIES]


def run_suite(
    names: Optional[Iterable[str]] = None,
    contexts: Optional[list[AlgebraContext]] = None,
    max_coord: Optional[int] = None,
) -> list[PropertyResult]:
    """Run properties in declaration order; window properties honor the filter."""
    selected = set(names) if names else None
    results = []
    for name, fn in GLOBAL_PROPERTIES:
        if selected is not None and name not in selected:
            continue
        results.append(fn())
    for name, fn in WINDOW_PROPERTIES:
        if selected is not None and name not in selected:
            continue
        kwargs = {}
        if contexts is not None:
            kwargs["contexts"] = contexts
        if max_coord is not None:
            kwargs["max_coord"] = max_coord
        results.append(fn(**kwargs))
    return results
