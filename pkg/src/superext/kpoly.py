"""Exact K-polynomial computations.

`kpoly` evaluates the closed forms: a nonzero value occurs only when the top
diagram is the bottom diagram with one x moved right (or, for osp, two x
moved off the zero stack), landing at the top weight's leading coordinate;
the exponents are read off the arch ends.  `kpoly_q_recursive` is the
independent recursion oracle for the q-families and must agree with `kpoly`
on every pair.

Restricted polynomials drop the leading coordinates shared by both weights
and re-run the closed form at lower rank; `k_hat` collects them against a
second variable w, `k_zero` is the constant term at s_zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .diagrams import THREE, arc_ends, arcs, diagram_of
from .errors import ContextMismatch, EqualWeights, NotInBlock, OspLambdaZero
from .weights import (
    GL,
    OSP,
    Q,
    AlgebraContext,
    BlockWeight,
    _diagram_signed,
    gl_context,
    osp_context,
    q_context,
    tau_preimage,
    validate_weight,
)


@dataclass(frozen=True)
class KPoly:
    """Polynomial in z with nonnegative integer coefficients, ascending."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients are not normalized")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("negative coefficient")

    @staticmethod
    def from_coeffs(cs) -> "KPoly":
        cs = list(cs)
        while cs and cs[-1] == 0:
            cs.pop()
        return KPoly(tuple(cs))

    @staticmethod
    def zero() -> "KPoly":
        return KPoly(())

    @staticmethod
    def monomial(power: int, coeff: int = 1) -> "KPoly":
        if coeff == 0:
            return KPoly(())
        return KPoly((0,) * power + (coeff,))

    def __add__(self, other: "KPoly") -> "KPoly":
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return KPoly.from_coeffs(a)

    def shift_up(self) -> "KPoly":
        """Multiply by z."""
        if not self.coeffs:
            return self
        return KPoly((0,) + self.coeffs)

    def shift_down_plus(self) -> "KPoly":
        """(z^{-1} P)_+ : divide by z and drop the negative power."""
        return KPoly.from_coeffs(self.coeffs[1:])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __call__(self, x: int) -> int:
        return sum(c * x**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                zpart = "z" if i == 1 else f"z^{i}"
                parts.append(zpart if c == 1 else f"{c}{zpart}")
        return "+".join(parts)


def truncate_plus(terms: Mapping[int, int]) -> KPoly:
    """Drop all negative powers of a Laurent polynomial given as power->coeff."""
    top = max((p for p in terms if p >= 0 and terms[p]), default=-1)
    cs = [terms.get(i, 0) for i in range(top + 1)]
    return KPoly.from_coeffs(cs)


def parity_bar(p: KPoly) -> int:
    """Constant term modulo 2."""
    return p.constant_term() % 2


ZERO = KPoly.zero()
ONE = KPoly.monomial(0)


def _check_pair(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight) -> None:
    if lam.ctx != ctx or nu.ctx != ctx:
        raise ContextMismatch("weights do not belong to the given context")


def _is_zero_weight(w: BlockWeight) -> bool:
    return all(c == 0 for c in w.coords)


def _zexp(diff: Fraction) -> int:
    assert diff.denominator == 1
    return diff.numerator


def _single_move(f_xs, g_xs) -> Optional[tuple[Fraction, Fraction]]:
    """(a, q) if the top multiset is the bottom one with one x moved right."""
    removed = list(f_xs)
    added = list(g_xs)
    for x in list(f_xs):
        if x in added:
            removed.remove(x)
            added.remove(x)
    if len(removed) == 1 and len(added) == 1 and added[0] > removed[0]:
        return removed[0], added[0]
    return None


def _double_move(f_xs, g_xs) -> Optional[tuple[Fraction, Fraction]]:
    """(p, q) if the top multiset moves two zero-stack x to p < q."""
    removed = list(f_xs)
    added = list(g_xs)
    for x in list(f_xs):
        if x in added:
            removed.remove(x)
            added.remove(x)
    if removed == [Fraction(0), Fraction(0)] and len(added) == 2:
        p, q = sorted(added)
        if 0 < p < q:
            return p, q
    return None


def _k00(m: int) -> KPoly:
    return KPoly.from_coeffs([0] + [1] * (m - 1)) if m >= 2 else ZERO


def kpoly(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight) -> KPoly:
    """The closed-form Poincare polynomial of the pair (lam, nu)."""
    _check_pair(ctx, lam, nu)
    if ctx.family == OSP and ctx.t == 1:
        t2 = osp_context(ctx.n, 2)
        return kpoly(t2, tau_preimage(lam), tau_preimage(nu))

    if ctx.family == Q and _is_zero_weight(lam):
        return _k00(ctx.m) if nu == lam else ZERO
    if ctx.family == OSP and _is_zero_weight(lam):
        if nu == lam:
            return ZERO
        raise OspLambdaZero("K with osp top weight 0 is undetermined")

    f = diagram_of(ctx, nu)
    g = diagram_of(ctx, lam)
    if ctx.family == OSP and f.sign is not None and g.sign is not None and f.sign != g.sign:
        return ZERO

    lam1 = max(lam.coords) if lam.coords else Fraction(0)
    mv = _single_move(f.xs, g.xs)
    if mv is not None:
        a, q = mv
        if q != lam1:
            return ZERO
        ends = arc_ends(f, a)
        b = max(ends)
        if ctx.family == Q and a == 0:
            window = sorted(i for i in ends if lam1 <= i < b)
            if not window:
                return ZERO
            lo = KPoly.monomial(_zexp(window[0] - lam1))
            hi = KPoly.monomial(_zexp(window[-1] - lam1))
            return lo + hi
        if ctx.family == OSP and ctx.t == 0 and a == 0:
            bm = min(ends)
            if lam1 <= bm < b:
                return KPoly.monomial(_zexp(bm - lam1)) + KPoly.monomial(_zexp(b - lam1))
            if lam1 <= b:
                return KPoly.monomial(_zexp(b - lam1))
            return ZERO
        return KPoly.monomial(_zexp(b - lam1)) if lam1 <= b else ZERO

    if ctx.family == OSP:
        dm = _double_move(f.xs, g.xs)
        if dm is not None:
            p, q = dm
            if q != lam1:
                return ZERO
            arch = next((x for x in arcs(f).arches if x.kind == THREE and x.ends[0] == p), None)
            if arch is None:
                return ZERO
            qa = arch.ends[1]
            if lam1 <= qa < max(arc_ends(f, 0)):
                return KPoly.monomial(_zexp(qa - lam1))
            return ZERO
    return ZERO


# ---------------------------------------------------------------------------
# recursion oracle for q


def kpoly_q_recursive(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight) -> KPoly:
    """Independent evaluation of K for the q-families via the rank recursion."""
    _check_pair(ctx, lam, nu)
    if ctx.family != Q:
        raise ContextMismatch("the recursion applies to q contexts")
    half = ctx.half
    memo: dict = {}

    def rec(m: int, lc: tuple[Fraction, ...], nc: tuple[Fraction, ...]) -> KPoly:
        key = (m, lc, nc)
        if key in memo:
            return memo[key]
        memo[key] = res = _rec(m, lc, nc)
        return res

    def _rec(m: int, lc: tuple, nc: tuple) -> KPoly:
        n = len(lc)
        if all(c == 0 for c in lc):
            return _k00(m) if nc == lc else ZERO
        lam1 = lc[0]
        if half and m == 2 and lam1 == Fraction(1, 2):
            return ZERO
        if not half and lam1 == 1:
            # lam is theta
            return ONE + KPoly.monomial(m - 2) if all(c == 0 for c in nc) else ZERO
        lam2 = lc[1] if n >= 2 else Fraction(0)
        lam_minus = (lam1 - 1,) + lc[1:]
        if nc == lam_minus:
            return ONE
        if lam1 > lam2 + 1:
            sub = rec(m, lam_minus, nc)
            res = sub.shift_down_plus()
            ntail = sum(1 for c in nc if c == 0)
            ltail = sum(1 for c in lc if c == 0)
            if ntail > ltail:
                res = res + KPoly.monomial(0, parity_bar(sub))
            return res
        # lam1 == lam2 + 1 forces n >= 2 here: drop to the subalgebra q_{m-2}
        if nc[0] != lam2:
            return ZERO
        return rec(m - 2, lc[1:], nc[1:]).shift_up()

    return rec(ctx.m, lam.coords, nu.coords)


# ---------------------------------------------------------------------------
# restricted polynomials, k_hat, k_zero


def _effective_coords(w: BlockWeight) -> tuple:
    """Coordinates used for restriction, with t=1 read through tau."""
    if w.ctx.family == OSP and w.ctx.t == 1:
        return tau_preimage(w).coords
    return w.coords


def s_zero(lam: BlockWeight, nu: BlockWeight) -> int:
    """n+1-min{i : lam_i != nu_i}: the least rank whose restriction separates."""
    if lam.ctx != nu.ctx:
        raise ContextMismatch("weights live in different blocks")
    if lam == nu:
        raise EqualWeights("s_zero needs distinct weights")
    a, b = _effective_coords(lam), _effective_coords(nu)
    n = lam.ctx.n
    for i in range(n):
        if a[i] != b[i]:
            return n - i
    # same coordinates, different signs: they first differ at the last slot
    return 1


def _restricted_context(ctx: AlgebraContext, s: int) -> AlgebraContext:
    if ctx.family == GL:
        return gl_context(s)
    if ctx.family == OSP:
        return osp_context(s, ctx.t)
    return q_context(2 * s + ctx.ell, block=ctx.block)


def _restrict(w: BlockWeight, rctx: AlgebraContext, s: int) -> BlockWeight:
    # a weight and its suffix are signed together, so the sign carries as is
    coords = w.coords[w.ctx.n - s:]
    return validate_weight(rctx, coords, w.sign if _diagram_signed(rctx, coords) else None)


def k_restricted(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight, s: int) -> KPoly:
    """K of the rank-s restriction; zero when the dropped coordinates differ."""
    _check_pair(ctx, lam, nu)
    if not 1 <= s <= ctx.n:
        raise ValueError(f"s must lie in [1, {ctx.n}]")
    if ctx.family == OSP and ctx.t == 1:
        t2 = osp_context(ctx.n, 2)
        return k_restricted(t2, tau_preimage(lam), tau_preimage(nu), s)
    drop = ctx.n - s
    if lam.coords[:drop] != nu.coords[:drop]:
        return ZERO
    rctx = _restricted_context(ctx, s)
    try:
        rlam = _restrict(lam, rctx, s)
        rnu = _restrict(nu, rctx, s)
    except NotInBlock:
        return ZERO
    return kpoly(rctx, rlam, rnu)


@dataclass(frozen=True)
class KPoly2:
    """Polynomial in (z, w); per-w unknown flags mark skipped osp terms."""

    terms: tuple[tuple[int, int, int], ...] = ()   # (wpow, zpow, coeff), sorted
    unknown: tuple[int, ...] = ()                  # flagged w powers

    @property
    def is_zero(self) -> bool:
        return not self.terms and not self.unknown

    def w_support(self) -> set[int]:
        return {w for w, _, _ in self.terms}

    def z_poly(self, wpow: int) -> KPoly:
        pairs = {z: c for w, z, c in self.terms if w == wpow}
        return truncate_plus(pairs)

    def __str__(self) -> str:
        parts = []
        for w in sorted(self.w_support() | set(self.unknown)):
            wpart = "w" if w == 1 else f"w^{w}"
            if w in self.unknown:
                parts.append(f"?·{wpart}")
                continue
            poly = str(self.z_poly(w))
            if poly == "1":
                parts.append(wpart)
            elif "+" in poly:
                parts.append(f"({poly}){wpart}")
            else:
                parts.append(f"{poly}{wpart}")
        return "+".join(parts) if parts else "0"


def k_hat(ctx: AlgebraContext, lam: BlockWeight, nu: BlockWeight) -> KPoly2:
    """Sum over s of w^s times the rank-s restricted polynomial."""
    _check_pair(ctx, lam, nu)
    terms = []
    unknown = []
    for s in range(1, ctx.n + 1):
        try:
            p = k_restricted(ctx, lam, nu, s)
        except OspLambdaZero:
            unknown.append(s)
            continue
        for i, c in enumerate(p.coeffs):
            if c:
                terms.append((s, i, c))
    return KPoly2(tuple(sorted(terms)), tuple(unknown))


def k_zero(lam: BlockWeight, nu: BlockWeight) -> int:
    """Constant term of the restriction at s_zero; 0 for undetermined osp terms."""
    s = s_zero(lam, nu)
    try:
        p = k_restricted(lam.ctx, lam, nu, s)
    except OspLambdaZero:
        return 0
    return p.constant_term()
