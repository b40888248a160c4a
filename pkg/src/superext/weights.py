"""Algebra families, block weights and the general q_m weight machinery.

A block weight is stored as its coordinate tuple (lambda_1 > lambda_2 > ...)
of exact Fractions; half-integral coordinates occur only in the B1/2 block of
q_{2n}.  No floating point is used anywhere.

For osp(2n+1|2n) (t=1) all numeric invariants (tail, norm, restriction) are
computed through the bijection with osp(2n+2|2n): `tau_preimage` maps a t=1
weight to the t=2 weight whose diagram image under tau it is.  The t=1
coordinate tuple itself is kept for input/output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    ContextMismatch,
    EqualWeights,
    NotInBlock,
    ParseError,
    SignIllegal,
    SignRequired,
    Typical,
    WindowTooLarge,
)

GL = "gl"
OSP = "osp"
Q = "q"

B0 = "B0"
BHALF = "B1/2"

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class AlgebraContext:
    """One of the five block families: which algebra and which block."""

    family: str
    n: int
    t: Optional[int] = None
    ell: Optional[int] = None
    block: str = B0

    def __post_init__(self) -> None:
        if self.family not in (GL, OSP, Q):
            raise ParseError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ParseError("rank must be nonnegative")
        if (self.t is not None) != (self.family == OSP):
            raise ParseError("t is set exactly for osp")
        if self.family == OSP and self.t not in (0, 1, 2):
            raise ParseError("osp needs t in {0,1,2}")
        if (self.ell is not None) != (self.family == Q):
            raise ParseError("ell is set exactly for q")
        if self.family == Q and self.ell not in (0, 1):
            raise ParseError("q needs ell in {0,1}")
        if self.block not in (B0, BHALF):
            raise ParseError(f"unknown block {self.block!r}")
        if self.block == BHALF and not (self.family == Q and self.ell == 0):
            raise ParseError("block B1/2 exists only for q with even m")

    @property
    def m(self) -> int:
        if self.family != Q:
            raise ParseError("m is defined for q only")
        return 2 * self.n + self.ell

    @property
    def half(self) -> bool:
        return self.block == BHALF

    def label(self) -> str:
        if self.family == GL:
            return f"gl({self.n}|{self.n})"
        if self.family == OSP:
            return f"osp({2 * self.n + self.t}|{2 * self.n})"
        return f"q({self.m})"


def gl_context(n: int) -> AlgebraContext:
    return AlgebraContext(GL, n)


def osp_context(n: int, t: int) -> AlgebraContext:
    return AlgebraContext(OSP, n, t=t)


def q_context(m: int, block: str = B0) -> AlgebraContext:
    return AlgebraContext(Q, m // 2, ell=m % 2, block=block)


@dataclass(frozen=True)
class BlockWeight:
    """A dominant weight of the block, as exact coordinates plus osp sign."""

    ctx: AlgebraContext
    coords: tuple[Fraction, ...]
    sign: Optional[int] = None

    def key(self) -> tuple:
        # deterministic sort key; + before - matches the enumeration order
        return (self.coords, 0 if self.sign is None else -self.sign)

    def __str__(self) -> str:
        body = ",".join(format_rational(c) for c in self.coords)
        if self.sign is not None:
            return ("+" if self.sign > 0 else "-") + body
        return body


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _as_fractions(coords: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coords)


def validate_weight(ctx: AlgebraContext, coords: Sequence, sign: Optional[int] = None) -> BlockWeight:
    """Check the block invariants and normalize the sign decoration."""
    cs = _as_fractions(coords)
    if len(cs) != ctx.n:
        raise NotInBlock(f"expected {ctx.n} coordinates, got {len(cs)}")
    if sign is not None and sign not in (1, -1):
        raise SignIllegal("sign must be +1 or -1")

    if ctx.half:
        if any(c <= 0 or c.denominator != 2 for c in cs):
            raise NotInBlock("B1/2 coordinates are positive half-integers")
        if any(cs[i] <= cs[i + 1] for i in range(len(cs) - 1)):
            raise NotInBlock("coordinates must strictly decrease")
    elif ctx.family == GL:
        if any(c.denominator != 1 for c in cs):
            raise NotInBlock("gl coordinates are integers")
        if any(cs[i] <= cs[i + 1] for i in range(len(cs) - 1)):
            raise NotInBlock("coordinates must strictly decrease")
    else:
        if any(c < 0 or c.denominator != 1 for c in cs):
            raise NotInBlock("coordinates are nonnegative integers")
        for i in range(len(cs) - 1):
            if not (cs[i + 1] < cs[i] or cs[i] == cs[i + 1] == 0):
                raise NotInBlock("coordinates must decrease strictly or vanish")

    signed = _diagram_signed(ctx, cs)
    if signed and sign is None:
        raise SignRequired(f"{ctx.label()} weight {cs} needs a sign")
    if not signed and sign is not None:
        raise SignIllegal(f"{ctx.label()} weight {cs} carries no sign")
    return BlockWeight(ctx, cs, sign if signed else None)


def _diagram_signed(ctx: AlgebraContext, cs: tuple[Fraction, ...]) -> bool:
    if ctx.family != OSP:
        return False
    zeros = sum(1 for c in cs if c == 0)
    if ctx.t == 0:
        return zeros == 0 and ctx.n > 0
    if ctx.t == 1:
        return zeros > 0
    return False


def enumerate_block(
    ctx: AlgebraContext,
    max_coord,
    min_coord=None,
    cap: int = DEFAULT_CAP,
) -> list[BlockWeight]:
    """All block weights with coordinates in the window, in lexicographic order.

    gl windows are two-sided (min defaults to -max); the other families start
    at 0 (resp. 1/2).  Signed osp weights are listed with + before -.
    """
    hi = Fraction(max_coord)
    if ctx.family == GL:
        lo = Fraction(min_coord) if min_coord is not None else -hi
    else:
        lo = Fraction(0)
    if hi < lo:
        raise NotInBlock("max_coord must be >= min_coord")

    if ctx.half:
        values = [Fraction(2 * k + 1, 2) for k in range(int(hi - Fraction(1, 2)) + 1)]
        values = [v for v in values if v <= hi]
    else:
        values = [Fraction(k) for k in range(int(lo), int(hi) + 1)]

    out: list[BlockWeight] = []

    def emit(coords: tuple[Fraction, ...]) -> None:
        if _diagram_signed(ctx, coords):
            out.append(BlockWeight(ctx, coords, 1))
            out.append(BlockWeight(ctx, coords, -1))
        else:
            out.append(BlockWeight(ctx, coords, None))
        if len(out) > cap:
            raise WindowTooLarge(f"window holds more than {cap} weights")

    def rec(prefix: list[Fraction], remaining: int) -> None:
        if remaining == 0:
            emit(tuple(prefix))
            return
        for v in values:
            if prefix:
                prev = prefix[-1]
                ok = v < prev or (v == prev == 0 and ctx.family != GL and not ctx.half)
                if not ok:
                    continue
            rec(prefix + [v], remaining - 1)

    rec([], ctx.n)
    out.sort(key=BlockWeight.key)
    return out


def tail(w: BlockWeight) -> int:
    """Number of symbols x at the zero position (0 for gl and B1/2).

    For t=1 this is the tail of the tau-preimage, not the raw zero count.
    """
    if w.ctx.family == OSP and w.ctx.t == 1:
        zeros = sum(1 for c in w.coords if c == 0)
        return zeros - (1 if w.sign == 1 else 0)
    if w.ctx.family == GL or w.ctx.half:
        return 0
    return sum(1 for c in w.coords if c == 0)


def norm(w: BlockWeight) -> Fraction:
    """Coordinate sum, with the tail correction for osp(2n+2|2n)."""
    s = sum(w.coords, Fraction(0))
    if w.ctx.family == OSP and w.ctx.t == 2:
        s -= w.ctx.n - tail(w)
    return s


def pari_rel(a: BlockWeight, b: BlockWeight) -> int:
    if a.ctx != b.ctx:
        raise ContextMismatch("weights live in different blocks")
    d = norm(a) - norm(b)
    if d.denominator != 1:
        raise ContextMismatch("norm difference is not integral")
    return d.numerator % 2


def base_weight(ctx: AlgebraContext) -> BlockWeight:
    """The anchor of the absolute Z2 grading: the minimal weight of the block.

    gl has no minimal weight; the diagram of the zero weight (n-1,...,1,0)
    is used instead.
    """
    if ctx.family == GL:
        return validate_weight(ctx, [ctx.n - 1 - i for i in range(ctx.n)])
    if ctx.half:
        return validate_weight(ctx, [Fraction(2 * (ctx.n - i) - 1, 2) for i in range(ctx.n)])
    coords = [0] * ctx.n
    if ctx.family == OSP and ctx.t == 1:
        return validate_weight(ctx, coords, -1)
    return validate_weight(ctx, coords)


def pari_abs(w: BlockWeight) -> int:
    return pari_rel(w, base_weight(w.ctx))


def tau_preimage(w: BlockWeight) -> BlockWeight:
    """The osp(2n+2|2n) weight mapped to this t=1 weight by tau."""
    ctx = w.ctx
    if ctx.family != OSP or ctx.t != 1:
        raise ContextMismatch("tau_preimage applies to osp t=1 weights")
    t2 = osp_context(ctx.n, 2)
    nonzero = [c + 1 for c in w.coords if c != 0]
    zeros = ctx.n - len(nonzero)
    if zeros == 0:
        coords = nonzero
    elif w.sign == 1:
        coords = nonzero + [Fraction(1)] + [Fraction(0)] * (zeros - 1)
    else:
        coords = nonzero + [Fraction(0)] * zeros
    return validate_weight(t2, coords)


def tau_weight(w: BlockWeight) -> BlockWeight:
    """Apply tau to an osp t=2 weight: the corresponding t=1 weight."""
    ctx = w.ctx
    if ctx.family != OSP or ctx.t != 2:
        raise ContextMismatch("tau applies to osp t=2 weights")
    t1 = osp_context(ctx.n, 1)
    coords = [c - 1 if c > 0 else Fraction(0) for c in w.coords]
    coords.sort(reverse=True)
    has_one = any(c == 1 for c in w.coords)
    has_zero = any(c == 0 for c in w.coords)
    if has_one:
        sign = 1
    elif has_zero:
        sign = -1
    else:
        sign = None
    return validate_weight(t1, coords, sign)


# ---------------------------------------------------------------------------
# general q_m weights


@dataclass(frozen=True)
class GeneralQWeight:
    """A dominant q_m weight sum a_i eps_i, exact and of one integrality class."""

    m: int
    coords: tuple[Fraction, ...]

    def key(self) -> tuple:
        return self.coords

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.coords)


@dataclass(frozen=True)
class CentralCharacter:
    """Core multiset after cancelling a_i + a_j = 0 pairs."""

    core: tuple[Fraction, ...]
    integral: bool
    ell_of: int

    def pi_invariant(self) -> bool:
        return len([c for c in self.core if c != 0]) % 2 == 1


def validate_general_q(m: int, coords: Sequence) -> GeneralQWeight:
    cs = _as_fractions(coords)
    if len(cs) != m:
        raise NotInBlock(f"expected {m} coordinates, got {len(cs)}")
    if any(c.denominator not in (1, 2) for c in cs):
        raise NotInBlock("coordinates must be integral or half-integral")
    dens = {c.denominator for c in cs}
    if dens == {1, 2}:
        raise NotInBlock("coordinates must share one integrality class")
    for i in range(len(cs) - 1):
        if not (cs[i] > cs[i + 1] or cs[i] == cs[i + 1] == 0):
            raise NotInBlock("coordinates must decrease strictly or vanish")
    return GeneralQWeight(m, cs)


def core_of(w: GeneralQWeight) -> CentralCharacter:
    values = list(w.coords)
    values.sort()
    survivors: list[Fraction] = []
    for v in values:
        if survivors and survivors[-1] + v == 0:
            survivors.pop()
        else:
            survivors.append(v)
    # zeros pair among themselves: at most one survives
    core = tuple(sorted(survivors, reverse=True))
    integral = all(c.denominator == 1 for c in w.coords) if w.coords else True
    return CentralCharacter(core, integral, 1 if any(c == 0 for c in core) else 0)


def atypicality(w: GeneralQWeight) -> int:
    return (w.m - len(core_of(w).core)) // 2


def _x_and_core_positions(w: GeneralQWeight) -> tuple[list[Fraction], list[tuple[Fraction, str]]]:
    """Positions of the glued x symbols and of the surviving core symbols."""
    values = sorted(w.coords)
    survivors: list[Fraction] = []
    xs: list[Fraction] = []
    for v in values:
        if survivors and survivors[-1] + v == 0:
            xs.append(abs(v))
            survivors.pop()
        else:
            survivors.append(v)
    cores = [(abs(v), ">" if v >= 0 else "<") for v in survivors]
    return sorted(xs), sorted(cores)


def is_stable(w: GeneralQWeight) -> bool:
    xs, cores = _x_and_core_positions(w)
    nonzero_core = [p for p, _ in cores if p != 0]
    if not xs or not nonzero_core:
        return True
    return max(xs) < min(nonzero_core)


def reduce_weight(w: GeneralQWeight) -> tuple[AlgebraContext, BlockWeight]:
    """Erase nonzero-position core symbols (closing the gaps) and reread."""
    k = atypicality(w)
    if k == 0:
        raise Typical("atypicality zero: nothing to reduce")
    cc = core_of(w)
    xs, cores = _x_and_core_positions(w)
    nonzero_core = sorted(p for p, _ in cores if p != 0)
    half = not cc.integral
    ctx = AlgebraContext(Q, k, ell=cc.ell_of, block=BHALF if half else B0)

    def compact(p: Fraction) -> Fraction:
        below = sum(1 for c in nonzero_core if c < p)
        return p - below

    new_xs = sorted((compact(p) for p in xs), reverse=True)
    return ctx, validate_weight(ctx, new_xs)


def block_weight_to_general(w: BlockWeight) -> GeneralQWeight:
    """Embed a q block weight as the general weight sum lam_i(eps_i - eps_{m+1-i})."""
    ctx = w.ctx
    if ctx.family != Q:
        raise ContextMismatch("only q block weights embed into general weights")
    pos = list(w.coords)
    mid = [Fraction(0)] * ctx.ell
    neg = [-c for c in reversed(pos)]
    return validate_general_q(ctx.m, pos + mid + neg)


# ---------------------------------------------------------------------------
# epsilon/delta rendering


def _fmt_term(coef: Fraction, sym: str, first: bool) -> str:
    if coef == 0:
        return ""
    mag = abs(coef)
    body = sym if mag == 1 else f"{format_rational(mag)}{sym}"
    if first:
        return body if coef > 0 else f"-{body}"
    return f"+{body}" if coef > 0 else f"-{body}"


def _linear_combination(terms: Iterable[tuple[Fraction, str]]) -> str:
    parts = []
    for coef, sym in terms:
        parts.append(_fmt_term(coef, sym, not parts))
    return "".join(parts) if parts else "0"


def to_epsilon_delta(ctx: AlgebraContext, w) -> str:
    """Render lambda = (lambda+rho) - rho in the eps/delta basis."""
    if isinstance(w, GeneralQWeight):
        return _linear_combination((c, f"e{i + 1}") for i, c in enumerate(w.coords) if c != 0)
    cs = w.coords
    n = ctx.n
    if ctx.family == GL:
        # lambda+rho = sum lam_i(eps_i - delta_{n+1-i}), rho = sum (n-i)(eps_i - delta_{n+1-i})
        eps = [(cs[i] - (n - 1 - i), f"e{i + 1}") for i in range(n)]
        dlt = [(-(cs[n - j] - (j - 1)), f"d{j}") for j in range(1, n + 1)]
        return _linear_combination([t for t in eps + dlt if t[0] != 0])
    if ctx.family == Q:
        m = ctx.m
        terms = []
        for i, c in enumerate(cs):
            if c != 0:
                terms.append((c, f"e{i + 1}"))
                terms.append((-c, f"e{m - i}"))
        terms.sort(key=lambda t: int(t[1][1:]))
        return _linear_combination(terms)
    # osp
    if ctx.t in (0, 2):
        terms = []
        for i, c in enumerate(cs):
            if c == 0:
                continue
            epscoef = c
            if ctx.t == 0 and i == n - 1 and w.sign is not None:
                epscoef = c * w.sign
            terms.append((epscoef, f"e{i + 1}"))
            terms.append((c, f"d{i + 1}"))
        terms.sort(key=lambda t: (t[1][0], int(t[1][1:])))
        return _linear_combination(terms)
    # t=1: lambda = sum_{i<s}[(lam_i+1)e_i + lam_i d_i] + (xi=+ ? e_s : 0)
    terms = []
    s = next((i for i, c in enumerate(cs) if c == 0), n)
    for i in range(s):
        terms.append((cs[i] + 1, f"e{i + 1}"))
        terms.append((cs[i], f"d{i + 1}"))
    if s < n and w.sign == 1:
        terms.append((Fraction(1), f"e{s + 1}"))
    terms = [t for t in terms if t[0] != 0]
    terms.sort(key=lambda t: (t[1][0], int(t[1][1:])))
    return _linear_combination(terms)


# ---------------------------------------------------------------------------
# shared input grammar (CLI and service)


def parse_algebra(text: str, block: str = B0) -> AlgebraContext:
    """`gl(n|n)`, `osp(M|2n)` or `q(m)` with an optional block flag."""
    s = text.strip().lower().replace(" ", "")
    try:
        name, rest = s.split("(", 1)
        if not rest.endswith(")"):
            raise ValueError
        args = rest[:-1]
        if name == "gl":
            a, b = args.split("|")
            if int(a) != int(b):
                raise ParseError("only gl(n|n) is supported")
            return AlgebraContext(GL, int(a), block=block)
        if name == "osp":
            big, small = (int(x) for x in args.split("|"))
            if small % 2 != 0:
                raise ParseError("osp(M|2n) needs an even second entry")
            n = small // 2
            t = big - 2 * n
            if t not in (0, 1, 2):
                raise ParseError("osp(M|2n) needs M - 2n in {0,1,2}")
            return AlgebraContext(OSP, n, t=t, block=block)
        if name == "q":
            return q_context(int(args), block=block)
        raise ValueError
    except ParseError:
        raise
    except ValueError:
        raise ParseError(f"cannot parse algebra {text!r}") from None


def parse_rational(tok: str) -> Fraction:
    tok = tok.strip()
    try:
        if "/" in tok:
            a, b = tok.split("/")
            return Fraction(int(a), int(b))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r}") from None


def parse_weight_spec(text: str) -> tuple[list[Fraction], Optional[int]]:
    """Comma-separated coordinates, halves as a/2, optional leading +/- token."""
    s = text.strip()
    sign: Optional[int] = None
    if s.startswith("+") or s.startswith("-"):
        sign = 1 if s[0] == "+" else -1
        s = s[1:].strip()
    if not s:
        return [], sign
    return [parse_rational(tok) for tok in s.split(",")], sign


def parse_block_weight(ctx: AlgebraContext, text: str) -> BlockWeight:
    coords, sign = parse_weight_spec(text)
    return validate_weight(ctx, coords, sign)
