"""Weight diagrams, arch diagrams, symbol moves and the ASCII wire format.

A diagram stores the multiset of x positions (repeats only at position 0),
the core symbols of a general q-weight, a > marker at zero (`ell`), the
half-integral flag and the osp sign.  Positions are exact Fractions: integers
for B0/gl, odd halves for B1/2.

Arch construction follows one pass from right to left: every x at a nonzero
position grabs the next free position; the zero stack is processed bottom-up
afterwards (two free positions per x, except the lowest x for osp(2n|2n) and
osp(2n+1|2n) which grabs one); for odd q the > at zero grabs one last free
position (the wobbly arch).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    ContextMismatch,
    MalformedDiagram,
    MoveUndefined,
    NoSymbol,
    ParseError,
    SignIllegal,
    SignRequired,
)
from .weights import (
    GL,
    OSP,
    Q,
    AlgebraContext,
    BlockWeight,
    GeneralQWeight,
    core_of,
    format_rational,
    osp_context,
    parse_rational,
    tau_preimage,
    tau_weight,
    validate_weight,
    _x_and_core_positions,
)

GENQ = "genq"

TWO = "two"
THREE = "three"
WOBBLY = "wobbly"

LESS = "Less"
GREATER = "Greater"
INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class WeightDiagram:
    """Position -> symbol data of a weight diagram."""

    family: str                      # gl | osp | q | genq
    xs: tuple[Fraction, ...]         # ascending, repeats only at 0
    t: Optional[int] = None          # osp only
    ell: int = 0                     # 1 iff > sits at position 0
    half: bool = False
    sign: Optional[int] = None
    core: tuple[tuple[Fraction, str], ...] = ()   # genq: (position, '>'|'<')

    @property
    def zero_count(self) -> int:
        return sum(1 for p in self.xs if p == 0)

    def x_count(self, p: Fraction) -> int:
        return sum(1 for q in self.xs if q == p)

    def occupied(self, p: Fraction) -> bool:
        if self.x_count(p) > 0:
            return True
        if p == 0 and self.ell:
            return True
        return any(cp == p for cp, _ in self.core)

    def nonzero_positions(self) -> list[Fraction]:
        return sorted({p for p in self.xs if p != 0})


@dataclass(frozen=True)
class Arch:
    kind: str                    # two | three | wobbly
    left: Fraction
    ends: tuple[Fraction, ...]   # one end, or two increasing ends

    @property
    def max_end(self) -> Fraction:
        return self.ends[-1]

    def __str__(self) -> str:
        ends = ",".join(format_rational(e) for e in self.ends)
        if self.kind == WOBBLY:
            return f"wob({format_rational(self.left)};{ends})"
        return f"arc({format_rational(self.left)};{ends})"


@dataclass(frozen=True)
class ArchDiagram:
    base: WeightDiagram
    arches: tuple[Arch, ...]     # construction order

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.arches)


def context_of(d: WeightDiagram, block_hint: Optional[str] = None) -> AlgebraContext:
    """Reconstruct the AlgebraContext a block diagram belongs to."""
    n = len(d.xs)
    if d.family == GL:
        return AlgebraContext(GL, n)
    if d.family == OSP:
        return osp_context(n, d.t)
    if d.family == Q:
        block = "B1/2" if d.half else "B0"
        return AlgebraContext(Q, n, ell=d.ell, block=block)
    raise ContextMismatch("general q diagrams carry no block context")


def diagram_of(ctx: AlgebraContext, w: BlockWeight) -> WeightDiagram:
    if w.ctx != ctx:
        raise ContextMismatch("weight does not belong to this context")
    xs = tuple(sorted(w.coords))
    if ctx.family == GL:
        return WeightDiagram(GL, xs)
    if ctx.family == OSP:
        return WeightDiagram(OSP, xs, t=ctx.t, ell=1 if ctx.t == 2 else 0, sign=w.sign)
    return WeightDiagram(Q, xs, ell=ctx.ell, half=ctx.half)


def weight_of(ctx: AlgebraContext, d: WeightDiagram) -> BlockWeight:
    if context_of(d) != ctx:
        raise ContextMismatch("diagram does not match the context")
    for p in d.nonzero_positions():
        if d.x_count(p) > 1:
            raise MalformedDiagram(f"stacked x at nonzero position {p}")
    coords = tuple(sorted(d.xs, reverse=True))
    try:
        return validate_weight(ctx, coords, d.sign)
    except (SignIllegal, SignRequired) as exc:
        raise MalformedDiagram(str(exc)) from exc


def qdiagram_of(w: GeneralQWeight) -> WeightDiagram:
    """Glue each +-pair of coordinates to an x; survivors become core symbols."""
    xs, cores = _x_and_core_positions(w)
    ell = 1 if any(p == 0 for p, _ in cores) else 0
    nonzero_core = tuple((p, s) for p, s in cores if p != 0)
    half = any(c.denominator == 2 for c in w.coords)
    return WeightDiagram(GENQ, tuple(sorted(xs)), ell=ell, half=half, core=nonzero_core)


# ---------------------------------------------------------------------------
# arch construction


def _free_positions(d: WeightDiagram, used: set[Fraction], start: Fraction) -> Iterator[Fraction]:
    p = start + 1
    while True:
        if not d.occupied(p) and p not in used:
            yield p
        p += 1


def arcs(d: WeightDiagram) -> ArchDiagram:
    used: set[Fraction] = set()
    arches: list[Arch] = []

    def take(start: Fraction, count: int) -> list[Fraction]:
        got = []
        for p in _free_positions(d, used, start):
            got.append(p)
            used.add(p)
            if len(got) == count:
                return got
        raise AssertionError("unreachable")

    if d.family == GL:
        # no zero stack: every x, wherever it sits, gets a two-legged arch
        for p in sorted(set(d.xs), reverse=True):
            (b,) = take(p, 1)
            arches.append(Arch(TWO, p, (b,)))
        return ArchDiagram(d, tuple(arches))

    for p in sorted(d.nonzero_positions(), reverse=True):
        (b,) = take(p, 1)
        arches.append(Arch(TWO, p, (b,)))

    lowest_two_legged = d.family == OSP and d.t in (0, 1)
    zero = Fraction(0)
    for j in range(d.zero_count):
        if lowest_two_legged and j == 0:
            (b,) = take(zero, 1)
            arches.append(Arch(TWO, zero, (b,)))
        else:
            b1, b2 = take(zero, 2)
            arches.append(Arch(THREE, zero, (b1, b2)))

    if d.ell and d.family in (Q, GENQ):
        (b,) = take(zero, 1)
        arches.append(Arch(WOBBLY, zero, (b,)))

    return ArchDiagram(d, tuple(arches))


def arc_ends(d: WeightDiagram, p) -> set[Fraction]:
    """Positions connected with p; for p=0 the union over all zero arches."""
    p = Fraction(p)
    ad = arcs(d)
    ends = [a for a in ad.arches if a.left == p]
    if not ends:
        raise NoSymbol(f"no arch originates at {p}")
    if p == 0:
        return {e for a in ends for e in a.ends}
    return set(ends[0].ends)


def arch_compare(a1: Arch, a2: Arch) -> str:
    """Containment order: the arch that runs below the other is smaller."""
    if a1.left == a2.left:
        if a1.max_end == a2.max_end:
            return INCOMPARABLE
        return GREATER if a1.max_end > a2.max_end else LESS
    outer, inner, flipped = (a1, a2, False) if a1.left < a2.left else (a2, a1, True)
    if inner.left < outer.max_end:
        return LESS if flipped else GREATER
    return INCOMPARABLE


# ---------------------------------------------------------------------------
# symbol moves


def _recompute_sign(d: WeightDiagram, new_xs: tuple[Fraction, ...], sign: Optional[int]) -> Optional[int]:
    if d.family != OSP:
        if sign is not None:
            raise SignIllegal("this family carries no signs")
        return None
    zeros = sum(1 for p in new_xs if p == 0)
    if d.t == 0:
        signed = zeros == 0 and len(new_xs) > 0
    elif d.t == 1:
        signed = zeros > 0
    else:
        signed = False
    if not signed:
        if sign is not None:
            raise SignIllegal("the resulting diagram is unsigned")
        return None
    if sign is not None:
        if d.sign is not None and sign != d.sign:
            raise SignIllegal("cannot flip an existing sign by a move")
        return sign
    if d.sign is not None:
        return d.sign
    raise SignRequired("the resulting diagram needs a sign")


def _replace(xs: tuple[Fraction, ...], remove: list[Fraction], add: list[Fraction]) -> tuple[Fraction, ...]:
    pool = list(xs)
    for r in remove:
        pool.remove(r)
    return tuple(sorted(pool + add))


def move_one(d: WeightDiagram, a, q, sign: Optional[int] = None) -> WeightDiagram:
    """(f)_a^q: move one x from a to the free position q > a."""
    a, q = Fraction(a), Fraction(q)
    if d.x_count(a) == 0:
        raise MoveUndefined(f"no x at position {a}")
    if q <= a or d.occupied(q):
        raise MoveUndefined(f"position {q} is not a free target right of {a}")
    new_xs = _replace(d.xs, [a], [q])
    new_sign = _recompute_sign(d, new_xs, sign)
    return WeightDiagram(d.family, new_xs, t=d.t, ell=d.ell, half=d.half, sign=new_sign, core=d.core)


def move_two(d: WeightDiagram, p, q, sign: Optional[int] = None) -> WeightDiagram:
    """(f)_{0,0}^{p,q}: move two x from the zero stack to free p < q."""
    p, q = Fraction(p), Fraction(q)
    if d.zero_count < 2:
        raise MoveUndefined("need at least two x at the zero position")
    if not (0 < p < q) or d.occupied(p) or d.occupied(q):
        raise MoveUndefined(f"positions {p},{q} are not free targets")
    zero = Fraction(0)
    new_xs = _replace(d.xs, [zero, zero], [p, q])
    new_sign = _recompute_sign(d, new_xs, sign)
    return WeightDiagram(d.family, new_xs, t=d.t, ell=d.ell, half=d.half, sign=new_sign, core=d.core)


def unmove_one(d: WeightDiagram, q, a, sign: Optional[int] = None) -> WeightDiagram:
    """Inverse of move_one: pull the x at q back to a < q (0 may stack)."""
    a, q = Fraction(a), Fraction(q)
    if d.x_count(q) == 0:
        raise MoveUndefined(f"no x at position {q}")
    if a >= q:
        raise MoveUndefined("pull-back must go left")
    # position 0 accepts a stack for every family but gl
    stack_target = a == 0 and d.family != GL
    if not stack_target and d.occupied(a):
        raise MoveUndefined(f"position {a} is occupied")
    new_xs = _replace(d.xs, [q], [a])
    new_sign = _recompute_sign(d, new_xs, sign)
    return WeightDiagram(d.family, new_xs, t=d.t, ell=d.ell, half=d.half, sign=new_sign, core=d.core)


def unmove_two(d: WeightDiagram, p, q, sign: Optional[int] = None) -> WeightDiagram:
    """Inverse of move_two: pull the x at p and at q back onto the zero stack."""
    p, q = Fraction(p), Fraction(q)
    if d.family == GL:
        raise MoveUndefined("gl diagrams have no zero stack")
    if not (0 < p < q) or d.x_count(p) == 0 or d.x_count(q) == 0:
        raise MoveUndefined("need x at both positions")
    zero = Fraction(0)
    new_xs = _replace(d.xs, [p, q], [zero, zero])
    new_sign = _recompute_sign(d, new_xs, sign)
    return WeightDiagram(d.family, new_xs, t=d.t, ell=d.ell, half=d.half, sign=new_sign, core=d.core)


# ---------------------------------------------------------------------------
# tau


def tau(d: WeightDiagram) -> WeightDiagram:
    """The osp(2n+2|2n) -> osp(2n+1|2n) diagram bijection."""
    ctx = context_of(d)
    if ctx.family != OSP or ctx.t != 2:
        raise ContextMismatch("tau applies to osp t=2 diagrams")
    w = weight_of(ctx, d)
    image = tau_weight(w)
    return diagram_of(image.ctx, image)


def tau_inv(d: WeightDiagram) -> WeightDiagram:
    ctx = context_of(d)
    if ctx.family != OSP or ctx.t != 1:
        raise ContextMismatch("tau_inv applies to osp t=1 diagrams")
    w = weight_of(ctx, d)
    pre = tau_preimage(w)
    return diagram_of(pre.ctx, pre)


# ---------------------------------------------------------------------------
# ASCII rendering and parsing


def _zero_token(d: WeightDiagram) -> str:
    k = d.zero_count
    if k == 0:
        return ">" if d.ell else "o"
    return f"x^{k}" + (">" if d.ell else "")


def render_ascii(obj) -> str:
    """Stable one-line form; `parse_ascii` inverts it for weight diagrams."""
    if isinstance(obj, ArchDiagram):
        return str(obj)
    d: WeightDiagram = obj
    prefix = []
    if d.family == GL:
        start = min(d.xs) if d.xs else Fraction(0)
        prefix.append(f"offset={format_rational(start)};")
    elif d.half:
        start = Fraction(1, 2)
        prefix.append("half;")
    else:
        start = Fraction(0)
    stop = max([start] + list(d.xs) + [p for p, _ in d.core])
    if d.sign is not None:
        prefix.append("+" if d.sign > 0 else "-")
    tokens = []
    p = start
    while p <= stop:
        if p == 0 and d.family != GL:
            tokens.append(_zero_token(d))
        elif d.x_count(p) > 0:
            tokens.append("x")
        else:
            sym = next((s for cp, s in d.core if cp == p), None)
            tokens.append(sym if sym else "o")
        p += 1
    return " ".join(prefix + tokens)


def parse_ascii(text: str, ctx: AlgebraContext) -> WeightDiagram:
    toks = text.split()
    if not toks:
        raise ParseError("empty diagram")
    start = Fraction(0)
    if toks and toks[0].startswith("offset="):
        if ctx.family != GL:
            raise ParseError("offset prefix is for gl diagrams")
        start = parse_rational(toks[0][len("offset="):].rstrip(";"))
        toks = toks[1:]
    elif toks and toks[0] == "half;":
        if not ctx.half:
            raise ParseError("half prefix is for B1/2 diagrams")
        start = Fraction(1, 2)
        toks = toks[1:]
    elif ctx.half:
        raise ParseError("B1/2 diagrams need the half; prefix")
    sign = None
    if toks and toks[0] in ("+", "-"):
        sign = 1 if toks[0] == "+" else -1
        toks = toks[1:]

    xs: list[Fraction] = []
    ell = 0
    p = start
    for tok in toks:
        if tok == "o":
            pass
        elif tok == "x":
            xs.append(p)
        elif tok == ">":
            if p != 0:
                raise ParseError("core symbols occur only in general q diagrams")
            ell = 1
        elif tok.startswith("x^"):
            body = tok[2:]
            if body.endswith(">"):
                ell = 1
                body = body[:-1]
            try:
                k = int(body)
            except ValueError:
                raise ParseError(f"bad token {tok!r}") from None
            if p != 0 or k < 1:
                raise ParseError("stacked x occurs only at position 0")
            xs.extend([p] * k)
        else:
            raise ParseError(f"bad token {tok!r}")
        p += 1

    fam = ctx.family
    want_ell = 1 if (fam == Q and ctx.ell == 1) or (fam == OSP and ctx.t == 2) else 0
    if ell != want_ell:
        raise ParseError("the > marker does not match the context")
    d = WeightDiagram(fam, tuple(sorted(xs)), t=ctx.t if fam == OSP else None,
                      ell=want_ell, half=ctx.half, sign=sign)
    weight_of(ctx, d)  # reject malformed input early
    return d
