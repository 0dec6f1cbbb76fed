"""Brute-force ground truth for desk-scale contexts.

Everything here trades speed for independence: enumeration closes the
simple elements from the identity, divisibility in the braid case is
decided by length additivity of permutation composition rather than by
descent stripping, lattice operations are maxima over enumerated divisor
sets, and minimality claims are checked against every enumerated
candidate.  All entry points refuse contexts too large to enumerate.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .braid import BraidContext, _inverse, _mult
from .contract import GarsideContext, Simple
from .errors import OracleSizeError

ENUMERATION_LIMIT = 720  # 6! simples; braids beyond six strands are refused


def enumerate_simples(
    ctx: GarsideContext, limit: int = ENUMERATION_LIMIT
) -> list[Simple]:
    """All simple elements, as the closure of {1} under right atom products."""
    seen = {ctx.identity}
    order = [ctx.identity]
    frontier = [ctx.identity]
    while frontier:
        nxt = []
        for s in frontier:
            for a in ctx.atoms:
                t = ctx.mult_atom_right(s, a)
                if t is not None and t not in seen:
                    if len(order) >= limit:
                        raise OracleSizeError(
                            f"context has more than {limit} simple elements"
                        )
                    seen.add(t)
                    order.append(t)
                    nxt.append(t)
        frontier = nxt
    return order


def is_left_divisor(ctx: GarsideContext, d: Simple, s: Simple) -> bool:
    """Oracle prefix test d ≼ s between simples.

    For braids this is decided by inversion-count additivity of the
    permutation tables (an independent characterization); generically it
    strips the first atom of d off both arguments.
    """
    if isinstance(ctx, BraidContext):
        q = _mult(_inverse(d), s)
        return _inversions(d) + _inversions(q) == _inversions(s)
    while True:
        fd = ctx.first_left_divisor(d)
        if fd is None:
            return True
        a, d = fd
        s2 = ctx.divide_atom_left(a, s)
        if s2 is None:
            return False
        s = s2


def is_right_divisor(ctx: GarsideContext, d: Simple, s: Simple) -> bool:
    """Oracle suffix test: d divides s on the right."""
    if isinstance(ctx, BraidContext):
        q = _mult(s, _inverse(d))
        return _inversions(d) + _inversions(q) == _inversions(s)
    while True:
        fd = ctx.first_right_divisor(d)
        if fd is None:
            return True
        a, d = fd
        s2 = ctx.divide_atom_right(s, a)
        if s2 is None:
            return False
        s = s2


def _inversions(s) -> int:
    n = len(s)
    return sum(1 for i in range(n - 1) for j in range(i + 1, n) if s[i] > s[j])


def divisors_of_simple(
    ctx: GarsideContext, simples: Iterable[Simple], s: Simple, side: str = "left"
) -> list[Simple]:
    test = is_left_divisor if side == "left" else is_right_divisor
    return [d for d in simples if test(ctx, d, s)]


def brute_gcd_simple(
    ctx: GarsideContext,
    simples: list[Simple],
    s: Simple,
    t: Simple,
    side: str = "left",
) -> Simple:
    """The common divisor every other common divisor divides."""
    test = is_left_divisor if side == "left" else is_right_divisor
    common = [d for d in simples if test(ctx, d, s) and test(ctx, d, t)]
    best = [d for d in common if all(test(ctx, c, d) for c in common)]
    if len(best) != 1:
        raise OracleSizeError(f"divisor intersection has no unique maximum: {best}")
    return best[0]


def brute_lcm_simple(
    ctx: GarsideContext,
    simples: list[Simple],
    s: Simple,
    t: Simple,
    side: str = "left",
) -> Simple:
    """The common multiple (within the simples) dividing every other one."""
    test = is_left_divisor if side == "left" else is_right_divisor
    common = [m for m in simples if test(ctx, s, m) and test(ctx, t, m)]
    best = [m for m in common if all(test(ctx, m, c) for c in common)]
    if len(best) != 1:
        raise OracleSizeError(f"multiple intersection has no unique minimum: {best}")
    return best[0]


def brute_minimal_simple(
    ctx: GarsideContext,
    simples: list[Simple],
    predicate: Callable[[Simple], bool],
) -> Simple:
    """The unique prefix-minimal simple satisfying the predicate."""
    hits = [s for s in simples if predicate(s)]
    minimal = [
        s
        for s in hits
        if not any(h != s and is_left_divisor(ctx, h, s) for h in hits)
    ]
    if len(minimal) != 1:
        raise OracleSizeError(
            f"predicate has {len(minimal)} minimal satisfiers, expected one"
        )
    return minimal[0]
