"""Cyclic sliding and the conjugation operators built around it.

The preferred prefix of ``x`` is the simple ``ι(x) ∧ ∂(φ(x))``; cyclic
sliding conjugates ``x`` by it.  The preferred suffix and cyclic right
sliding are the mirror notions for the suffix order.  Transport completes
the square made by a conjugation and one sliding step on each side;
pullback is its partial inverse, the minimal positive element whose
transport admits a given prefix.  Iterating cyclic sliding reaches a
periodic orbit, recorded as a :class:`Trajectory`.
"""

from __future__ import annotations

import dataclasses

from .contract import Simple, require_same_context
from .elements import Element, identity_element, lcm_elements, positive_part
from .errors import GarsideError, InternalInvariantError


def preferred_prefix(x: Element) -> Simple:
    """The simple ι(x) ∧ ∂(φ(x)); trivial exactly for rigid elements."""
    s = x._pref
    if s is None:
        ctx = x.ctx
        s = ctx.gcd_simple(
            x.initial_factor(), ctx.right_complement(x.final_factor())
        )
        x._pref = s
    return s


def preferred_suffix(x: Element) -> Simple:
    """Mirror of the preferred prefix for the suffix order."""
    s = x._suff
    if s is None:
        ctx = x.ctx
        s = ctx.rgcd_simple(
            x.right_initial_factor(), ctx.left_complement(x.right_final_factor())
        )
        x._suff = s
    return s


def is_rigid(x: Element) -> bool:
    return preferred_prefix(x) == x.ctx.identity


def cyclic_sliding(x: Element) -> Element:
    """Conjugate of x by its preferred prefix."""
    s = preferred_prefix(x)
    if s == x.ctx.identity:
        return x
    return x.conjugated_by_simple(s)


def cyclic_right_sliding(x: Element) -> Element:
    """Conjugate of x by the inverse of its preferred suffix."""
    s = preferred_suffix(x)
    if s == x.ctx.identity:
        return x
    return x.conjugated_by_simple_inverse(s)


def transport(x: Element, alpha: Element) -> Element:
    """𝔭(x)⁻¹·α·𝔭(x^α): the conjugator completing the sliding square at x."""
    require_same_context(x.ctx, alpha.ctx)
    xa = x.conjugated(alpha)
    out = alpha.lmul_simple_inverse(preferred_prefix(x))
    return out.mul_simple(preferred_prefix(xa))


def right_transport(x: Element, alpha: Element) -> Element:
    """Mirror transport for cyclic right sliding (conjugators act on the left)."""
    require_same_context(x.ctx, alpha.ctx)
    xa = x.conjugated(alpha.inverse())
    out = alpha.lmul_simple(preferred_suffix(xa))
    return out.mul_simple_inverse(preferred_suffix(x))


def pullback_step(z: Element, y: Element, s: Element, checked: bool = False) -> Element:
    """The pullback of the positive s at y = 𝔰(z): (𝔭(z)·s·𝔭ʳ(y^s)⁻¹) ∨ 1.

    This is the minimal positive element whose transport at z admits s as
    a prefix, provided z lies in a sliding circuit and y^s is super
    summit.  Those preconditions cost as much to verify as the operation
    itself, so they are only validated when ``checked`` is true.
    """
    require_same_context(z.ctx, y.ctx)
    require_same_context(z.ctx, s.ctx)
    if checked:
        if cyclic_sliding(z) != y:
            raise GarsideError("pullback anchor is not the sliding of its source")
        if not s.is_positive:
            raise GarsideError("pullback needs a positive element")
    ys = y.conjugated(s)
    if checked:
        summit = slide_to_first_repetition(ys).circuit_elements[0]
        if (ys.p, ys.sup) != (summit.p, summit.sup):
            raise GarsideError("pullback target is not super summit")
    w = s.lmul_simple(preferred_prefix(z)).mul_simple_inverse(preferred_suffix(ys))
    return positive_part(w)


def minimal_sss_conjugator(
    x: Element,
    inf_target: int,
    sup_target: int,
    max_rounds: int | None = None,
) -> Element:
    """Minimal positive ρ with inf(x^ρ) >= inf_target and sup(x^ρ) <= sup_target.

    The targets must be the summit infimum and supremum of the conjugacy
    class (callers pass inf/sup of a known super summit conjugate); each
    round multiplies ρ by ``1 ∨ (x^ρ)⁻¹Δ^inf_target ∨ x^ρΔ^{-sup_target}``,
    read off the right normal forms.  When the caller certifies a round
    bound (e.g. ‖Δ‖ for an atom seed), exceeding it raises
    InternalInvariantError.
    """
    ctx = x.ctx
    rho = identity_element(ctx)
    cur = x
    rounds = 0
    while cur.p < inf_target or cur.sup > sup_target:
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            raise InternalInvariantError(
                f"summit conjugator search exceeded {max_rounds} certified rounds"
            )
        low = positive_part(cur.inverse().mul_delta_power(inf_target))
        high = positive_part(cur.mul_delta_power(-sup_target))
        u = lcm_elements(low, high)
        if u.is_identity:
            raise InternalInvariantError("summit conjugator step stalled")
        rho = rho * u
        cur = cur.conjugated(u)
    return rho


@dataclasses.dataclass(frozen=True)
class Trajectory:
    """Iterated cyclic sliding up to the first repetition.

    ``elements[0]`` is the starting element; applying one sliding to the
    last element yields ``elements[entry_index]`` again.  The elements
    from ``entry_index`` on form the sliding circuit that the orbit falls
    into; ``entry_index + period`` is the total length.
    """

    elements: tuple[Element, ...]
    entry_index: int
    period: int

    @property
    def circuit_elements(self) -> tuple[Element, ...]:
        return self.elements[self.entry_index:]


def slide_to_first_repetition(x: Element) -> Trajectory:
    """Apply cyclic sliding until an element repeats."""
    seen: dict[Element, int] = {}
    elements: list[Element] = []
    cur = x
    while cur not in seen:
        seen[cur] = len(elements)
        elements.append(cur)
        cur = cyclic_sliding(cur)
    entry = seen[cur]
    return Trajectory(tuple(elements), entry, len(elements) - entry)

