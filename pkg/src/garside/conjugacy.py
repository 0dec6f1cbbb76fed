"""Conjugacy decision and search via sliding circuits.

The solver follows the staged plan: reach a sliding circuit by iterated
cyclic sliding while keeping a short conjugator; at each known circuit
element, find the outgoing indecomposable conjugators by combining a
minimal summit conjugator with iterated pullbacks and transports along
the circuit; explore the resulting finite connected graph breadth first
until the target is met or the component is exhausted.  A brute-force
solver that conjugates by every simple element is kept as a desk-scale
reference oracle.
"""

from __future__ import annotations

import dataclasses
from collections import deque

from .contract import GarsideContext, Simple, require_same_context
from .elements import Element, atom_element, identity_element
from .errors import GarsideError, InternalInvariantError, OracleSizeError
from .sliding import (
    Trajectory,
    minimal_sss_conjugator,
    preferred_prefix,
    pullback_step,
    slide_to_first_repetition,
    transport,
)


@dataclasses.dataclass
class RunStats:
    """Observed instrumentation counters for one solver run.

    ``trajectory_entry`` is the largest pre-periodic trajectory length
    seen, ``circuit_period`` the largest sliding-circuit length,
    ``transport_reps``/``pullback_reps`` collect the distances at which
    iterated transports/pullbacks first repeated, ``sc_size`` counts the
    vertices explored, and ``contract_calls`` snapshots the context's
    basic-operation counter.  No a-priori bounds are claimed for any of
    these; they are observations.
    """

    trajectory_entry: int = 0
    circuit_period: int = 0
    transport_reps: list[int] = dataclasses.field(default_factory=list)
    pullback_reps: list[int] = dataclasses.field(default_factory=list)
    sc_size: int = 0
    contract_calls: int = 0

    @property
    def r_max(self) -> int:
        return max(self.transport_reps, default=0)

    @property
    def pullback_max(self) -> int:
        return max(self.pullback_reps, default=0)

    def observe_trajectory(self, traj: Trajectory) -> None:
        self.trajectory_entry = max(self.trajectory_entry, traj.entry_index)
        self.circuit_period = max(self.circuit_period, traj.period)

    def repetition_guard(self, delta_norm: int) -> int:
        """Iteration cap for repetition searches: generous multiple of what
        has been observed, with a floor at the proven rigid-case distance."""
        return 4 * max(self.r_max, self.pullback_max, delta_norm) + 16

    def as_dict(self) -> dict:
        return {
            "T": self.trajectory_entry,
            "N": self.circuit_period,
            "R_max": self.r_max,
            "sc_size": self.sc_size,
            "contract_calls": self.contract_calls,
        }


@dataclasses.dataclass(frozen=True)
class Circuit:
    """One sliding circuit: the orbit of a periodic point of cyclic sliding."""

    elements: tuple[Element, ...]

    @property
    def base(self) -> Element:
        return self.elements[0]

    @property
    def period(self) -> int:
        return len(self.elements)


def circuit_of(v: Element) -> Circuit:
    """The sliding circuit through v; v must be a periodic point."""
    traj = slide_to_first_repetition(v)
    if traj.entry_index != 0:
        raise GarsideError("element does not lie on a sliding circuit")
    return Circuit(traj.elements)


def slide_to_circuit(x: Element, stats: RunStats | None = None) -> tuple[Element, Element]:
    """Iterated cyclic sliding to a periodic point, with a short conjugator.

    Returns ``(x̃, c)`` with ``x^c = x̃``; c is the product of the preferred
    prefixes along the pre-periodic part only, i.e. the full trajectory
    conjugator with the once-around-the-circuit suffix cancelled off.
    """
    traj = slide_to_first_repetition(x)
    if stats is not None:
        stats.observe_trajectory(traj)
    c = identity_element(x.ctx)
    for m in range(traj.entry_index):
        c = c.mul_simple(preferred_prefix(traj.elements[m]))
    return traj.elements[traj.entry_index], c


@dataclasses.dataclass(frozen=True)
class TransportCycle:
    """Iterated whole-circuit transports of u until the first repetition.

    ``values[i]`` is the i-fold circuit transport of u; ``values[i1] ==
    values[i2]`` is the first repetition.  ``fixed`` collects the periodic
    part, the transports that are themselves fixed by some transport
    power, i.e. the conjugators landing back in a sliding circuit.
    """

    values: tuple[Element, ...]
    i1: int
    i2: int

    @property
    def fixed(self) -> frozenset[Element]:
        return frozenset(self.values[self.i1:self.i2])

    @property
    def period(self) -> int:
        return self.i2 - self.i1


def _transport_once_around(circuit: Circuit, u: Element) -> Element:
    for v in circuit.elements:
        u = transport(v, u)
        if not u.is_positive:
            raise InternalInvariantError(
                "transport of a positive conjugator between super summit "
                "conjugates came out non-positive"
            )
    return u


def transport_cycle(
    circuit: Circuit,
    u: Element,
    stats: RunStats | None = None,
    max_rounds: int | None = None,
) -> TransportCycle:
    """Transport u around the circuit until a value repeats."""
    if max_rounds is None:
        base = stats.repetition_guard(circuit.base.ctx.delta_norm) if stats \
            else 4 * circuit.base.ctx.delta_norm + 16
        max_rounds = base
    seen: dict[Element, int] = {}
    values: list[Element] = []
    cur = u
    while cur not in seen:
        seen[cur] = len(values)
        values.append(cur)
        if len(values) > max_rounds:
            raise InternalInvariantError(
                f"no transport repetition within {max_rounds} rounds"
            )
        cur = _transport_once_around(circuit, cur)
    i1 = seen[cur]
    i2 = len(values)
    if stats is not None:
        stats.transport_reps.append(i2)
    return TransportCycle(tuple(values), i1, i2)


def _pullback_once_around(circuit: Circuit, s: Element) -> Element:
    n = circuit.period
    elems = circuit.elements
    for m in range(n):
        anchor = elems[(n - m) % n]
        source = elems[(n - m - 1) % n]
        s = pullback_step(source, anchor, s)
    return s


def iterated_pullback_to_repetition(
    circuit: Circuit,
    s: Element,
    stats: RunStats | None = None,
    max_rounds: int | None = None,
) -> Element:
    """Whole-circuit pullbacks of s until a value repeats; that value is returned."""
    values, i1, _ = _pullback_orbit(circuit, s, stats, max_rounds)
    return values[i1]


def _pullback_orbit(
    circuit: Circuit,
    s: Element,
    stats: RunStats | None = None,
    max_rounds: int | None = None,
) -> tuple[tuple[Element, ...], int, int]:
    if max_rounds is None:
        base = stats.repetition_guard(circuit.base.ctx.delta_norm) if stats \
            else 4 * circuit.base.ctx.delta_norm + 16
        max_rounds = 2 * base
    seen: dict[Element, int] = {}
    values: list[Element] = []
    cur = s
    while cur not in seen:
        seen[cur] = len(values)
        values.append(cur)
        if len(values) > max_rounds:
            raise InternalInvariantError(
                f"no pullback repetition within {max_rounds} rounds"
            )
        cur = _pullback_once_around(circuit, cur)
    i1 = seen[cur]
    i2 = len(values)
    if stats is not None:
        stats.pullback_reps.append(i2)
    return tuple(values), i1, i2


def _atom_divides(ctx: GarsideContext, a, x: Element) -> bool:
    """Does the atom a left-divide the positive element x?"""
    if x.p >= 1:
        return True
    if not x.factors:
        return False
    return ctx.divide_atom_left(a, x.factors[0]) is not None


def arrows_at(
    circuit: Circuit, stats: RunStats | None = None
) -> tuple[Simple, ...]:
    """Labels of the outgoing indecomposable conjugators at the circuit base.

    For each atom in index order: grow the atom into the minimal
    conjugator reaching a super summit conjugate; if the atom divides the
    preferred prefix, replace it by its repeated-pullback value; transport
    around the circuit until repetition; and accept the periodic value
    divisible by the atom unless a previously accepted or later atom also
    divides it (in which case it is decomposable or found again later).
    """
    v = circuit.base
    ctx = v.ctx
    inf_v, sup_v, len_v = v.p, v.sup, v.canonical_length
    prefix_v = preferred_prefix(v)
    arrows: list[Simple] = []
    accepted: list = []  # atoms whose conjugator was accepted
    for t, atom in enumerate(ctx.atoms, start=1):
        va = v.conjugated_by_simple(ctx.atom_simple(atom))
        if va.canonical_length > len_v:
            rho = minimal_sss_conjugator(
                va, inf_v, sup_v, max_rounds=ctx.delta_norm + 1
            )
            s = atom_element(ctx, atom) * rho
        else:
            s = atom_element(ctx, atom)
        if not (s.p == 0 and s.canonical_length <= 1) and not (
            s.p == 1 and s.canonical_length == 0
        ):
            raise InternalInvariantError("summit conjugator of an atom not simple")
        if ctx.divide_atom_left(atom, prefix_v) is not None:
            s = iterated_pullback_to_repetition(circuit, s, stats)
        cycle = transport_cycle(circuit, s, stats)
        for m in range(cycle.i1, cycle.i2):
            candidate = cycle.values[m]
            if not _atom_divides(ctx, atom, candidate):
                continue
            blockers = accepted + list(ctx.atoms[t:])
            if not any(_atom_divides(ctx, b, candidate) for b in blockers):
                arrows.append(candidate.as_simple())
                accepted.append(atom)
            break
    return tuple(arrows)


@dataclasses.dataclass(frozen=True)
class SCGraph:
    """The graph of sliding-circuit conjugates with its spanning tree.

    Vertices are the elements reachable from the root by indecomposable
    conjugators (the whole invariant set); arrows carry simple labels
    with ``vertices[src]^label == vertices[dst]``.  ``parents[i]`` holds
    the spanning-tree edge ``(parent index, label)`` that first reached
    vertex i (None at the root), so conjugators from the root are
    reconstructed on demand instead of being stored.
    """

    vertices: tuple[Element, ...]
    arrows: tuple[tuple[int, int, Simple], ...]
    parents: tuple[tuple[int, Simple] | None, ...]
    stats: RunStats

    @property
    def root(self) -> Element:
        return self.vertices[0]

    def index_of(self, v: Element) -> int | None:
        for i, w in enumerate(self.vertices):
            if w == v:
                return i
        return None

    def conjugator_from_root(self, vertex_id: int) -> Element:
        """Product of spanning-tree labels from the root to the vertex."""
        labels: list[Simple] = []
        i = vertex_id
        while self.parents[i] is not None:
            i, label = self.parents[i]
            labels.append(label)
        c = identity_element(self.root.ctx)
        for label in reversed(labels):
            c = c.mul_simple(label)
        return c


@dataclasses.dataclass(frozen=True)
class ConjugacyResult:
    conjugate: bool
    witness: Element | None
    stats: RunStats


def enumerate_sc(x: Element, stats: RunStats | None = None) -> SCGraph:
    """The full graph of sliding-circuit conjugates of x."""
    if stats is None:
        stats = RunStats()
    start_calls = x.ctx.ops.calls
    root, _ = slide_to_circuit(x, stats)
    index: dict[Element, int] = {root: 0}
    vertices: list[Element] = [root]
    parents: list[tuple[int, Simple] | None] = [None]
    arrows: list[tuple[int, int, Simple]] = []
    frontier: deque[int] = deque([0])
    while frontier:
        vid = frontier.popleft()
        v = vertices[vid]
        circuit = circuit_of(v)
        stats.circuit_period = max(stats.circuit_period, circuit.period)
        for label in arrows_at(circuit, stats):
            w = v.conjugated_by_simple(label)
            wid = index.get(w)
            if wid is None:
                wid = len(vertices)
                index[w] = wid
                vertices.append(w)
                parents.append((vid, label))
                frontier.append(wid)
            arrows.append((vid, wid, label))
    stats.sc_size = len(vertices)
    stats.contract_calls += x.ctx.ops.calls - start_calls
    return SCGraph(tuple(vertices), tuple(arrows), tuple(parents), stats)


def solve_conjugacy(x: Element, y: Element) -> ConjugacyResult:
    """Decide conjugacy of x and y; on success return a verified conjugator.

    Explores the sliding-circuit conjugates of x breadth first.  Each
    newly found conjugate is compared against the slid form of y before
    the novelty test, so a positive answer stops the search early; a
    negative answer means the whole invariant set was enumerated.
    """
    require_same_context(x.ctx, y.ctx)
    stats = RunStats()
    start_calls = x.ctx.ops.calls
    x_tilde, c1 = slide_to_circuit(x, stats)
    y_tilde, c2 = slide_to_circuit(y, stats)

    index: dict[Element, int] = {x_tilde: 0}
    vertices: list[Element] = [x_tilde]
    parents: list[tuple[int, Simple] | None] = [None]
    frontier: deque[int] = deque([0])

    def found(c_target: Element) -> ConjugacyResult:
        witness = c1 * c_target * c2.inverse()
        stats.sc_size = len(vertices)
        stats.contract_calls += x.ctx.ops.calls - start_calls
        return ConjugacyResult(True, witness, stats)

    def conjugator_to(vid: int) -> Element:
        labels: list[Simple] = []
        i = vid
        while parents[i] is not None:
            i, label = parents[i]
            labels.append(label)
        c = identity_element(x.ctx)
        for label in reversed(labels):
            c = c.mul_simple(label)
        return c

    if x_tilde == y_tilde:
        return found(identity_element(x.ctx))
    while frontier:
        vid = frontier.popleft()
        v = vertices[vid]
        circuit = circuit_of(v)
        stats.circuit_period = max(stats.circuit_period, circuit.period)
        for label in arrows_at(circuit, stats):
            w = v.conjugated_by_simple(label)
            if w == y_tilde:
                return found(conjugator_to(vid).mul_simple(label))
            if w not in index:
                index[w] = len(vertices)
                vertices.append(w)
                parents.append((vid, label))
                frontier.append(index[w])
    stats.sc_size = len(vertices)
    stats.contract_calls += x.ctx.ops.calls - start_calls
    return ConjugacyResult(False, None, stats)


# -- brute-force reference solver ------------------------------------------

NAIVE_SIMPLE_LIMIT = 720


def _all_simples(ctx: GarsideContext, limit: int) -> list[Simple]:
    """Closure of {1} under right atom products, capped at ``limit``."""
    seen = {ctx.identity}
    order = [ctx.identity]
    frontier = [ctx.identity]
    while frontier:
        nxt = []
        for s in frontier:
            for a in ctx.atoms:
                t = ctx.mult_atom_right(s, a)
                if t is not None and t not in seen:
                    seen.add(t)
                    order.append(t)
                    nxt.append(t)
                    if len(order) > limit:
                        raise OracleSizeError(
                            f"more than {limit} simple elements; "
                            "refusing brute-force enumeration"
                        )
        frontier = nxt
    return order


def naive_solve(
    x: Element, y: Element, max_simples: int = NAIVE_SIMPLE_LIMIT
) -> ConjugacyResult:
    """Reference solver: grow the invariant set by conjugating every vertex
    by every simple element, keeping the conjugates that iterated sliding
    brings back to themselves.  Desk scale only."""
    require_same_context(x.ctx, y.ctx)
    ctx = x.ctx
    simples = _all_simples(ctx, max_simples)
    stats = RunStats()
    start_calls = ctx.ops.calls
    x_tilde, c1 = slide_to_circuit(x, stats)
    y_tilde, c2 = slide_to_circuit(y, stats)
    conjugator: dict[Element, Element] = {x_tilde: identity_element(ctx)}
    frontier: deque[Element] = deque([x_tilde])
    while frontier:
        v = frontier.popleft()
        cv = conjugator[v]
        for s in simples:
            w = v.conjugated_by_simple(s)
            if w == y_tilde:
                witness = c1 * cv.mul_simple(s) * c2.inverse()
                stats.sc_size = len(conjugator)
                stats.contract_calls += ctx.ops.calls - start_calls
                return ConjugacyResult(True, witness, stats)
            if w not in conjugator:
                traj = slide_to_first_repetition(w)
                if traj.entry_index == 0:
                    conjugator[w] = cv.mul_simple(s)
                    frontier.append(w)
    stats.sc_size = len(conjugator)
    stats.contract_calls += ctx.ops.calls - start_calls
    return ConjugacyResult(False, None, stats)


def naive_sc(x: Element, max_simples: int = NAIVE_SIMPLE_LIMIT) -> set[Element]:
    """The invariant vertex set, enumerated brute force (desk scale only)."""
    ctx = x.ctx
    simples = _all_simples(ctx, max_simples)
    x_tilde, _ = slide_to_circuit(x)
    seen = {x_tilde}
    frontier: deque[Element] = deque([x_tilde])
    while frontier:
        v = frontier.popleft()
        for s in simples:
            w = v.conjugated_by_simple(s)
            if w not in seen:
                traj = slide_to_first_repetition(w)
                if traj.entry_index == 0:
                    seen.add(w)
                    frontier.append(w)
    return seen
