"""Zero forcing closure and power-domination monitoring with full traces.

The color change rule: a black vertex with exactly one white neighbor forces
that neighbor black.  The closure is unique, but traces need a deterministic
schedule: forces are applied in synchronous rounds (applicability judged
against the black set at round start), forcers processed in ascending id,
and when two forcers target the same white vertex the least id wins.
Under round-start semantics each vertex fires at most once overall, so the
force steps form vertex-disjoint chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from powerdom.graph import Graph, VertexSet, closed_neighborhood


@dataclass(frozen=True)
class ForceStep:
    forcer: int
    forced: int
    round: int  # 1-based


@dataclass(frozen=True)
class PropagationTrace:
    """One propagation run.

    ``dominated`` is N[seed] for power-domination runs and None for plain
    zero-forcing runs.  ``final`` is the closure of the initial black set.
    """

    seed: VertexSet
    dominated: Optional[VertexSet]
    steps: tuple[ForceStep, ...]
    final: VertexSet

    def initial_black(self) -> VertexSet:
        if self.dominated is None:
            return self.seed
        return self.seed | self.dominated

    def rounds(self) -> int:
        return self.steps[-1].round if self.steps else 0


def _run_rounds(rows: tuple[int, ...], black: int) -> tuple[list[ForceStep], int]:
    steps: list[ForceStep] = []
    rnd = 1
    while True:
        claimed = 0
        todo = black
        while todo:
            low = todo & -todo
            todo ^= low
            v = low.bit_length() - 1
            white = rows[v] & ~black
            if white and white & (white - 1) == 0:
                target = white.bit_length() - 1
                if not (claimed >> target) & 1:
                    claimed |= white
                    steps.append(ForceStep(v, target, rnd))
        if not claimed:
            return steps, black
        black |= claimed
        rnd += 1


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s.mask >> g.n:
        raise ValueError("seed contains vertices outside the graph")


def zero_forcing_closure(g: Graph, u: VertexSet) -> PropagationTrace:
    """cl(U): iterate the color change rule from U until fixpoint."""
    _check_subset(g, u)
    steps, final = _run_rounds(g.row_masks(), u.mask)
    return PropagationTrace(u, None, tuple(steps), VertexSet.from_mask(final))


def is_zero_forcing_set(g: Graph, u: VertexSet) -> bool:
    return zero_forcing_closure(g, u).final == g.vertices()


def monitored_trace(g: Graph, s: VertexSet) -> PropagationTrace:
    """Domination step S_1 = N[S], then the zero-forcing propagation."""
    _check_subset(g, s)
    dominated = closed_neighborhood(g, s)
    steps, final = _run_rounds(g.row_masks(), dominated.mask)
    return PropagationTrace(s, dominated, tuple(steps), VertexSet.from_mask(final))


def is_power_dominating_set(g: Graph, s: VertexSet) -> bool:
    return monitored_trace(g, s).final == g.vertices()


def forcing_chains(trace: PropagationTrace) -> tuple[tuple[int, ...], ...]:
    """Maximal force chains; singleton chains for non-forcing initial vertices.

    The chains are vertex-disjoint and cover ``trace.final`` exactly.
    """
    succ = {s.forcer: s.forced for s in trace.steps}
    forced = {s.forced for s in trace.steps}
    chains = []
    for head in trace.final:
        if head in forced:
            continue
        chain = [head]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    return tuple(chains)


def monitored_sets(trace: PropagationTrace) -> tuple[VertexSet, ...]:
    """The monitored-set sequence S_0 ⊆ S_1 ⊆ ... reconstructed from rounds.

    For PD traces S_1 is the domination step; for ZF traces S_0 is the seed
    and each later entry adds one propagation round.
    """
    sets = [trace.seed]
    current = trace.seed.mask
    if trace.dominated is not None:
        current |= trace.dominated.mask
        sets.append(VertexSet.from_mask(current))
    rnd = 0
    for step in trace.steps:
        if step.round != rnd:
            if rnd:
                sets.append(VertexSet.from_mask(current))
            rnd = step.round
        current |= 1 << step.forced
    if rnd:
        sets.append(VertexSet.from_mask(current))
    return tuple(sets)
