"""Synchronous round engine for the anonymous port-numbering model.

Time steps are 1-based; step 1 is odd. A message sent at step t through
port j of node v is delivered at step t+1 on the reciprocal port of the
neighbour. The engine runs for exactly max(1, 2*max_degree + 1) steps and
records every send in a transcript.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algorithm import Msg, NodeState, even_step, odd_step
from .errors import AnalysisFault, ProtocolFault
from .graph import PortGraph


@dataclass(frozen=True)
class TranscriptEntry:
    time_step: int
    sender: int
    sender_port: int
    kind: Msg


@dataclass(frozen=True)
class Transcript:
    """Complete record of a run: every send, plus the final node states."""

    entries: tuple[TranscriptEntry, ...]
    final_states: tuple[NodeState, ...]
    last_active_step: int


@dataclass(frozen=True)
class CoverResult:
    cover: frozenset[int]
    pair_edges: frozenset[tuple[int, int]]
    rounds_run: int
    last_active_step: int

    @property
    def cover_size(self) -> int:
        return len(self.cover)


def horizon_for(g: PortGraph) -> int:
    return max(1, 2 * g.max_degree + 1)


def run(
    g: PortGraph,
    strict: bool = True,
    extra_steps: int = 0,
    record_history: bool = False,
) -> tuple[CoverResult, Transcript]:
    """Execute the protocol on g for the full horizon (plus `extra_steps`).

    Deterministic: identical inputs yield identical outputs.
    """
    result, transcript, _ = _run(g, strict, extra_steps, record_history)
    return result, transcript


def run_with_history(
    g: PortGraph, strict: bool = True, extra_steps: int = 0
) -> tuple[CoverResult, Transcript, list[tuple[NodeState, ...]]]:
    """Like `run` but also returns the state snapshot after every step."""
    return _run(g, strict, extra_steps, record_history=True)


def _run(
    g: PortGraph, strict: bool, extra_steps: int, record_history: bool
) -> tuple[CoverResult, Transcript, list[tuple[NodeState, ...]]]:
    n = g.node_count
    states = [NodeState(degree=g.degree(v)) for v in range(n)]
    steps = horizon_for(g) + extra_steps
    entries: list[TranscriptEntry] = []
    inboxes: dict[int, list[tuple[int, Msg]]] = {}
    last_active = 0
    history: list[tuple[NodeState, ...]] = []

    for t in range(1, steps + 1):
        sends: list[tuple[int, int, Msg]] = []
        if t % 2 == 1:
            for v in range(n):
                delivered = inboxes.get(v)
                single: tuple[int, Msg] | None = None
                if delivered:
                    if len(delivered) > 1:
                        raise ProtocolFault(
                            f"step {t}, node {v}: {len(delivered)} odd-step deliveries"
                        )
                    single = delivered[0]
                elif states[v].a is not None or states[v].i > states[v].degree:
                    continue  # permanently quiescent, nothing to read or send
                try:
                    states[v], out = odd_step(states[v], single, strict)
                except ProtocolFault as exc:
                    raise ProtocolFault(f"step {t}, node {v}: {exc}") from exc
                if out is not None:
                    sends.append((v, out[0], out[1]))
        else:
            for v in sorted(inboxes):
                try:
                    states[v], outs = even_step(states[v], inboxes[v], strict)
                except ProtocolFault as exc:
                    raise ProtocolFault(f"step {t}, node {v}: {exc}") from exc
                sends.extend((v, port, msg) for port, msg in outs)

        inboxes = {}
        for v, port, msg in sends:
            entries.append(TranscriptEntry(t, v, port, msg))
            u, k = g.ports[v][port - 1]
            inboxes.setdefault(u, []).append((k, msg))
        if sends:
            last_active = t
        if record_history:
            history.append(tuple(states))

    cover = frozenset(v for v in range(n) if states[v].c)
    pair_edges = pair_edges_from_states(g, states)
    result = CoverResult(cover, pair_edges, steps, last_active)
    transcript = Transcript(tuple(entries), tuple(states), last_active)
    return result, transcript, history


def pair_edges_from_states(
    g: PortGraph, states: list[NodeState] | tuple[NodeState, ...]
) -> frozenset[tuple[int, int]]:
    """Edges {u, v} where v's accepted proposal points to u and back.

    The back-pointer (b of the partner leading to the proposer) is checked,
    never assumed; a mismatch falsifies the protocol's pairing guarantee.
    """
    pairs: set[tuple[int, int]] = set()
    for v, st in enumerate(states):
        if st.a is None:
            continue
        u, _ = g.ports[v][st.a - 1]
        su = states[u]
        if su.b is None or g.ports[u][su.b - 1][0] != v:
            raise AnalysisFault(
                f"pair symmetry violated: node {v} accepted via port {st.a} to "
                f"node {u}, whose b={su.b} does not lead back"
            )
        pairs.add((v, u) if v < u else (u, v))
    return frozenset(pairs)


# ---------------------------------------------------------------------------
# Transcript text format and replay
# ---------------------------------------------------------------------------

def format_transcript(t: Transcript) -> str:
    """One `t v port kind` line per entry, sorted by (t, v, port)."""
    lines = [
        f"{e.time_step} {e.sender} {e.sender_port} {e.kind.value}"
        for e in sorted(t.entries, key=lambda e: (e.time_step, e.sender, e.sender_port))
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_transcript(text: str) -> tuple[TranscriptEntry, ...]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 4:
            raise ProtocolFault(f"transcript line {lineno}: expected `t v port kind`")
        try:
            step, v, port = int(tokens[0]), int(tokens[1]), int(tokens[2])
            kind = Msg(tokens[3])
        except ValueError:
            raise ProtocolFault(f"transcript line {lineno}: malformed entry") from None
        entries.append(TranscriptEntry(step, v, port, kind))
    return tuple(entries)


def _sorted_entries(entries) -> list[tuple[int, int, int, str]]:
    return sorted(
        (e.time_step, e.sender, e.sender_port, e.kind.value) for e in entries
    )


def replay(g: PortGraph, t: Transcript | tuple[TranscriptEntry, ...]) -> list[str]:
    """Re-derive a transcript from scratch and report every divergence."""
    _, fresh = run(g)
    claimed = Counter(_sorted_entries(t.entries if isinstance(t, Transcript) else t))
    derived = Counter(_sorted_entries(fresh.entries))
    violations = []
    for entry in sorted((claimed - derived).elements()):
        violations.append(f"claimed entry not derivable: {entry}")
    for entry in sorted((derived - claimed).elements()):
        violations.append(f"missing entry: {entry}")
    if isinstance(t, Transcript):
        if t.last_active_step != fresh.last_active_step:
            violations.append(
                f"last_active_step mismatch: claimed {t.last_active_step}, "
                f"derived {fresh.last_active_step}"
            )
        if t.final_states != fresh.final_states:
            violations.append("final states diverge")
    return violations
