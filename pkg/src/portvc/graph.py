"""Port-numbered graphs: construction, validation, generators, serialization.

A `PortGraph` is a simple undirected graph in which every node privately
orders its incident edges by port numbers 1..d(v). It is the single source
of truth for topology; everything downstream (simulator, analysis, double
cover) consumes it read-only.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphError, ParseError

NUMBERING_POLICIES = ("sorted", "input", "random")

# Threshold below which the random generator does a literal shuffled pass
# over all node pairs; above it, pairs are sampled directly.
_DENSE_PAIR_LIMIT = 200_000


@dataclass(frozen=True)
class EdgeList:
    """Plain undirected edge list, the input representation before ports."""

    node_count: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, node_count: int, pairs: Iterable[tuple[int, int]]) -> "EdgeList":
        if node_count < 0:
            raise GraphError(f"node_count must be non-negative, got {node_count}")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in pairs:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"node id out of range in edge {{{u}, {v}}}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {{{e[0]}, {e[1]}}}")
            seen.add(e)
            norm.append(e)
        return cls(node_count, tuple(norm))


@dataclass(frozen=True)
class PortGraph:
    """Simple graph with 1-based port numbering at every node.

    `ports[v][j-1] == (u, k)` means port j of node v connects to port k of
    node u. Immutable after construction; safe to share across threads.
    """

    node_count: int
    ports: tuple[tuple[tuple[int, int], ...], ...]

    def degree(self, v: int) -> int:
        return len(self.ports[v])

    @property
    def max_degree(self) -> int:
        return max((len(p) for p in self.ports), default=0)

    @property
    def num_edges(self) -> int:
        return sum(len(p) for p in self.ports) // 2

    def neighbour(self, v: int, port: int) -> tuple[int, int]:
        """Return (u, k): the node and reciprocal port behind `port` of v."""
        return self.ports[v][port - 1]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (v, u) if v < u else (u, v)
            for v, entries in enumerate(self.ports)
            for u, _ in entries
        )


def _from_neighbour_orders(node_count: int, orders: Sequence[Sequence[int]]) -> PortGraph:
    """Build a PortGraph from per-node neighbour orderings.

    Reciprocal port numbers are derived from the position of each node in
    its neighbour's ordering; the orderings must be symmetric and free of
    duplicates.
    """
    port_of: dict[tuple[int, int], int] = {}
    for v, nbrs in enumerate(orders):
        for j, u in enumerate(nbrs, start=1):
            port_of[(v, u)] = j
    ports = tuple(
        tuple((u, port_of[(u, v)]) for u in nbrs) for v, nbrs in enumerate(orders)
    )
    return PortGraph(node_count, ports)


def from_edge_list(el: EdgeList, policy: str = "sorted", seed: int | None = None) -> PortGraph:
    """Assign port numbers to an edge list under the given numbering policy.

    Policies: "sorted" (ascending neighbour id), "input" (order of first
    appearance in the edge list), "random" (seeded per-node shuffle; seed
    required). Deterministic for fixed (edges, policy, seed).
    """
    if policy not in NUMBERING_POLICIES:
        raise GraphError(f"unknown numbering policy {policy!r}")
    if policy == "random" and seed is None:
        raise GraphError("random numbering policy requires a seed")
    orders: list[list[int]] = [[] for _ in range(el.node_count)]
    for u, v in el.edges:
        orders[u].append(v)
        orders[v].append(u)
    if policy == "sorted":
        for nbrs in orders:
            nbrs.sort()
    elif policy == "random":
        rng = random.Random(seed)
        for nbrs in orders:
            nbrs.sort()
            rng.shuffle(nbrs)
    return _from_neighbour_orders(el.node_count, orders)


def validate(g: PortGraph) -> list[str]:
    """Return all invariant violations, empty iff the graph is well formed."""
    violations: list[str] = []
    n = g.node_count
    if len(g.ports) != n:
        violations.append(f"ports table has {len(g.ports)} rows, expected {n}")
        return violations
    for v in range(n):
        seen_nbrs: set[int] = set()
        for j, (u, k) in enumerate(g.ports[v], start=1):
            if not 0 <= u < n:
                violations.append(f"node {v} port {j}: neighbour {u} out of range")
                continue
            if u == v:
                violations.append(f"node {v} port {j}: self-loop")
                continue
            if u in seen_nbrs:
                violations.append(f"node {v}: parallel edge to {u}")
            seen_nbrs.add(u)
            if not 1 <= k <= len(g.ports[u]):
                violations.append(
                    f"node {v} port {j}: reciprocal port {k} out of range "
                    f"1..{len(g.ports[u])} at node {u}"
                )
                continue
            if g.ports[u][k - 1] != (v, j):
                violations.append(
                    f"reciprocity violation at node {v} port {j}: "
                    f"claims ({u}, {k}) but node {u} port {k} is {g.ports[u][k - 1]}"
                )
    return violations


def permute_ports(g: PortGraph, seed: int) -> PortGraph:
    """Independently shuffle every node's port order with a seeded RNG."""
    rng = random.Random(seed)
    orders = []
    for v in range(g.node_count):
        nbrs = [u for u, _ in g.ports[v]]
        rng.shuffle(nbrs)
        orders.append(nbrs)
    return _from_neighbour_orders(g.node_count, orders)


def relabel(g: PortGraph, perm: Sequence[int]) -> PortGraph:
    """Rename node ids by `perm` (old id -> new id), preserving port structure."""
    if sorted(perm) != list(range(g.node_count)):
        raise GraphError("perm must be a permutation of 0..n-1")
    new_ports: list[tuple[tuple[int, int], ...] | None] = [None] * g.node_count
    for v in range(g.node_count):
        new_ports[perm[v]] = tuple((perm[u], k) for u, k in g.ports[v])
    return PortGraph(g.node_count, tuple(new_ports))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def cycle_edges(n: int) -> EdgeList:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return EdgeList.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path_edges(n: int) -> EdgeList:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return EdgeList.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def clique_edges(n: int) -> EdgeList:
    if n < 1:
        raise GraphError(f"clique needs n >= 1, got {n}")
    return EdgeList.from_pairs(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_edges(leaves: int) -> EdgeList:
    if leaves < 1:
        raise GraphError(f"star needs >= 1 leaf, got {leaves}")
    return EdgeList.from_pairs(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_bounded_edges(n: int, max_degree: int, p: float, seed: int) -> EdgeList:
    """Seeded random graph with max degree <= max_degree.

    Candidate pairs are tried in a seeded random order, each kept with
    probability p unless it would push an endpoint over the degree bound.
    For large n the candidate set is sampled directly instead of shuffling
    all C(n,2) pairs; either way the output is deterministic for fixed
    (n, max_degree, p, seed).
    """
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    if max_degree < 0:
        raise GraphError(f"max_degree must be non-negative, got {max_degree}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    if seed is None:
        raise GraphError("random generator requires a seed")
    rng = random.Random(seed)
    total = n * (n - 1) // 2
    deg = [0] * n
    picked: list[tuple[int, int]] = []
    if total <= _DENSE_PAIR_LIMIT:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        for u, v in pairs:
            if rng.random() < p and deg[u] < max_degree and deg[v] < max_degree:
                picked.append((u, v))
                deg[u] += 1
                deg[v] += 1
    else:
        target = min(int(round(p * total)), total)
        seen: set[tuple[int, int]] = set()
        while len(seen) < target:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            if deg[e[0]] < max_degree and deg[e[1]] < max_degree:
                picked.append(e)
                deg[e[0]] += 1
                deg[e[1]] += 1
    return EdgeList.from_pairs(n, picked)


def generate(kind: str, *params, seed: int | None = None) -> EdgeList:
    """Dispatch to a named generator; used by the CLI."""
    if kind == "cycle":
        return cycle_edges(*map(int, params))
    if kind == "path":
        return path_edges(*map(int, params))
    if kind == "clique":
        return clique_edges(*map(int, params))
    if kind == "star":
        return star_edges(*map(int, params))
    if kind == "random":
        if len(params) != 3:
            raise GraphError("random generator takes params: n max_degree p")
        n, d, p = int(params[0]), int(params[1]), float(params[2])
        if seed is None:
            raise GraphError("random generator requires --seed")
        return random_bounded_edges(n, d, p, seed)
    raise GraphError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def serialize(g: PortGraph) -> str:
    """Port-graph text format: header `n m`, then `v d(v) u_1 .. u_d` per node."""
    lines = [f"{g.node_count} {g.num_edges}"]
    for v in range(g.node_count):
        entries = g.ports[v]
        lines.append(" ".join([str(v), str(len(entries))] + [str(u) for u, _ in entries]))
    return "\n".join(lines) + "\n"


def _int_tokens(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {tokens!r}", line) from None


def parse(text: str) -> PortGraph:
    """Inverse of `serialize`; `#` starts a comment line."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise ParseError("empty input, expected `n m` header")
    header_line, header = rows[0]
    nums = _int_tokens(header, header_line)
    if len(nums) != 2:
        raise ParseError("header must be `n m`", header_line)
    n, m = nums
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", header_line)
    body = rows[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} node lines, found {len(body)}",
                         body[-1][0] if body else header_line)
    orders: list[list[int] | None] = [None] * n
    node_line = [0] * n
    for lineno, tokens in body:
        nums = _int_tokens(tokens, lineno)
        if len(nums) < 2:
            raise ParseError("node line must be `v d(v) neighbours...`", lineno)
        v, d, nbrs = nums[0], nums[1], nums[2:]
        if not 0 <= v < n:
            raise ParseError(f"node id {v} out of range", lineno)
        if orders[v] is not None:
            raise ParseError(f"duplicate line for node {v}", lineno)
        if len(nbrs) != d:
            raise ParseError(f"node {v} declares degree {d} but lists {len(nbrs)} neighbours", lineno)
        if len(set(nbrs)) != len(nbrs):
            raise ParseError(f"node {v} lists a neighbour twice", lineno)
        for u in nbrs:
            if not 0 <= u < n:
                raise ParseError(f"neighbour {u} of node {v} out of range", lineno)
            if u == v:
                raise ParseError(f"self-loop at node {v}", lineno)
        orders[v] = nbrs
        node_line[v] = lineno
    for v in range(n):
        for u in orders[v]:  # type: ignore[union-attr]
            if v not in orders[u]:  # type: ignore[operator]
                raise ParseError(f"edge {v}->{u} not reciprocated by node {u}", node_line[v])
    g = _from_neighbour_orders(n, orders)  # type: ignore[arg-type]
    if g.num_edges != m:
        raise ParseError(f"header claims {m} edges, node lines give {g.num_edges}", header_line)
    return g


def serialize_edge_list(el: EdgeList) -> str:
    lines = [str(el.node_count)]
    lines.extend(f"{u} {v}" for u, v in el.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> EdgeList:
    """Edge-list text format: header `n`, then one `u v` pair per line."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise ParseError("empty input, expected node count header")
    header_line, header = rows[0]
    nums = _int_tokens(header, header_line)
    if len(nums) != 1:
        raise ParseError("header must be a single node count", header_line)
    n = nums[0]
    pairs = []
    for lineno, tokens in rows[1:]:
        nums = _int_tokens(tokens, lineno)
        if len(nums) != 2:
            raise ParseError("edge line must be `u v`", lineno)
        pairs.append((nums[0], nums[1]))
    try:
        return EdgeList.from_pairs(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
