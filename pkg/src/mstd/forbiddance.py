"""Graphs encoding forbidden sums and differences over a group.

Given a set D of forbidden differences (closed under negation) and a set S
of forbidden sums, the graph has the group elements as vertices, an edge
{x, y} whenever x - y lands in D or x + y lands in S, and a loop at x
whenever 2x lands in S (or 0 is forbidden as a difference). Subsets of the
group avoiding all forbidden values correspond exactly to independent sets
of this graph, so exact avoidance counts reduce to independent-set counts.

Looped vertices can never join an independent set; they are deleted before
any component is classified or counted. Components are matched against the
shapes that actually occur for small forbidden families (cycles, paths,
ladders P_m x P_2, prisms C_l x P_2) with an explicit isomorphism witness;
anything else is labeled generic and left to the exact counter.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from .groups import GroupSpec


@dataclass(frozen=True)
class ForbiddanceSpec:
    """Forbidden differences (stored closed under negation) and sums."""

    diffs: frozenset[int]
    sums: frozenset[int]

    @classmethod
    def of(
        cls, group: GroupSpec, diffs: Iterable[int] = (), sums: Iterable[int] = ()
    ) -> "ForbiddanceSpec":
        closed = set()
        for d in diffs:
            group._check(d)
            closed.add(d)
            closed.add(group.neg(d))
        sums = frozenset(sums)
        for s in sums:
            group._check(s)
        return cls(frozenset(closed), sums)


@dataclass(frozen=True)
class ForbiddanceGraph:
    """Simple graph on the group elements, plus an explicit loop set."""

    group: GroupSpec
    spec: ForbiddanceSpec
    neighbors: tuple[frozenset[int], ...]
    loops: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.neighbors)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def edge_list_text(self) -> str:
        """One edge per line ("u v"), loops rendered as "v v"."""
        lines = [f"{u} {v}" for u, v in self.edges()]
        lines.extend(f"{v} {v}" for v in sorted(self.loops))
        return "\n".join(lines) + ("\n" if lines else "")


def build_graph(
    group: GroupSpec,
    diffs: Iterable[int] = (),
    sums: Iterable[int] = (),
) -> ForbiddanceGraph:
    """Construct the forbiddance graph of the given forbidden family."""
    spec = ForbiddanceSpec.of(group, diffs, sums)
    n = group.order
    adj: list[set[int]] = [set() for _ in range(n)]
    loops = set()
    for x in range(n):
        if group.double(x) in spec.sums or 0 in spec.diffs:
            loops.add(x)
        for d in spec.diffs:
            y = group.add(x, d)
            if y != x:
                adj[x].add(y)
                adj[y].add(x)
        for s in spec.sums:
            y = group.sub(s, x)
            if y != x:
                adj[x].add(y)
                adj[y].add(x)
    return ForbiddanceGraph(
        group=group,
        spec=spec,
        neighbors=tuple(frozenset(a) for a in adj),
        loops=frozenset(loops),
    )


@dataclass(frozen=True)
class Component:
    """One loop-free connected component with its structural label.

    kind is one of "vertex", "edge", "path", "cycle", "ladder", "prism",
    "generic". param carries the natural size parameter (path vertices,
    cycle length, rungs of a ladder/prism; vertex count for generic).
    witness lists, for the non-trivial shapes, the component vertices in the
    order of a fixed traversal of the reference graph.
    """

    kind: str
    param: int
    vertices: tuple[int, ...]
    witness: Optional[tuple[int, ...]] = field(default=None, compare=False)


def canonical_shape(kind: str, param: int) -> tuple[str, int]:
    """Resolve shape aliases to the classifier's canonical labels.

    The smallest members of the structured families coincide as simple
    graphs: a 2-cycle, a 2-vertex path and a 1-rung ladder are all a single
    edge, and a 2-rung ladder is a 4-cycle.
    """
    if kind == "path":
        if param == 1:
            return ("vertex", 1)
        if param == 2:
            return ("edge", 2)
    if kind == "cycle" and param == 2:
        return ("edge", 2)
    if kind == "ladder":
        if param == 1:
            return ("edge", 2)
        if param == 2:
            return ("cycle", 4)
    return (kind, param)


@dataclass(frozen=True)
class Decomposition:
    """Classified components of a forbiddance graph after loop removal."""

    total_vertices: int
    looped: tuple[int, ...]
    components: tuple[Component, ...]

    def multiplicities(self) -> dict[tuple[str, int], int]:
        return dict(Counter((c.kind, c.param) for c in self.components))

    def count_shape(self, kind: str, param: int) -> int:
        """Number of components matching a shape, aliases included."""
        want = canonical_shape(kind, param)
        return sum(1 for c in self.components if (c.kind, c.param) == want)

    def prism_ladder_profile(self, cycle_len: int) -> tuple[int, int, bool]:
        """(prism count, ladder count, every component matched) for one odd
        forbidden difference of the given order plus one forbidden sum."""
        n_p = self.count_shape("prism", cycle_len)
        n_l = self.count_shape("ladder", (cycle_len - 1) // 2)
        return n_p, n_l, n_p + n_l == len(self.components)

    def to_record(self) -> dict:
        groups = Counter((c.kind, c.param, len(c.vertices)) for c in self.components)
        return {
            "total_vertices": self.total_vertices,
            "looped": list(self.looped),
            "components": [
                {"kind": kind, "param": param, "size": size, "count": count}
                for (kind, param, size), count in sorted(groups.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


def _components_after_loops(graph: ForbiddanceGraph) -> list[list[int]]:
    alive = [v for v in range(graph.n) if v not in graph.loops]
    alive_set = set(alive)
    seen: set[int] = set()
    comps = []
    for start in alive:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in graph.neighbors[v]:
                if u in alive_set and u not in seen:
                    seen.add(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def _walk_path(vertices: list[int], nbrs: dict[int, set[int]]) -> Optional[list[int]]:
    ends = [v for v in vertices if len(nbrs[v]) == 1]
    if len(vertices) == 1:
        return vertices
    if len(ends) != 2 or any(len(nbrs[v]) > 2 for v in vertices):
        return None
    order = [min(ends)]
    prev = None
    while len(order) < len(vertices):
        nxt = [u for u in nbrs[order[-1]] if u != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order if len(set(order)) == len(vertices) else None


def _walk_cycle(vertices: list[int], nbrs: dict[int, set[int]]) -> Optional[list[int]]:
    if any(len(nbrs[v]) != 2 for v in vertices):
        return None
    start = min(vertices)
    order = [start]
    prev = None
    while True:
        nxt = [u for u in nbrs[order[-1]] if u != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(min(nxt) if len(order) == 1 else nxt[0])
        if order[-1] == start:
            order.pop()
            break
        if len(order) > len(vertices):
            return None
    return order if len(order) == len(vertices) else None


def _reference_ladder(m: int) -> nx.Graph:
    return nx.cartesian_product(nx.path_graph(m), nx.path_graph(2))


def _reference_prism(length: int) -> nx.Graph:
    return nx.cartesian_product(nx.cycle_graph(length), nx.path_graph(2))


def _iso_witness(
    vertices: list[int], nbrs: dict[int, set[int]], reference: nx.Graph
) -> Optional[tuple[int, ...]]:
    """Component vertices in reference-traversal order, or None if not isomorphic."""
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from((u, v) for u in vertices for v in nbrs[u] if u < v)
    matcher = nx.isomorphism.GraphMatcher(reference, g)
    for mapping in matcher.isomorphisms_iter():
        return tuple(mapping[node] for node in sorted(reference.nodes()))
    return None


def classify_component(
    vertices: list[int], neighbors: tuple[frozenset[int], ...]
) -> Component:
    """Label one connected loop-free component, verifying by witness."""
    vset = set(vertices)
    nbrs = {v: set(neighbors[v]) & vset for v in vertices}
    n = len(vertices)
    vs = tuple(sorted(vertices))

    if n == 1:
        return Component("vertex", 1, vs, vs)
    if n == 2:
        return Component("edge", 2, vs, vs)

    cyc = _walk_cycle(vertices, nbrs)
    if cyc is not None:
        return Component("cycle", n, vs, tuple(cyc))
    path = _walk_path(vertices, nbrs)
    if path is not None:
        return Component("path", n, vs, tuple(path))

    degs = sorted(len(nbrs[v]) for v in vertices)
    if n % 2 == 0 and n >= 6:
        half = n // 2
        if degs == [2] * 4 + [3] * (n - 4):
            witness = _iso_witness(vertices, nbrs, _reference_ladder(half))
            if witness is not None:
                return Component("ladder", half, vs, witness)
        if degs == [3] * n:
            witness = _iso_witness(vertices, nbrs, _reference_prism(half))
            if witness is not None:
                return Component("prism", half, vs, witness)

    return Component("generic", n, vs, None)


def decompose(graph: ForbiddanceGraph) -> Decomposition:
    """Classify every connected component left after deleting looped vertices."""
    comps = [
        classify_component(comp, graph.neighbors)
        for comp in _components_after_loops(graph)
    ]
    return Decomposition(
        total_vertices=graph.n,
        looped=tuple(sorted(graph.loops)),
        components=tuple(comps),
    )
