"""Immutable simple-graph value type and small-scale structural queries.

Graphs are connected-or-not simple undirected graphs on dense 0-based
vertex labels, stored as sorted adjacency tuples. Everything here is pure
and safe to call from concurrent workers. Isomorphism testing uses exact
canonical labeling (color refinement plus individualization backtracking),
which is affordable for the desk-scale orders (n <= 12) this package
targets and makes enumeration deduplication exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Graph",
    "ClassDescriptor",
    "girth",
    "pendant_count",
    "classify",
    "is_connected",
    "is_isomorphic",
    "canonical_key",
    "canonical_graph",
    "parse_edge_list",
    "format_edge_list",
    "read_graph",
    "write_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph must have at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        deg_sum = 0
        for u, row in enumerate(self.adj):
            if tuple(sorted(row)) != row:
                raise ValueError(f"adjacency row {u} is not sorted")
            prev = -1
            for v in row:
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if v == prev:
                    raise ValueError(f"repeated neighbor {v} at vertex {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} out of range at vertex {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
                prev = v
            deg_sum += len(row)
        # symmetry makes the degree sum even; kept as a cheap sanity check
        if deg_sum % 2 != 0:
            raise ValueError("odd degree sum: adjacency is not symmetric")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on ``n`` vertices from an iterable of edges."""
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in rows[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            rows[u].add(v)
            rows[v].add(u)
        return Graph(n, tuple(tuple(sorted(r)) for r in rows))

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(r) for r in self.adj) // 2

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.adj)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        return tuple(
            (u, v) for u in range(self.n) for v in self.adj[u] if u < v
        )


@dataclass(frozen=True)
class ClassDescriptor:
    """Structural classification of a connected graph.

    ``rank`` is the cycle-space rank m - n + 1 (0 tree, 1 unicyclic,
    2 bicyclic). ``bicyclic_subclass`` is "B1" when the two cycles share at
    most one vertex, "B2" when they share at least one edge (theta base),
    and "not-bicyclic" otherwise. ``base_vertices`` is the vertex set of
    the minimal pendant-free base when rank = 2, else None.
    """

    rank: int
    girth: int | None
    pendants: int
    bicyclic_subclass: str
    base_vertices: frozenset[int] | None


def is_connected(g: Graph) -> bool:
    """BFS reachability from vertex 0 covers all vertices."""
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == g.n


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None when the graph is acyclic.

    Runs one BFS per start vertex; every non-tree edge closes a walk of
    length dist[u] + dist[v] + 1 >= girth, with equality attained when the
    start vertex lies on a shortest cycle.
    """
    best: int | None = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] * 2 >= best:
                continue
            for v in g.adj[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def pendant_count(g: Graph) -> int:
    """Number of degree-1 vertices."""
    return sum(1 for r in g.adj if len(r) == 1)


def _strip_pendants(g: Graph) -> frozenset[int]:
    """Vertices surviving iterative deletion of degree-1 vertices."""
    deg = list(g.degrees())
    alive = [True] * g.n
    queue = deque(u for u in range(g.n) if deg[u] == 1)
    while queue:
        u = queue.popleft()
        if not alive[u]:
            continue
        alive[u] = False
        for v in g.adj[u]:
            if alive[v]:
                deg[v] -= 1
                if deg[v] == 1:
                    queue.append(v)
    return frozenset(u for u in range(g.n) if alive[u])


def _base_is_theta(g: Graph, base: frozenset[int]) -> bool:
    """True when the bicyclic base is a theta graph.

    A bicyclic base is either a theta (two degree-3 vertices joined by
    three internally disjoint paths), two cycles sharing one vertex (one
    degree-4 vertex), or two cycles joined by a path (two degree-3
    vertices whose arcs mostly loop back). Walking the three arcs out of a
    degree-3 vertex distinguishes the last two cases: in a theta all three
    arcs end at the other hub.
    """
    base_deg = {u: sum(1 for v in g.adj[u] if v in base) for u in base}
    hubs = [u for u in base if base_deg[u] >= 3]
    if any(base_deg[u] == 4 for u in hubs):
        return False  # two cycles glued at one vertex
    if len(hubs) != 2:
        return False
    a, b = hubs
    ends_at_b = 0
    for w in g.adj[a]:
        if w not in base:
            continue
        prev, cur = a, w
        while base_deg[cur] == 2:
            nxt = next(x for x in g.adj[cur] if x in base and x != prev)
            prev, cur = cur, nxt
        if cur == b:
            ends_at_b += 1
    return ends_at_b == 3


def classify(g: Graph) -> ClassDescriptor:
    """Cycle-space rank, girth, pendant count and bicyclic subclass.

    Rejects disconnected input: all class definitions here presuppose
    connectivity.
    """
    if not is_connected(g):
        raise ValueError("classify requires a connected graph")
    rank = g.m - g.n + 1
    if rank != 2:
        return ClassDescriptor(rank, girth(g), pendant_count(g), "not-bicyclic", None)
    base = _strip_pendants(g)
    subclass = "B2" if _base_is_theta(g, base) else "B1"
    return ClassDescriptor(rank, girth(g), pendant_count(g), subclass, base)


# --- canonical labeling ---------------------------------------------------


def _refine(adj: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    """Stable color refinement; color ids are ranks of sorted signatures."""
    n = len(adj)
    while True:
        sigs = [
            (colors[u], tuple(sorted(colors[v] for v in adj[u])))
            for u in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[u]] for u in range(n)]
        if new == colors:
            return colors
        colors = new


def _canonical_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least edge tuple over refinement-compatible labelings."""
    n, adj = g.n, g.adj
    best: list[tuple[tuple[int, int], ...] | None] = [None]

    def encode(colors: list[int]) -> tuple[tuple[int, int], ...]:
        pos = [0] * n
        for p, u in enumerate(sorted(range(n), key=lambda u: colors[u])):
            pos[u] = p
        out = []
        for u in range(n):
            pu = pos[u]
            for v in adj[u]:
                pv = pos[v]
                if pu < pv:
                    out.append((pu, pv))
        return tuple(sorted(out))

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for u in range(n):
            cells.setdefault(colors[u], []).append(u)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cand = encode(colors)
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        for u in target:
            child = [2 * c for c in colors]
            child[u] -= 1
            search(_refine(adj, child))

    search(_refine(adj, [0] * n))
    assert best[0] is not None
    return best[0]


@lru_cache(maxsize=None)
def canonical_key(g: Graph) -> str:
    """Canonical string form: equal keys if and only if isomorphic graphs."""
    edges = ",".join(f"{u}-{v}" for u, v in _canonical_edges(g))
    return f"{g.n}:{edges}"


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled representative of g's isomorphism class."""
    return Graph.from_edges(g.n, _canonical_edges(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via canonical forms.

    Intended for n <= 12; larger inputs are not guarded, only slow.
    """
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


# --- edge-list text format ------------------------------------------------


def format_edge_list(g: Graph) -> str:
    """Serialize as the shared edge-list format: "n m" then "u v" lines."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; '#' starts a comment line.

    Rejects duplicate edges, loops, reversed or out-of-range endpoints,
    and an edge count that disagrees with the header.
    """
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise ValueError("missing 'n m' header line")
    n, m = rows[0]
    if n < 1:
        raise ValueError("vertex count must be positive")
    edges = rows[1:]
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    for u, v in edges:
        if not (0 <= u < v < n):
            raise ValueError(f"edge ({u},{v}) violates 0 <= u < v < n={n}")
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))
