"""Immutable simple graphs plus the distance/girth primitives everything else builds on."""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import IndexOutOfRange, MultiEdge, NotAnEdge, SameEdge, ZeroOrder


class _Sentinel:
    """Named sentinel; deliberately unordered so `sentinel >= 3` fails loudly."""

    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


#: girth() result for forests.
ACYCLIC = _Sentinel("Acyclic")
#: distance() result across components.
UNREACHABLE = _Sentinel("Unreachable")


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise IndexOutOfRange(f"vertex {v!r} not in 0..{n - 1}")


def normalize_endpoints(u: int, v: int) -> tuple[int, int]:
    """Return (min, max); reject loops."""
    if u == v:
        raise SameEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    All derived quantities (girth, certificates, distances) are cached on the
    instance; methods are pure, so instances are safe to share.
    """

    __slots__ = ("_adj", "_edges", "_girth", "_cert", "_dist")

    def __init__(self, adjacency: Iterable[Iterable[int]]):
        adj = []
        for u, nbrs in enumerate(adjacency):
            row = tuple(sorted(nbrs))
            adj.append(row)
        n = len(adj)
        edges = []
        for u, row in enumerate(adj):
            prev = -1
            for v in row:
                _check_vertex(v, n)
                if v == u:
                    raise SameEdge(f"loop at vertex {u}")
                if v == prev:
                    raise MultiEdge(f"repeated edge {u}-{v}")
                prev = v
                if u < v:
                    edges.append((u, v))
        self._adj: tuple[tuple[int, ...], ...] = tuple(adj)
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(edges))
        # symmetry check: every u-v needs the matching v-u entry
        for u, v in self._edges:
            if u not in self._adj[v]:
                raise NotAnEdge(f"asymmetric adjacency {u}-{v}")
        if 2 * len(self._edges) != sum(len(r) for r in self._adj):
            raise NotAnEdge("asymmetric adjacency")
        self._girth: int | _Sentinel | None = None
        self._cert: str | None = None
        self._dist: dict[int, tuple] = {}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            u, v = normalize_endpoints(u, v)
            if (u, v) in seen:
                raise MultiEdge(f"repeated edge {u}-{v}")
            seen.add((u, v))
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj)

    # -- basic accessors ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(v, self.order)
        return self._adj[v]

    def degree(self, v: int) -> int:
        _check_vertex(v, self.order)
        return len(self._adj[v])

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(u, self.order)
        _check_vertex(v, self.order)
        return v in self._adj[u]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(r) for r in self._adj))

    def regularity(self) -> int | None:
        """Common degree if regular, else None."""
        if self.order == 0:
            return None
        k = len(self._adj[0])
        return k if all(len(r) == k for r in self._adj) else None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"

    # -- distances ------------------------------------------------------------

    def distances_from(self, src: int) -> tuple:
        """BFS distances from src; UNREACHABLE where there is no path."""
        _check_vertex(src, self.order)
        cached = self._dist.get(src)
        if cached is not None:
            return cached
        n = self.order
        dist: list = [-1] * n
        dist[src] = 0
        q = deque([src])
        adj = self._adj
        while q:
            u = q.popleft()
            du = dist[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    q.append(w)
        out = tuple(d if d >= 0 else UNREACHABLE for d in dist)
        self._dist[src] = out
        return out

    def distance(self, u: int, v: int):
        """Shortest-path length, or UNREACHABLE across components."""
        _check_vertex(u, self.order)
        _check_vertex(v, self.order)
        return self.distances_from(u)[v]

    def is_connected(self) -> bool:
        if self.order == 0:
            raise ZeroOrder("connectivity of the empty graph is undefined")
        return UNREACHABLE not in self.distances_from(0)

    # -- girth ----------------------------------------------------------------

    def girth(self):
        """Length of a shortest cycle; ACYCLIC for forests.

        BFS from every vertex with parent tracking; a non-tree edge met at
        depth d closes a cycle of length dist[u]+dist[w]+1, and the minimum
        over all roots is exact.
        """
        if self._girth is None:
            self._girth = self._compute_girth()
        return self._girth

    def _compute_girth(self):
        n = self.order
        adj = self._adj
        best: int | None = None
        for root in range(n):
            dist = [-1] * n
            parent = [-1] * n
            dist[root] = 0
            q = deque([root])
            while q:
                u = q.popleft()
                du = dist[u]
                if best is not None and 2 * du >= best:
                    break  # deeper candidates cannot improve
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        q.append(w)
                    elif w != parent[u]:
                        c = du + dist[w] + 1
                        if best is None or c < best:
                            best = c
            if best == 3:
                break
        return ACYCLIC if best is None else best

    # -- edge utilities ---------------------------------------------------------

    def as_edge(self, e: tuple[int, int]) -> tuple[int, int]:
        """Normalize e to (min,max) and require it to be present."""
        u, v = e
        _check_vertex(u, self.order)
        _check_vertex(v, self.order)
        u, v = normalize_endpoints(u, v)
        if v not in self._adj[u]:
            raise NotAnEdge(f"{u}-{v} is not an edge")
        return (u, v)

    def edge_distance(self, e1: tuple[int, int], e2: tuple[int, int]):
        """Min distance over the four endpoint pairs, plus one.

        Distinct adjacent edges are at distance 1; identical edges are
        rejected with SameEdge.
        """
        e1 = self.as_edge(e1)
        e2 = self.as_edge(e2)
        if e1 == e2:
            raise SameEdge(f"edge distance of {e1} to itself")
        d1 = self.distances_from(e1[0])
        d2 = self.distances_from(e1[1])
        best = None
        for d in (d1[e2[0]], d1[e2[1]], d2[e2[0]], d2[e2[1]]):
            if d is UNREACHABLE:
                continue
            if best is None or d < best:
                best = d
        return UNREACHABLE if best is None else best + 1


# -- surgery (all return new graphs) ------------------------------------------


def add_edges(g: Graph, new_edges: Iterable[tuple[int, int]]) -> Graph:
    edges = list(g.edges())
    fresh: set = set()
    for e in new_edges:
        u, v = normalize_endpoints(e[0], e[1])
        _check_vertex(u, g.order)
        _check_vertex(v, g.order)
        if g.has_edge(u, v) or (u, v) in fresh:
            raise MultiEdge(f"edge {u}-{v} already present")
        fresh.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(g.order, edges)


def remove_edges(g: Graph, gone: Iterable[tuple[int, int]]) -> Graph:
    gone_norm = {g.as_edge(e) for e in gone}
    return Graph.from_edges(g.order, [e for e in g.edges() if e not in gone_norm])


def remove_vertices(g: Graph, gone: Iterable[int]) -> tuple[Graph, list]:
    """Delete vertices, compact labels; returns (graph, old->new map with None holes)."""
    gone_set = set(gone)
    for v in gone_set:
        _check_vertex(v, g.order)
    relab: list = []
    nxt = 0
    for v in range(g.order):
        if v in gone_set:
            relab.append(None)
        else:
            relab.append(nxt)
            nxt += 1
    edges = [
        (relab[u], relab[v])
        for u, v in g.edges()
        if u not in gone_set and v not in gone_set
    ]
    return Graph.from_edges(nxt, edges), relab


def add_vertices(g: Graph, count: int) -> Graph:
    """Append `count` isolated vertices."""
    return Graph.from_edges(g.order + count, g.edges())


def relabeled(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel so vertex v becomes perm[v]."""
    p = list(perm)
    if sorted(p) != list(range(g.order)):
        raise IndexOutOfRange("not a permutation of the vertex set")
    return Graph.from_edges(g.order, [(p[u], p[v]) for u, v in g.edges()])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.order
    edges = list(g1.edges()) + [(u + off, v + off) for u, v in g2.edges()]
    return Graph.from_edges(off + g2.order, edges)


def bipartition(g: Graph) -> tuple[set, set] | None:
    """2-coloring as (side0, side1), or None if an odd cycle exists."""
    n = g.order
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return None
    return ({v for v in range(n) if color[v] == 0},
            {v for v in range(n) if color[v] == 1})


def check_kg(g: Graph, k: int, girth: int) -> str | None:
    """Why g is not a connected k-regular graph of girth exactly `girth`; None if it is."""
    if g.order == 0:
        return "empty graph"
    if g.regularity() != k:
        return f"not {k}-regular"
    if not g.is_connected():
        return "not connected"
    actual = g.girth()
    if actual is ACYCLIC:
        return "acyclic"
    if actual != girth:
        return f"girth {actual}, expected {girth}"
    return None
