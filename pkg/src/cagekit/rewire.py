"""Rewiring searches: delete edges or vertices, then reconnect deficient
vertices without creating short cycles."""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterator

from .constructions import Emitted, dedup_first
from .errors import (
    DegreeImbalance,
    DegreeMismatch,
    NoCompletion,
    NotCubic,
    ParameterOutOfRange,
    TooManyVertices,
)
from .graph import ACYCLIC, Graph, add_edges, add_vertices, remove_edges, remove_vertices
from .limits import Budget, coerce_budget


def iter_completions(
    h: Graph, k: int, target_girth: int, budget: Budget
) -> Iterator[list[tuple[int, int]]]:
    """Edge sets completing h to k-regular with no added cycle below target.

    Branches on the smallest deficient vertex with ascending partners, so
    each completion set is produced exactly once. A partner is admissible
    when it is deficient, non-adjacent, and at distance >= target_girth - 1
    in the partially completed graph (re-checked as edges accumulate, since
    additions shrink distances).
    """
    n = h.order
    deficit = [k - h.degree(v) for v in range(n)]
    if any(d < 0 for d in deficit):
        raise DegreeMismatch(f"a vertex already exceeds degree {k}")
    if sum(deficit) % 2 != 0:
        return
    adj = [set(h.neighbors(v)) for v in range(n)]
    chosen: list[tuple[int, int]] = []

    def distances(src: int) -> dict[int, int]:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def search() -> Iterator[list[tuple[int, int]]]:
        budget.spend()
        u = next((v for v in range(n) if deficit[v] > 0), None)
        if u is None:
            yield list(chosen)
            return
        lo = chosen[-1][1] + 1 if chosen and chosen[-1][0] == u else u + 1
        dist = distances(u)
        for v in range(lo, n):
            if deficit[v] == 0 or v in adj[u]:
                continue
            if dist.get(v, target_girth) < target_girth - 1:
                continue
            adj[u].add(v)
            adj[v].add(u)
            deficit[u] -= 1
            deficit[v] -= 1
            chosen.append((u, v))
            yield from search()
            chosen.pop()
            deficit[u] += 1
            deficit[v] += 1
            adj[u].discard(v)
            adj[v].discard(u)

    yield from search()


def _girth_at_least(g: Graph, floor: int) -> bool:
    gg = g.girth()
    return gg is ACYCLIC or gg >= floor


def iter_delete_edges_add_vertices(
    g: Graph,
    num_edges: int,
    num_vertices: int,
    target_girth: int,
    budget: Budget | int | None = None,
) -> Iterator[Emitted]:
    """Completions for the first edge-deletion combination that admits any."""
    k = g.regularity()
    if k is None:
        raise DegreeMismatch("input must be regular")
    if num_edges < 0 or num_vertices < 0 or target_girth < 3:
        raise ParameterOutOfRange("counts must be nonnegative, girth at least 3")
    if (2 * num_edges + k * num_vertices) % 2 != 0:
        raise DegreeImbalance(
            f"{num_edges} deleted edges and {num_vertices} added vertices of "
            f"degree {k} leave an odd number of open slots"
        )
    budget = coerce_budget(budget)
    for combo in combinations(g.edges(), num_edges):
        h = add_vertices(remove_edges(g, combo), num_vertices)
        found = False
        for completion in iter_completions(h, k, target_girth, budget):
            out = add_edges(h, completion)
            if not _girth_at_least(out, target_girth):
                continue
            found = True
            params = {
                "removed": [list(e) for e in combo],
                "added": num_vertices,
                "edges": [list(e) for e in completion],
            }
            yield params, out
        if found:
            return
    raise NoCompletion(
        f"no {num_edges}-edge deletion admits a girth-{target_girth} completion"
    )


def delete_edges_add_vertices(
    g: Graph,
    num_edges: int,
    num_vertices: int,
    target_girth: int,
    budget: Budget | int | None = None,
) -> list[Graph]:
    """Delete edges, add fresh vertices, rewire to regularity; first batch."""
    pairs = iter_delete_edges_add_vertices(
        g, num_edges, num_vertices, target_girth, budget
    )
    return [h for _, h in dedup_first(pairs)]


def iter_delete_vertices(
    g: Graph,
    num_vertices: int,
    target_girth: int,
    budget: Budget | int | None = None,
) -> Iterator[Emitted]:
    """Completions for the first vertex-deletion combination that admits any."""
    k = g.regularity()
    if k is None:
        raise DegreeMismatch("input must be regular")
    if not 1 <= num_vertices <= 4:
        raise TooManyVertices("vertex deletion is limited to 1..4 vertices")
    if target_girth < 3:
        raise ParameterOutOfRange("target girth must be at least 3")
    rest = g.order - num_vertices
    if k * rest % 2 != 0:
        raise NoCompletion(
            f"{k}-regular graphs of order {rest} fail the parity condition"
        )
    budget = coerce_budget(budget)
    for combo in combinations(range(g.order), num_vertices):
        h, _ = remove_vertices(g, combo)
        found = False
        for completion in iter_completions(h, k, target_girth, budget):
            out = add_edges(h, completion)
            if not _girth_at_least(out, target_girth):
                continue
            found = True
            params = {
                "removed": list(combo),
                "edges": [list(e) for e in completion],
            }
            yield params, out
        if found:
            return
    raise NoCompletion(
        f"no {num_vertices}-vertex deletion admits a girth-{target_girth} completion"
    )


def delete_vertices(
    g: Graph,
    num_vertices: int,
    target_girth: int,
    budget: Budget | int | None = None,
) -> list[Graph]:
    """Delete vertices and rewire the survivors to regularity; first batch."""
    pairs = iter_delete_vertices(g, num_vertices, target_girth, budget)
    return [h for _, h in dedup_first(pairs)]


def biggs_excision_size(girth: int) -> int:
    """Subtree size whose removal drops the girth by exactly one."""
    if girth < 4:
        raise ParameterOutOfRange("excision needs girth at least 4")
    r = girth // 4
    if girth % 4 in (0, 1):
        return 2 ** (r + 1) - 2
    return 3 * 2**r - 2


def _connected_subsets(g: Graph, root: int, size: int) -> Iterator[list[int]]:
    """Connected vertex sets of the given size whose minimum is root."""

    def grow(chosen: list[int], banned: frozenset[int]) -> Iterator[list[int]]:
        if len(chosen) == size:
            yield sorted(chosen)
            return
        members = set(chosen)
        ext = sorted(
            w
            for v in chosen
            for w in g.neighbors(v)
            if w > root and w not in members and w not in banned
        )
        seen: set[int] = set()
        for c in ext:
            if c in seen:
                continue
            seen.add(c)
            yield from grow(chosen + [c], banned | frozenset(seen - {c}) | frozenset([c]))

    yield from grow([root], frozenset())


def _induced_trees(g: Graph, size: int) -> Iterator[list[int]]:
    for root in range(g.order):
        for subset in _connected_subsets(g, root, size):
            members = set(subset)
            inner = sum(
                1 for v in subset for w in g.neighbors(v) if w in members
            )
            if inner == 2 * (size - 1):
                yield subset


def iter_remove_biggs_tree(
    g: Graph, budget: Budget | int | None = None
) -> Iterator[Emitted]:
    """First rewiring that excises an induced tree and drops girth by one."""
    if g.regularity() != 3:
        raise NotCubic("tree excision needs a cubic input")
    gg = g.girth()
    if gg is ACYCLIC or gg < 4:
        raise ParameterOutOfRange("tree excision needs girth at least 4")
    size = biggs_excision_size(gg)
    budget = coerce_budget(budget)
    for tree in _induced_trees(g, size):
        h, _ = remove_vertices(g, tree)
        for completion in iter_completions(h, 3, gg - 1, budget):
            out = add_edges(h, completion)
            if out.girth() != gg - 1:
                continue
            params = {"tree": list(tree), "edges": [list(e) for e in completion]}
            yield params, out
            return
    raise NoCompletion(f"no induced {size}-vertex tree admits a rewiring")


def remove_biggs_tree(g: Graph, budget: Budget | int | None = None) -> Graph:
    """Excise a prescribed-size induced tree and rewire; girth drops by one."""
    for _, out in iter_remove_biggs_tree(g, budget):
        return out
    raise NoCompletion("unreachable")
