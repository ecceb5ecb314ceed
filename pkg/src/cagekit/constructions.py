"""Splice constructions: amalgamation, subdivisions, Moore-tree doubling,
matching removal, and the canonical double cover."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .bounds import moore_tree_size
from .canon import certificate
from .errors import (
    DegreeMismatch,
    IndexOutOfRange,
    NoCompletion,
    NoPerfectMatching,
    NotCubic,
    NotTetravalent,
    OddOrder,
    OrderTooLarge,
    ParameterOutOfRange,
    RadiusTooLarge,
    TreeNotInduced,
)
from .graph import (
    ACYCLIC,
    UNREACHABLE,
    Graph,
    add_edges,
    add_vertices,
    disjoint_union,
    remove_edges,
    remove_vertices,
    bipartition,
)
from .limits import Budget, coerce_budget

AMALGAMATE_MODES = ("cross", "parallel")

_FAR = 10**9

Params = dict
Emitted = tuple[Params, Graph]


def dedup_first(pairs: Iterable[Emitted]) -> list[Emitted]:
    """Keep the first representative of each isomorphism class."""
    seen: set[str] = set()
    out: list[Emitted] = []
    for params, h in pairs:
        cert = certificate(h)
        if cert in seen:
            continue
        seen.add(cert)
        out.append((params, h))
    return out


def _required_girth(g: Graph, target_girth: int | None) -> int:
    gg = g.girth()
    if gg is ACYCLIC:
        raise ParameterOutOfRange("input graph has no cycle")
    if target_girth is None:
        return gg
    if target_girth < 3 or target_girth > gg:
        raise ParameterOutOfRange(
            f"target girth {target_girth} outside 3..girth {gg}"
        )
    return target_girth


def _edge_distance_at_least(g: Graph, e1, e2, floor: int) -> bool:
    d = g.edge_distance(e1, e2)
    return d is UNREACHABLE or d >= floor


def amalgamate(g1: Graph, g2: Graph, e1, e2, mode: str = "cross") -> Graph:
    """Join two k-regular graphs by swapping one edge from each."""
    if mode not in AMALGAMATE_MODES:
        raise ParameterOutOfRange(f"mode must be one of {AMALGAMATE_MODES}")
    k = g1.regularity()
    if k is None or g2.regularity() != k:
        raise DegreeMismatch("amalgamation needs two k-regular inputs, same k")
    u1, v1 = g1.as_edge(e1)
    shift = g1.order
    u2, v2 = (w + shift for w in g2.as_edge(e2))
    merged = remove_edges(disjoint_union(g1, g2), [(u1, v1), (u2, v2)])
    if mode == "cross":
        return add_edges(merged, [(u1, v2), (v1, u2)])
    return add_edges(merged, [(u1, u2), (v1, v2)])


def apply_subdivide_pair(g: Graph, e1, e2) -> Graph:
    """Subdivide two edges and join the two new vertices."""
    a, b = g.as_edge(e1)
    c, d = g.as_edge(e2)
    x, y = g.order, g.order + 1
    h = add_vertices(remove_edges(g, [(a, b), (c, d)]), 2)
    return add_edges(h, [(a, x), (b, x), (c, y), (d, y), (x, y)])


def apply_subdivide_triple(g: Graph, e1, e2, e3) -> Graph:
    """Subdivide three edges and join the new vertices through a hub."""
    a, b = g.as_edge(e1)
    c, d = g.as_edge(e2)
    e, f = g.as_edge(e3)
    x, y, z, hub = g.order, g.order + 1, g.order + 2, g.order + 3
    h = add_vertices(remove_edges(g, [(a, b), (c, d), (e, f)]), 4)
    return add_edges(
        h,
        [(a, x), (b, x), (c, y), (d, y), (e, z), (f, z),
         (x, hub), (y, hub), (z, hub)],
    )


def apply_subdivide_merge(g: Graph, e1, e2) -> Graph:
    """Subdivide two edges and identify the two new vertices."""
    a, b = g.as_edge(e1)
    c, d = g.as_edge(e2)
    w = g.order
    h = add_vertices(remove_edges(g, [(a, b), (c, d)]), 1)
    return add_edges(h, [(a, w), (b, w), (c, w), (d, w)])


def iter_subdivide_two(
    g: Graph, target_girth: int | None = None, budget: Budget | int | None = None
) -> Iterator[Emitted]:
    if g.regularity() != 3:
        raise NotCubic("two-edge subdivision needs a cubic input")
    floor = _required_girth(g, target_girth) - 2
    budget = coerce_budget(budget)
    for e1, e2 in combinations(g.edges(), 2):
        budget.spend()
        if not _edge_distance_at_least(g, e1, e2, floor):
            continue
        yield {"e1": list(e1), "e2": list(e2)}, apply_subdivide_pair(g, e1, e2)


def subdivide_two(
    g: Graph, target_girth: int | None = None, budget: Budget | int | None = None
) -> list[Graph]:
    """All order n+2 cubic graphs from distant-edge-pair subdivision."""
    return [h for _, h in dedup_first(iter_subdivide_two(g, target_girth, budget))]


def iter_subdivide_three(
    g: Graph, target_girth: int | None = None, budget: Budget | int | None = None
) -> Iterator[Emitted]:
    if g.regularity() != 3:
        raise NotCubic("three-edge subdivision needs a cubic input")
    floor = _required_girth(g, target_girth) - 3
    budget = coerce_budget(budget)
    for e1, e2, e3 in combinations(g.edges(), 3):
        budget.spend()
        if not (
            _edge_distance_at_least(g, e1, e2, floor)
            and _edge_distance_at_least(g, e1, e3, floor)
            and _edge_distance_at_least(g, e2, e3, floor)
        ):
            continue
        params = {"e1": list(e1), "e2": list(e2), "e3": list(e3)}
        yield params, apply_subdivide_triple(g, e1, e2, e3)


def subdivide_three(
    g: Graph, target_girth: int | None = None, budget: Budget | int | None = None
) -> list[Graph]:
    """All order n+4 cubic graphs from distant-edge-triple subdivision."""
    return [h for _, h in dedup_first(iter_subdivide_three(g, target_girth, budget))]


def iter_subdivide_merge(
    g: Graph, target_girth: int | None = None, budget: Budget | int | None = None
) -> Iterator[Emitted]:
    if g.regularity() != 4:
        raise NotTetravalent("subdivide-and-merge needs a 4-regular input")
    required = _required_girth(g, target_girth)
    floor = required - 2
    budget = coerce_budget(budget)
    for e1, e2 in combinations(g.edges(), 2):
        budget.spend()
        if set(e1) & set(e2):
            continue
        if not _edge_distance_at_least(g, e1, e2, floor):
            continue
        h = apply_subdivide_merge(g, e1, e2)
        # the distance floor alone permits a (required-1)-cycle through the
        # merged vertex, so each output is gated on its actual girth
        hg = h.girth()
        if hg is ACYCLIC or hg < required:
            continue
        yield {"e1": list(e1), "e2": list(e2)}, h


def subdivide_merge(
    g: Graph, target_girth: int | None = None, budget: Budget | int | None = None
) -> list[Graph]:
    """All order n+1 4-regular graphs from subdividing and merging."""
    return [h for _, h in dedup_first(iter_subdivide_merge(g, target_girth, budget))]


def moore_tree_layers(g: Graph, root: int, depth: int) -> list[list[int]]:
    """Breadth-first layers around root, validated as a Moore tree.

    Layer i must have exactly k(k-1)^(i-1) vertices, each with a unique
    parent; together these force the tree shape up to the leaf layer
    (leaves may be adjacent to each other).
    """
    if not 0 <= root < g.order:
        raise IndexOutOfRange(f"root {root} outside 0..{g.order - 1}")
    k = g.regularity()
    if k is None:
        raise DegreeMismatch("Moore tree layers need a regular graph")
    layers = [[root]]
    inside = {root: 0}
    expected = k
    for i in range(1, depth + 1):
        nxt: set[int] = set()
        for v in layers[-1]:
            for w in g.neighbors(v):
                if w not in inside:
                    nxt.add(w)
        if len(nxt) != expected:
            raise TreeNotInduced(
                f"layer {i} around {root} has {len(nxt)} vertices, wanted {expected}"
            )
        for w in nxt:
            parents = sum(1 for u in g.neighbors(w) if inside.get(u) == i - 1)
            if parents != 1:
                raise TreeNotInduced(
                    f"vertex {w} has {parents} parents in layer {i - 1}"
                )
        layer = sorted(nxt)
        for w in layer:
            inside[w] = i
        layers.append(layer)
        expected *= k - 1
    return layers


def find_double_matching(
    h: Graph, leaves: list[int], girth_floor: int, budget: Budget
) -> list[int] | None:
    """Bijection between leaf sets of two copies of h keeping girth high.

    Returns pi as a list (copy-one leaf index i pairs with copy-two leaf
    index pi[i]) or None. A new cycle through two join edges has length
    d(a,b) + d(a',b') + 2, which is required to reach girth_floor; full
    assignments are re-checked on the assembled graph. The identity
    bijection is explored first.
    """
    t = len(leaves)
    dist = [[0] * t for _ in range(t)]
    for i in range(t):
        row = h.distances_from(leaves[i])
        for j in range(t):
            d = row[leaves[j]]
            dist[i][j] = _FAR if d is UNREACHABLE else d
    perm = [-1] * t
    used = [False] * t

    def assemble() -> Graph:
        shift = h.order
        joins = [(leaves[i], leaves[perm[i]] + shift) for i in range(t)]
        return add_edges(disjoint_union(h, h), joins)

    def search(i: int) -> list[int] | None:
        if i == t:
            built = assemble()
            bg = built.girth()
            if bg is not ACYCLIC and bg >= girth_floor:
                return list(perm)
            return None
        candidates = [i] + [c for c in range(t) if c != i]
        for c in candidates:
            if used[c]:
                continue
            budget.spend()
            ok = True
            for j in range(i):
                if dist[i][j] + dist[perm[j]][c] + 2 < girth_floor:
                    ok = False
                    break
            if not ok:
                continue
            perm[i] = c
            used[c] = True
            found = search(i + 1)
            if found is not None:
                return found
            perm[i] = -1
            used[c] = False
        return None

    return search(0)


def _doubling_parts(g: Graph, r: int, root: int):
    """Deleted copy plus sorted leaf labels for Moore-tree doubling."""
    layers = moore_tree_layers(g, root, r + 1)
    ball = [v for layer in layers[: r + 1] for v in layer]
    h, relabel = remove_vertices(g, ball)
    leaves = sorted(relabel[v] for v in layers[r + 1])
    return h, leaves


def apply_moore_double(g: Graph, r: int, root: int, matching: list[int]) -> Graph:
    """Assemble the doubled graph from a recorded leaf bijection."""
    h, leaves = _doubling_parts(g, r, root)
    shift = h.order
    joins = [(leaves[i], leaves[matching[i]] + shift) for i in range(len(leaves))]
    return add_edges(disjoint_union(h, h), joins)


def moore_double_matching(
    g: Graph, r: int, root: int, budget: Budget | int | None = None
) -> list[int]:
    """Leaf bijection for moore_tree_double, after validating the input."""
    gg = g.girth()
    if gg is ACYCLIC or gg < 4:
        raise ParameterOutOfRange("Moore-tree doubling needs girth at least 4")
    if r < 0 or r > gg // 4:
        raise RadiusTooLarge(f"radius {r} outside 0..{gg // 4} for girth {gg}")
    k = g.regularity()
    if k is None:
        raise DegreeMismatch("Moore-tree doubling needs a regular graph")
    budget = coerce_budget(budget)
    h, leaves = _doubling_parts(g, r, root)
    perm = find_double_matching(h, leaves, gg, budget)
    if perm is None:
        raise NoCompletion(
            f"no leaf bijection keeps girth {gg} (root {root}, radius {r})"
        )
    return perm


def moore_tree_double(
    g: Graph, r: int, root: int, budget: Budget | int | None = None
) -> Graph:
    """Delete the radius-r Moore tree from two copies and join the leaves.

    Output is k-regular of order 2(n - moore_tree_size(k, r)) with girth
    at least girth(g); the leaf bijection is searched so that every pair
    of join edges closes only long cycles.
    """
    perm = moore_double_matching(g, r, root, budget)
    out = apply_moore_double(g, r, root, perm)
    k = g.regularity()
    assert out.order == 2 * (g.order - moore_tree_size(k, r))
    return out


def find_perfect_matching(
    g: Graph, budget: Budget | int | None = None
) -> list[tuple[int, int]]:
    """A perfect matching: augmenting paths when bipartite, else backtracking."""
    if g.order % 2 != 0:
        raise OddOrder("perfect matchings need an even order")
    budget = coerce_budget(budget)
    sides = bipartition(g)
    if sides is not None:
        return _bipartite_matching(g, sides, budget)
    if g.order > 64:
        raise OrderTooLarge(
            "general matching search is capped at order 64; input is larger"
        )
    return _backtracking_matching(g, budget)


def _bipartite_matching(g, sides, budget) -> list[tuple[int, int]]:
    left = sorted(sides[0])
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in g.neighbors(u):
            if v in seen:
                continue
            seen.add(v)
            budget.spend()
            if v not in match or augment(match[v], seen):
                match[v] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            raise NoPerfectMatching(f"no matching saturates vertex {u}")
    if 2 * len(match) != g.order:
        raise NoPerfectMatching("matching does not cover every vertex")
    return sorted((u, v) if u < v else (v, u) for v, u in match.items())


def _backtracking_matching(g, budget) -> list[tuple[int, int]]:
    free = set(range(g.order))
    chosen: list[tuple[int, int]] = []

    def extend() -> bool:
        if not free:
            return True
        u = min(free)
        free.discard(u)
        for v in g.neighbors(u):
            if v not in free:
                continue
            budget.spend()
            free.discard(v)
            chosen.append((u, v))
            if extend():
                return True
            chosen.pop()
            free.add(v)
        free.add(u)
        return False

    if not extend():
        raise NoPerfectMatching("backtracking found no perfect matching")
    return sorted(chosen)


def remove_perfect_matching(
    g: Graph, budget: Budget | int | None = None
) -> Graph:
    """Delete a perfect matching, dropping regularity from k to k-1."""
    return remove_edges(g, find_perfect_matching(g, budget))


def canonical_double_cover(g: Graph) -> Graph:
    """Bipartite double: each vertex splits in two, edges cross the halves."""
    n = g.order
    doubled: list[tuple[int, int]] = []
    for u, v in g.edges():
        doubled.append((u, v + n))
        doubled.append((v, u + n))
    return Graph.from_edges(2 * n, doubled)
