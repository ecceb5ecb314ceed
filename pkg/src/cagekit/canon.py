"""Exact isomorphism via color refinement plus individualization backtracking.

Certificates are the graph6 encoding of a canonical relabeling, so equal
certificates hold exactly for isomorphic graphs and the certificate doubles
as a replayable description of the graph.
"""
from __future__ import annotations

from .graph import ACYCLIC, Graph, relabeled
from . import graph6

_MAX_AUTOS = 64


def refine(adj: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    """Neighborhood-color refinement to a stable, label-independent coloring.

    Class ids are renumbered by sorted (color, neighbor-multiset) signature
    each round, so the ids depend only on the isomorphism type of the
    colored graph.
    """
    n = len(adj)
    colors = list(colors)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _leaf_key(adj, colors):
    """Adjacency rows in canonical position order; colors must be discrete."""
    n = len(adj)
    pos = colors  # discrete coloring: color == position
    orig_at = [0] * n
    for v in range(n):
        orig_at[pos[v]] = v
    rows = []
    for i in range(n):
        r = 0
        for w in adj[orig_at[i]]:
            r |= 1 << pos[w]
        rows.append(r)
    return tuple(rows), pos


def _individualize(adj, colors, v):
    split = [2 * c for c in colors]
    split[v] -= 1
    return refine(adj, split)


def _canonical_perm(g: Graph) -> list[int]:
    """Permutation old->new giving the canonical labeling."""
    n = g.order
    if n == 0:
        return []
    adj = g.adjacency
    base = refine(adj, [0] * n)

    best: dict = {"key": None, "pos": None}
    autos: list[tuple[list[int], list[int]]] = []  # (perm, inverse)

    def record_auto(pos_a, pos_b):
        if len(autos) >= _MAX_AUTOS:
            return
        inv_b = [0] * n
        for v in range(n):
            inv_b[pos_b[v]] = v
        gamma = [inv_b[pos_a[v]] for v in range(n)]
        if gamma == list(range(n)):
            return
        inv_g = [0] * n
        for v in range(n):
            inv_g[gamma[v]] = v
        autos.append((gamma, inv_g))

    def rec(colors, prefix):
        # target cell: members of the smallest color class with >1 vertex
        cell_color = -1
        count = [0] * (max(colors) + 1)
        for c in colors:
            count[c] += 1
        for c, k in enumerate(count):
            if k > 1:
                cell_color = c
                break
        if cell_color < 0:
            key, pos = _leaf_key(adj, colors)
            if best["key"] is None or key < best["key"]:
                best["key"] = key
                best["pos"] = pos
            elif key == best["key"]:
                record_auto(pos, best["pos"])
            return
        cell = [v for v in range(n) if colors[v] == cell_color]
        tried: list[int] = []
        for v in cell:
            skip = False
            for gamma, inv_g in autos:
                if inv_g[v] in tried and all(gamma[p] == p for p in prefix):
                    skip = True
                    break
            if skip:
                continue
            tried.append(v)
            prefix.append(v)
            rec(_individualize(adj, colors, v), prefix)
            prefix.pop()

    rec(base, [])
    return best["pos"]


def canonical_form(g: Graph) -> Graph:
    """Isomorphic copy with canonical vertex labels."""
    return relabeled(g, _canonical_perm(g))


def certificate(g: Graph) -> str:
    """graph6 line of the canonical form; equal iff isomorphic."""
    if g._cert is None:
        g._cert = graph6.encode(canonical_form(g))
    return g._cert


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test: cheap invariants first, certificates last."""
    if a.order != b.order or a.size != b.size:
        return False
    if a.degree_sequence() != b.degree_sequence():
        return False
    if a.girth() is ACYCLIC:
        if b.girth() is not ACYCLIC:
            return False
    elif b.girth() is ACYCLIC or a.girth() != b.girth():
        return False
    ca = refine(a.adjacency, [0] * a.order)
    cb = refine(b.adjacency, [0] * b.order)
    if sorted(ca) != sorted(cb):
        return False
    return certificate(a) == certificate(b)
