"""Arithmetic graph families: circulants, the parity-rule quartic family,
and group divisible generalized Petersen graphs."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidConnectingSet,
    OddOrder,
    OrderTooSmall,
    SpecViolation,
)
from .graph import Graph


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(sorted(s % self.n for s in self.S)))


@dataclass(frozen=True)
class GdgpSpec:
    m: int
    n: int
    K: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "K", tuple(self.K))

    @property
    def a(self) -> int:
        return self.K[0] % self.m


def circulant(spec: CirculantSpec) -> Graph:
    """Vertices 0..n-1 with i ~ j exactly when (i - j) mod n lies in S."""
    n, S = spec.n, set(spec.S)
    if n < 1:
        raise InvalidConnectingSet("order must be positive")
    if 0 in S:
        raise InvalidConnectingSet("connecting set may not contain 0")
    if any((-s) % n not in S for s in S):
        raise InvalidConnectingSet("connecting set must be inverse-closed")
    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for s in S:
            w = (v + s) % n
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    if len(reached) != n:
        raise InvalidConnectingSet("connecting set does not generate Z_n")
    edges = {(min(i, j), max(i, j)) for i in range(n) for s in S
             for j in [(i + s) % n]}
    return Graph.from_edges(n, sorted(edges))


def circulant44(n: int) -> Graph:
    """The 4-regular circulant with jumps 1 and 3; girth 4 from order 10 up."""
    if n < 8:
        raise OrderTooSmall("jumps 1 and 3 need at least 8 vertices")
    return circulant(CirculantSpec(n, (1, 3, n - 3, n - 1)))


def quartic_parity_graph(n: int) -> Graph:
    """4-regular girth-6 graphs on even n >= 26 via a parity adjacency rule.

    Odd i links forward to i+7 and i+11, even i links backward; with the
    ring edges i±1 every vertex gets degree 4 and each chord is generated
    consistently from both endpoints.
    """
    if n % 2 != 0:
        raise OddOrder("the parity rule needs an even order")
    if n < 26:
        raise OrderTooSmall("the parity rule needs order at least 26")
    edges = set()
    for i in range(n):
        edges.add((min(i, (i + 1) % n), max(i, (i + 1) % n)))
        if i % 2 == 1:
            for jump in (7, 11):
                j = (i + jump) % n
                edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def gdgp(spec: GdgpSpec) -> Graph:
    """Rim u_0..u_{n-1}, spokes u_i v_i, and inner chords v_x v_{x+k_{x mod m}}."""
    m, n, K = spec.m, spec.n, spec.K
    if m < 2:
        raise SpecViolation("need at least 2 blocks")
    if n < 3 or n % m != 0:
        raise SpecViolation(f"block count {m} must divide the half-order {n}")
    if len(K) != m:
        raise SpecViolation(f"need exactly {m} chord offsets, got {len(K)}")
    a = K[0] % m
    if a == 0:
        raise SpecViolation("chord offsets must be nonzero mod the block count")
    if any(k % m != a for k in K):
        raise SpecViolation("all chord offsets must agree mod the block count")
    for j in range(m):
        if (K[j] + K[(j - a) % m]) % n == 0:
            raise SpecViolation(
                f"offsets at blocks {j} and {(j - a) % m} cancel mod {n}"
            )
    edges = [(i, (i + 1) % n) for i in range(n - 1)] + [(0, n - 1)]
    edges += [(i, n + i) for i in range(n)]
    inner = set()
    for x in range(n):
        y = (x + K[x % m]) % n
        if y == x:
            raise SpecViolation("chord offset of 0 mod the half-order")
        inner.add((n + min(x, y), n + max(x, y)))
    return Graph.from_edges(2 * n, edges + sorted(inner))
