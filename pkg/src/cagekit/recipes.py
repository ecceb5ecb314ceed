"""Construction provenance records and deterministic replay."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Callable, Iterable

from . import families
from .canon import certificate
from .constructions import (
    amalgamate,
    apply_moore_double,
    apply_subdivide_merge,
    apply_subdivide_pair,
    apply_subdivide_triple,
    canonical_double_cover,
)
from .errors import ReplayMismatch, UnknownOperation
from .graph import Graph, add_edges, add_vertices, remove_edges, remove_vertices


@dataclass(frozen=True)
class Recipe:
    operation: str
    parents: tuple[str, ...]
    params: dict
    output_cert: str

    def to_line(self) -> str:
        blob = json.dumps(self.params, sort_keys=True, separators=(",", ":"))
        parents = ",".join(self.parents)
        return f"op={self.operation} parents={parents} params={blob} out={self.output_cert}"

    @classmethod
    def from_line(cls, line: str) -> "Recipe":
        fields = {}
        for token in line.strip().split(" "):
            key, _, value = token.partition("=")
            fields[key] = value
        parents = tuple(c for c in fields["parents"].split(",") if c)
        return cls(fields["op"], parents, json.loads(fields["params"]), fields["out"])


def _edge(value) -> tuple[int, int]:
    u, v = value
    return u, v


def _apply_amalgamate(parents, params):
    return amalgamate(
        parents[0], parents[1], _edge(params["e1"]), _edge(params["e2"]),
        params["mode"],
    )


def _apply_subdivide_two(parents, params):
    return apply_subdivide_pair(parents[0], _edge(params["e1"]), _edge(params["e2"]))


def _apply_subdivide_three(parents, params):
    return apply_subdivide_triple(
        parents[0], _edge(params["e1"]), _edge(params["e2"]), _edge(params["e3"])
    )


def _apply_subdivide_merge(parents, params):
    return apply_subdivide_merge(parents[0], _edge(params["e1"]), _edge(params["e2"]))


def _apply_moore_tree_double(parents, params):
    return apply_moore_double(
        parents[0], params["r"], params["root"], list(params["matching"])
    )


def _apply_delete_edges_add_vertices(parents, params):
    h = remove_edges(parents[0], [_edge(e) for e in params["removed"]])
    h = add_vertices(h, params["added"])
    return add_edges(h, [_edge(e) for e in params["edges"]])


def _apply_delete_vertices(parents, params):
    h, _ = remove_vertices(parents[0], params["removed"])
    return add_edges(h, [_edge(e) for e in params["edges"]])


def _apply_remove_biggs_tree(parents, params):
    h, _ = remove_vertices(parents[0], params["tree"])
    return add_edges(h, [_edge(e) for e in params["edges"]])


def _apply_remove_perfect_matching(parents, params):
    return remove_edges(parents[0], [_edge(e) for e in params["matching"]])


def _apply_canonical_double_cover(parents, params):
    return canonical_double_cover(parents[0])


def _apply_circulant(parents, params):
    return families.circulant(families.CirculantSpec(params["n"], tuple(params["S"])))


def _apply_quartic_parity(parents, params):
    return families.quartic_parity_graph(params["n"])


def _apply_gdgp(parents, params):
    return families.gdgp(
        families.GdgpSpec(params["m"], params["n"], tuple(params["K"]))
    )


_APPLY: dict[str, Callable] = {
    "amalgamate": _apply_amalgamate,
    "subdivide_two": _apply_subdivide_two,
    "subdivide_three": _apply_subdivide_three,
    "subdivide_merge": _apply_subdivide_merge,
    "moore_tree_double": _apply_moore_tree_double,
    "delete_edges_add_vertices": _apply_delete_edges_add_vertices,
    "delete_vertices": _apply_delete_vertices,
    "remove_biggs_tree": _apply_remove_biggs_tree,
    "remove_perfect_matching": _apply_remove_perfect_matching,
    "canonical_double_cover": _apply_canonical_double_cover,
    "circulant": _apply_circulant,
    "quartic_parity_graph": _apply_quartic_parity,
    "gdgp": _apply_gdgp,
}

OPERATION_NAMES = ("seed",) + tuple(sorted(_APPLY))


def replay(recipe: Recipe, resolve: Callable[[str], Graph]) -> Graph:
    """Re-run a recorded construction; resolve maps certificates to graphs."""
    if recipe.operation == "seed":
        return resolve(recipe.output_cert)
    apply_fn = _APPLY.get(recipe.operation)
    if apply_fn is None:
        raise UnknownOperation(f"no replay rule for {recipe.operation!r}")
    parents = [resolve(cert) for cert in recipe.parents]
    return apply_fn(parents, recipe.params)


def verified_replay(recipe: Recipe, resolve: Callable[[str], Graph]) -> Graph:
    """Replay and insist the output certificate matches the record."""
    out = replay(recipe, resolve)
    got = certificate(out)
    if got != recipe.output_cert:
        raise ReplayMismatch(
            f"{recipe.operation} replayed to {got!r}, recorded {recipe.output_cert!r}"
        )
    return out


def write_recipes(path: str | os.PathLike, recipes: Iterable[Recipe]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for recipe in recipes:
            fh.write(recipe.to_line() + "\n")
            count += 1
    return count


def read_recipes(path: str | os.PathLike) -> list[Recipe]:
    out = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(Recipe.from_line(line))
    return out
