"""Depth-bounded breadth-first construction of G-fans.

Seeds are expanded level by level along the mutation tree; the resulting
G-cones are deduplicated by their sorted ray set.  Many words reach the
same cone, so the stored witness is the first one found (shortest, ties
broken lexicographically by construction order).  Exploration is capped by
depth and cone count because the fans of infinite type grow without bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exchange import ExchangeMatrix
from .seeds import (
    GCone,
    Seed,
    cone_key,
    det,
    g_cone,
    initial_seed,
    mutate_seed,
    transpose,
    unimodular_inverse,
)

Key = tuple[tuple[int, ...], ...]


class ResourceCapExceeded(RuntimeError):
    """The cone-count cap was hit before the depth bound."""


@dataclass
class Fan:
    source: ExchangeMatrix
    depth: int
    cones: dict[Key, GCone]
    words: dict[Key, tuple[int, ...]]
    adjacency: set[frozenset] = field(default_factory=set)

    @property
    def frontier(self) -> set[Key]:
        """Keys whose witness seed sits at the depth bound, so its
        neighbors were never expanded."""
        return {k for k, w in self.words.items() if len(w) == self.depth}


def explore(B: ExchangeMatrix, depth: int,
            max_cones: int = 100_000) -> Fan:
    """BFS over mutation words of length <= depth from the initial seed."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    s0 = initial_seed(B)
    cone0 = g_cone(s0)
    fan = Fan(B, depth, {cone0.key: cone0}, {cone0.key: ()})
    level = [(s0, cone0.key)]
    n = B.n
    for _ in range(depth):
        next_level = []
        for seed, parent_key in level:
            last = seed.word[-1] if seed.word else 0
            for k in range(1, n + 1):
                if k == last:
                    continue  # immediate backtrack returns to the parent
                child = mutate_seed(seed, k)
                cone = g_cone(child)
                key = cone.key
                if key != parent_key:
                    fan.adjacency.add(frozenset((parent_key, key)))
                if key not in fan.cones:
                    if len(fan.cones) >= max_cones:
                        raise ResourceCapExceeded(
                            f"cone cap {max_cones} reached at depth "
                            f"{len(child.word)}"
                        )
                    fan.cones[key] = cone
                    fan.words[key] = child.word
                next_level.append((child, key))
        level = next_level
    return fan


def find_negative_orthant(fan: Fan):
    """Shortest stored word whose G-cone is the negative orthant, or None."""
    n = fan.source.n
    target = cone_key(
        tuple(tuple(-int(i == j) for j in range(n)) for i in range(n))
    )
    return fan.words.get(target)


def cone_contains(cone: GCone, ray, strictness: str = "interior") -> bool:
    """Exact membership test of a ray in a simplicial unimodular cone.

    The barycentric coordinates are adj(G) ray with det(G) = +-1, so they
    stay in whatever exact ring the ray components live in.
    """
    g_cols = transpose(tuple(cone.rays))  # rays are columns of G
    inv = unimodular_inverse(g_cols)
    coords = [
        sum(inv[i][j] * ray[j] for j in range(len(ray)))
        for i in range(len(inv))
    ]
    if strictness == "interior":
        return all(_sign(x) > 0 for x in coords)
    if strictness == "closure":
        return all(_sign(x) >= 0 for x in coords)
    raise ValueError("strictness must be 'interior' or 'closure'")


def _sign(x) -> int:
    if hasattr(x, "sign"):
        return x.sign()
    return (x > 0) - (x < 0)


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def interiors_disjoint(a: GCone, b: GCone) -> bool:
    """Exact test that two full rank-3 simplicial cones have disjoint
    interiors.

    Candidate extreme rays of the intersection are rays of one cone inside
    the closure of the other, plus cross products of facet-normal pairs.
    The interiors meet iff some nonnegative combination (here: the sum) of
    the candidates is interior to both.
    """
    candidates = []
    for ray in a.rays:
        if cone_contains(b, ray, "closure"):
            candidates.append(ray)
    for ray in b.rays:
        if cone_contains(a, ray, "closure"):
            candidates.append(ray)
    na = unimodular_inverse(transpose(tuple(a.rays)))
    nb = unimodular_inverse(transpose(tuple(b.rays)))
    for ra in na:
        for rb in nb:
            for cand in (_cross(ra, rb), _cross(rb, ra)):
                if any(cand) and cone_contains(a, cand, "closure") \
                        and cone_contains(b, cand, "closure"):
                    candidates.append(cand)
    if not candidates:
        return True
    total = tuple(sum(c[i] for c in candidates) for i in range(3))
    return not (cone_contains(a, total, "interior")
                and cone_contains(b, total, "interior"))


# -- persistence -------------------------------------------------------------

_FORMAT = 1


def save_fan(fan: Fan) -> dict:
    cones = []
    for key, cone in sorted(fan.cones.items()):
        cones.append({
            "key": [list(r) for r in key],
            "g": [list(r) for r in cone.rays],
            "c": [list(r) for r in cone.normals],
            "word": list(fan.words[key]),
        })
    adjacency = sorted(
        [[[list(r) for r in k] for k in sorted(edge)]
         for edge in fan.adjacency]
    )
    return {
        "format": _FORMAT,
        "source": fan.source.to_json(),
        "depth": fan.depth,
        "cones": cones,
        "adjacency": adjacency,
    }


def load_fan(doc: dict) -> Fan:
    if doc.get("format") != _FORMAT:
        raise ValueError(f"unsupported fan document format {doc.get('format')}")
    source = ExchangeMatrix.from_json(doc["source"])
    cones: dict[Key, GCone] = {}
    words: dict[Key, tuple[int, ...]] = {}
    for entry in doc["cones"]:
        rays = tuple(tuple(int(x) for x in r) for r in entry["g"])
        normals = tuple(tuple(int(x) for x in r) for r in entry["c"])
        if det(transpose(rays)) not in (1, -1):
            raise ValueError(f"non-unimodular cone in document: {rays}")
        cone = GCone(rays, normals)
        key = cone.key
        if tuple(tuple(int(x) for x in r) for r in entry["key"]) != key:
            raise ValueError("cone key does not match its rays")
        cones[key] = cone
        words[key] = tuple(int(k) for k in entry["word"])
    adjacency = {
        frozenset((
            tuple(tuple(int(x) for x in r) for r in k1),
            tuple(tuple(int(x) for x in r) for r in k2),
        ))
        for k1, k2 in doc["adjacency"]
    }
    return Fan(source, int(doc["depth"]), cones, words, adjacency)


def save_fan_file(fan: Fan, path: str):
    with open(path, "w") as fh:
        json.dump(save_fan(fan), fh)


def load_fan_file(path: str) -> Fan:
    with open(path) as fh:
        return load_fan(json.load(fh))
