"""Connected simple graphs for sweep checks.

Representatives of isomorphism classes are grown edge by edge: every
connected graph with e edges arises from one with e-1 edges by adding an
edge between existing vertices or hanging a new leaf.  Candidates are
deduplicated by a canonical relabeling (minimum edge list over all
degree-preserving vertex permutations).
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .matroid import GraphInput


def canonical_code(n_vertices, edges):
    """Minimum sorted edge tuple over a complete set of relabelings.

    Vertices are 0-based.  Isomorphisms preserve degree, so each degree class
    is assigned a fixed block of target labels (classes ordered by degree)
    and only within-block placements are searched.
    """
    deg = [0] * n_vertices
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    classes = {}
    for v in range(n_vertices):
        classes.setdefault(deg[v], []).append(v)
    class_list = [classes[d] for d in sorted(classes)]
    offsets = []
    at = 0
    for members in class_list:
        offsets.append(at)
        at += len(members)
    best = None
    for perms in product(*(permutations(members) for members in class_list)):
        mapping = {}
        for off, perm in zip(offsets, perms):
            for pos, src in enumerate(perm):
                mapping[src] = off + pos
        code = tuple(sorted(
            (min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
            for u, v in edges))
        if best is None or code < best:
            best = code
    return best


def connected_graph_representatives(max_edges):
    """One GraphInput per isomorphism class of connected graphs with 1 to
    max_edges edges, ordered by edge count then canonical code."""
    single_vertex = (1, ())
    layer = {(): single_vertex}
    out = []
    for _ in range(max_edges):
        grown = {}
        for nv, edges in layer.values():
            adjacent = set(edges)
            for u, v in combinations(range(nv), 2):
                if (u, v) not in adjacent:
                    cand = edges + ((u, v),)
                    grown.setdefault(canonical_code(nv, cand), (nv, cand))
            for u in range(nv):
                cand = edges + ((u, nv),)
                grown.setdefault(canonical_code(nv + 1, cand), (nv + 1, cand))
        layer = grown
        for code in sorted(grown):
            nv, _ = grown[code]
            out.append(GraphInput(nv, tuple((u + 1, v + 1) for u, v in code)))
    return out


def random_connected_graph(rng, max_edges=9):
    """Seeded random connected simple graph with at most max_edges edges.

    A random attachment tree guarantees connectivity; leftover edge budget is
    spent on uniformly chosen missing pairs.
    """
    nv = rng.randint(2, min(10, max_edges + 1))
    m = rng.randint(nv - 1, min(max_edges, nv * (nv - 1) // 2))
    edges = set()
    for v in range(2, nv + 1):
        u = rng.randint(1, v - 1)
        edges.add((u, v))
    missing = [(u, v) for u, v in combinations(range(1, nv + 1), 2)
               if (u, v) not in edges]
    extra = rng.sample(missing, m - len(edges))
    edges.update(extra)
    return GraphInput(nv, tuple(sorted(edges)))


def seeded_rng(seed):
    return random.Random(seed)
