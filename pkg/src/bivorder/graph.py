"""Simple graphs, their connected-partition flats, and acyclic orientations.

A flat is a partition of the vertex set into blocks that each induce a
connected subgraph, together with the quotient simple graph obtained by
contracting every block.  Quotient vertices coming from blocks of size
two or more are the contracted ones; they become the celeste elements
of the posets an acyclic orientation of the quotient gives rise to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .poset import BicoloredPoset, build_poset

MAX_ORIENTATION_EDGES = 20


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("graph size must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) must satisfy 0 <= u < v < n")

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def build_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Normalize edges to (min, max) pairs; loops, duplicates, and
    out-of-range endpoints are errors."""
    if n < 0:
        raise ValueError("graph size must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop ({u}, {u}) not allowed")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(seen))


# JSON form: {"n": int, "edges": [[u, v], ...]}


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_json(data: dict) -> Graph:
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError("graph JSON must be an object with an 'n' field")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("graph field 'n' must be an integer")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ValueError("graph field 'edges' must be a list")
    edges = []
    for item in raw_edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise ValueError(f"edge {item!r} must be a pair of integers")
        edges.append((item[0], item[1]))
    return build_graph(n, edges)


@dataclass(frozen=True)
class Flat:
    """A connected partition of a graph with its contracted quotient."""

    blocks: tuple[tuple[int, ...], ...]
    quotient: Graph
    contracted: frozenset[int]


def _restricted_growth_strings(n: int):
    # digits[i] <= max(digits[:i]) + 1; lexicographic order
    digits = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield tuple(digits)
            return
        for d in range(mx + 2):
            digits[i] = d
            yield from rec(i + 1, max(mx, d))

    if n == 0:
        yield ()
    else:
        yield from rec(1, 0)


def _block_connected(block: tuple[int, ...], adj: list[set[int]]) -> bool:
    if len(block) <= 1:
        return True
    inside = set(block)
    seen = {block[0]}
    stack = [block[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == inside


@lru_cache(maxsize=None)
def flats(G: Graph) -> tuple[Flat, ...]:
    """All partitions of the vertices into connected blocks, each with its
    quotient; deterministic order (lexicographic block assignment)."""
    adj = G.adjacency()
    out: list[Flat] = []
    for rgs in _restricted_growth_strings(G.n):
        nb = max(rgs) + 1 if rgs else 0
        blocks: list[list[int]] = [[] for _ in range(nb)]
        for v, d in enumerate(rgs):
            blocks[d].append(v)
        block_tuples = tuple(tuple(b) for b in blocks)
        if not all(_block_connected(b, adj) for b in block_tuples):
            continue
        qedges = set()
        for u, v in G.edges:
            bu, bv = rgs[u], rgs[v]
            if bu != bv:
                qedges.add((min(bu, bv), max(bu, bv)))
        quotient = Graph(nb, frozenset(qedges))
        contracted = frozenset(i for i, b in enumerate(block_tuples) if len(b) >= 2)
        out.append(Flat(block_tuples, quotient, contracted))
    return tuple(out)


def trivial_flat(G: Graph) -> Flat:
    """The all-singletons flat; its quotient is the graph itself."""
    blocks = tuple((v,) for v in range(G.n))
    return Flat(blocks, Graph(G.n, G.edges), frozenset())


@dataclass(frozen=True)
class AcyclicOrientation:
    """One direction (tail, head) per edge, listed in sorted edge order."""

    directed_edges: tuple[tuple[int, int], ...]


def is_acyclic(n: int, directed_edges: Iterable[tuple[int, int]]) -> bool:
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in directed_edges:
        succ[a].append(b)
        indeg[b] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == n


@lru_cache(maxsize=None)
def acyclic_orientations(H: Graph) -> tuple[AcyclicOrientation, ...]:
    """All acyclic orientations, enumerated as lexicographic direction
    vectors over the sorted edge list and filtered for acyclicity."""
    edges = H.sorted_edges()
    if len(edges) > MAX_ORIENTATION_EDGES:
        raise ValueError(
            f"{len(edges)} edges exceeds the orientation enumeration limit "
            f"of {MAX_ORIENTATION_EDGES}"
        )
    out = []
    for dirs in itertools.product((0, 1), repeat=len(edges)):
        directed = tuple(
            (u, v) if d == 0 else (v, u) for (u, v), d in zip(edges, dirs)
        )
        if is_acyclic(H.n, directed):
            out.append(AcyclicOrientation(directed))
    return tuple(out)


def orientation_to_poset(flat: Flat, orientation: AcyclicOrientation) -> BicoloredPoset:
    """Transitive closure of the directed quotient edges, with the
    contracted quotient vertices celeste."""
    return build_poset(
        flat.quotient.n, orientation.directed_edges, flat.contracted
    )
