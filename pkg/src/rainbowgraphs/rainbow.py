"""Enumeration and counting of rainbow paths and rainbow cycles.

A rainbow subgraph has pairwise distinct edge colors. P_ell denotes the
path with ell edges (ell+1 vertices), C_ell the cycle with ell edges.
Enumeration is a DFS over vertices with a color bitmask and works on any
colored graph, proper or not; properness is only a hypothesis of the
checker module.

Witnesses are canonicalized so each subgraph copy appears exactly once:
paths are stored with the lexicographically smaller endpoint first, cycles
with their minimal vertex first followed by the lexicographically smaller
of the two directions. Results are sorted before return, so output is
deterministic regardless of worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .colored_graph import EdgeColoredGraph

#: Hard limit on the length parameter: the color bitmask of a rainbow
#: subgraph must fit a machine word.
MAX_LEN = 62


@dataclass(frozen=True)
class RainbowWitness:
    """A concrete rainbow path or cycle in a host graph.

    For a path, colors[i] is the color of edge (vertices[i], vertices[i+1])
    and len(colors) == len(vertices) - 1. For a cycle, colors[i] is the
    color of edge (vertices[i], vertices[(i+1) % len]) and
    len(colors) == len(vertices).
    """

    kind: str
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def edge_set(self) -> frozenset:
        vs = self.vertices
        pairs = [tuple(sorted((vs[i], vs[i + 1]))) for i in range(len(vs) - 1)]
        if self.kind == "cycle":
            pairs.append(tuple(sorted((vs[-1], vs[0]))))
        return frozenset(pairs)


def _check_len(ell: int, low: int) -> None:
    if ell < low:
        raise ValueError(f"length parameter must be >= {low}, got {ell}")
    if ell > MAX_LEN:
        raise ValueError(
            f"length parameter {ell} exceeds the bitmask limit {MAX_LEN}")


def canonical_cycle(vertices, colors) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rotate/reflect a cycle sequence to canonical orientation."""
    k = len(vertices)
    best = None
    for start in range(k):
        for step in (1, -1):
            vs = tuple(vertices[(start + step * i) % k] for i in range(k))
            if step == 1:
                cs = tuple(colors[(start + i) % k] for i in range(k))
            else:
                cs = tuple(colors[(start - 1 - i) % k] for i in range(k))
            if best is None or (vs, cs) < best:
                best = (vs, cs)
    return best


def canonical_path(vertices, colors) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Orient a path sequence so the smaller endpoint comes first."""
    vs = tuple(vertices)
    cs = tuple(colors)
    if vs[0] > vs[-1]:
        vs = vs[::-1]
        cs = cs[::-1]
    return vs, cs


def verify_witness(g: EdgeColoredGraph, w: RainbowWitness) -> bool:
    """Re-check a witness against its host graph: adjacency, stated colors,
    rainbowness, simplicity, and canonical orientation."""
    vs, cs = w.vertices, w.colors
    if len(set(vs)) != len(vs):
        return False
    if any(not (0 <= v < g.n) for v in vs):
        return False
    nbr = g.neighbor_colors
    if w.kind == "path":
        if len(vs) < 2 or len(cs) != len(vs) - 1:
            return False
        pairs = list(zip(vs, vs[1:], cs))
        if (vs, cs) != canonical_path(vs, cs):
            return False
    elif w.kind == "cycle":
        if len(vs) < 3 or len(cs) != len(vs):
            return False
        pairs = [(vs[i], vs[(i + 1) % len(vs)], cs[i]) for i in range(len(vs))]
        if (vs, cs) != canonical_cycle(vs, cs):
            return False
    else:
        return False
    if len(set(cs)) != len(cs):
        return False
    return all(nbr[a].get(b) == c for a, b, c in pairs)


def _paths_from_root(g: EdgeColoredGraph, s: int, ell: int) -> list:
    adj = g.adjacency
    found = []
    path = [s]
    on_path = {s}

    def go(v: int, cmask: int, cols: list) -> None:
        if len(cols) == ell:
            if path[-1] > s:
                found.append((tuple(path), tuple(cols)))
            return
        for u, c in adj[v]:
            if u in on_path or cmask >> c & 1:
                continue
            path.append(u)
            on_path.add(u)
            cols.append(c)
            go(u, cmask | 1 << c, cols)
            cols.pop()
            on_path.discard(u)
            path.pop()

    go(s, 0, [])
    return found


def _cycles_from_root(g: EdgeColoredGraph, r: int, ell: int) -> list:
    adj = g.adjacency
    nbr = g.neighbor_colors[r]
    found = []
    path = [r]
    on_path = {r}

    def go(v: int, cmask: int, cols: list) -> None:
        if len(path) == ell:
            if path[1] < path[-1]:
                c = nbr.get(v)
                if c is not None and not cmask >> c & 1:
                    found.append((tuple(path), tuple(cols) + (c,)))
            return
        for u, c in adj[v]:
            if u <= r or u in on_path or cmask >> c & 1:
                continue
            path.append(u)
            on_path.add(u)
            cols.append(c)
            go(u, cmask | 1 << c, cols)
            cols.pop()
            on_path.discard(u)
            path.pop()

    go(r, 0, [])
    return found


def _over_roots(worker, g: EdgeColoredGraph, ell: int, threads: int) -> list:
    roots = range(g.n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(lambda s: worker(g, s, ell), roots)
            out = [w for chunk in chunks for w in chunk]
    else:
        out = [w for s in roots for w in worker(g, s, ell)]
    out.sort()
    return out


def enumerate_rainbow_paths(g: EdgeColoredGraph, ell: int,
                            threads: int = 1) -> list[RainbowWitness]:
    """All rainbow paths with exactly ell edges, one witness per copy."""
    _check_len(ell, 1)
    raw = _over_roots(_paths_from_root, g, ell, threads)
    return [RainbowWitness("path", vs, cs) for vs, cs in raw]


def enumerate_rainbow_cycles(g: EdgeColoredGraph, ell: int,
                             threads: int = 1) -> list[RainbowWitness]:
    """All rainbow cycles with exactly ell edges, one witness per copy.

    Results are cached on the graph (immutable), so repeated checker calls
    share one enumeration.
    """
    _check_len(ell, 3)
    cached = g._cache.get(("cycles", ell))
    if cached is None:
        cached = _over_roots(_cycles_from_root, g, ell, threads)
        g._cache[("cycles", ell)] = cached
    return [RainbowWitness("cycle", vs, cs) for vs, cs in cached]


def has_rainbow_path(g: EdgeColoredGraph, ell: int) -> bool:
    """True iff some rainbow path with exactly ell edges exists."""
    _check_len(ell, 1)
    cached = g._cache.get(("haspath", ell))
    if cached is not None:
        return cached
    adj = g.adjacency

    def grow(v: int, on_path: set, cmask: int, depth: int) -> bool:
        if depth == ell:
            return True
        for u, c in adj[v]:
            if u in on_path or cmask >> c & 1:
                continue
            on_path.add(u)
            if grow(u, on_path, cmask | 1 << c, depth + 1):
                return True
            on_path.discard(u)
        return False

    result = any(grow(s, {s}, 0, 0) for s in range(g.n))
    g._cache[("haspath", ell)] = result
    return result


def count_per_edge(g: EdgeColoredGraph, ell: int) -> dict[tuple[int, int], int]:
    """Map each edge (u, v) of g to f(e), the number of rainbow C_ell
    witnesses containing it. Every edge appears, with 0 when absent from
    all cycles."""
    counts = {(u, v): 0 for u, v, _ in g.edges}
    for w in enumerate_rainbow_cycles(g, ell):
        for pair in w.edge_set():
            counts[pair] += 1
    return counts


def rainbow_paths_between(g: EdgeColoredGraph, x: int, y: int, ell: int,
                          forbidden=frozenset()) -> list[RainbowWitness]:
    """Rainbow paths from x to y with exactly ell edges avoiding all colors
    in `forbidden`."""
    _check_len(ell, 1)
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("endpoint out of range")
    if x == y:
        raise ValueError("endpoints must differ")
    banned = frozenset(forbidden)
    adj = g.adjacency
    found = []
    path = [x]
    on_path = {x}

    def go(v: int, cmask: int, cols: list) -> None:
        if len(cols) == ell:
            if v == y:
                found.append(canonical_path(path, cols))
            return
        for u, c in adj[v]:
            if u in on_path or c in banned or cmask >> c & 1:
                continue
            if u == y and len(cols) + 1 < ell:
                continue  # y may only be the final vertex
            path.append(u)
            on_path.add(u)
            cols.append(c)
            go(u, cmask | 1 << c, cols)
            cols.pop()
            on_path.discard(u)
            path.pop()

    go(x, 0, [])
    found.sort()
    return [RainbowWitness("path", vs, cs) for vs, cs in found]


def vertices_on_rainbow_cycles(g: EdgeColoredGraph, ell: int) -> set[int]:
    """V': the set of vertices lying on at least one rainbow C_ell."""
    out: set[int] = set()
    for w in enumerate_rainbow_cycles(g, ell):
        out.update(w.vertices)
    return out
