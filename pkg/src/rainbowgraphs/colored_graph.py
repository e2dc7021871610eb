"""Core representation of edge-colored graphs.

An :class:`EdgeColoredGraph` is an undirected simple graph on vertices
``0..n-1`` whose edges carry integer color ids. Colors are normalized to a
gapless range ``0..k-1`` at build time; all counting quantities in this
package are invariant under color renaming, so normalization loses nothing.

The module also provides the exact canonical form used for isomorph
rejection: two graphs receive the same key iff some vertex bijection
combined with some color bijection maps one onto the other. The
canonicalizer does full backtracking over vertex orderings with partition
refinement pruning, which is affordable at the sizes this toolkit targets
(n <= 10 for search workloads).
"""

from __future__ import annotations

from dataclasses import dataclass


class EdgeColoredGraph:
    """Immutable edge-colored graph.

    Attributes
    ----------
    n : int
        Vertex count; vertices are 0..n-1 and isolated vertices are allowed.
    edges : tuple[tuple[int, int, int], ...]
        Normalized edge list: each entry is (u, v, c) with u < v, sorted by
        (u, v), colors renumbered to 0..k-1 in order of first appearance.
    num_colors : int
        Number of distinct colors (k).
    """

    __slots__ = ("n", "edges", "num_colors", "_adj", "_nbr", "_cache")

    def __init__(self, n: int, edges: tuple[tuple[int, int, int], ...],
                 num_colors: int):
        # Not for direct use; go through build().
        self.n = n
        self.edges = edges
        self.num_colors = num_colors
        self._adj: list[list[tuple[int, int]]] | None = None
        self._nbr: list[dict[int, int]] | None = None
        self._cache: dict = {}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, color), sorted, built lazily."""
        if self._adj is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
            for u, v, c in self.edges:
                adj[u].append((v, c))
                adj[v].append((u, c))
            for row in adj:
                row.sort()
            self._adj = adj
        return self._adj

    @property
    def neighbor_colors(self) -> list[dict[int, int]]:
        """Per-vertex dict neighbor -> color, built lazily."""
        if self._nbr is None:
            nbr: list[dict[int, int]] = [{} for _ in range(self.n)]
            for u, v, c in self.edges:
                nbr[u][v] = c
                nbr[v][u] = c
            self._nbr = nbr
        return self._nbr

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return (f"EdgeColoredGraph(n={self.n}, m={self.m}, "
                f"colors={self.num_colors})")


@dataclass(frozen=True)
class ColorPartition:
    """A proper edge coloring as a partition of the edge set into matchings.

    ``classes[c]`` is the frozenset of (u, v) pairs carrying color c. The
    classes are disjoint, cover every edge, and each one is a matching;
    the last point is exactly properness.
    """

    classes: tuple[frozenset, ...]


def build(n: int, edge_list) -> EdgeColoredGraph:
    """Validate and normalize an edge list into an EdgeColoredGraph.

    Colors are renumbered to 0..k-1 preserving equality classes, in order
    of first appearance along the sorted edge list. Raises ValueError on
    loops, duplicate pairs (same unordered pair, any colors), vertices out
    of range, or malformed entries.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    cleaned = []
    seen_pairs = set()
    for entry in edge_list:
        try:
            u, v, c = entry
        except (TypeError, ValueError):
            raise ValueError(f"edge entry must be a (u, v, c) triple: {entry!r}")
        if not (isinstance(u, int) and isinstance(v, int) and isinstance(c, int)):
            raise ValueError(f"edge entry must contain integers: {entry!r}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range 0..{n - 1} in edge {entry!r}")
        if u > v:
            u, v = v, u
        if (u, v) in seen_pairs:
            raise ValueError(f"duplicate edge pair ({u}, {v})")
        seen_pairs.add((u, v))
        cleaned.append((u, v, c))
    cleaned.sort()
    remap: dict[int, int] = {}
    normalized = []
    for u, v, c in cleaned:
        if c not in remap:
            remap[c] = len(remap)
        normalized.append((u, v, remap[c]))
    return EdgeColoredGraph(n, tuple(normalized), len(remap))


def degree(g: EdgeColoredGraph, v: int) -> int:
    """Number of edges incident to v. Raises ValueError if v out of range."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    return len(g.adjacency[v])


def is_properly_colored(g: EdgeColoredGraph) -> bool:
    """True iff no two edges sharing a vertex carry the same color."""
    cached = g._cache.get("proper")
    if cached is None:
        cached = True
        for row in g.adjacency:
            colors = [c for _, c in row]
            if len(set(colors)) != len(colors):
                cached = False
                break
        g._cache["proper"] = cached
    return cached


def color_partition(g: EdgeColoredGraph) -> ColorPartition:
    """Partition the edges into their color classes (all matchings).

    Raises ValueError if g is not properly colored.
    """
    if not is_properly_colored(g):
        raise ValueError("graph is not properly colored")
    classes: list[set] = [set() for _ in range(g.num_colors)]
    for u, v, c in g.edges:
        classes[c].add((u, v))
    return ColorPartition(tuple(frozenset(s) for s in classes))


# ---------------------------------------------------------------------------
# Canonical form


def _refined_ranks(g: EdgeColoredGraph) -> list[int]:
    """Iterated refinement of vertex classes, invariant under vertex and
    color permutations. Color identity enters only through class sizes."""
    n = g.n
    adj = g.adjacency
    class_size = [0] * g.num_colors
    for _, _, c in g.edges:
        class_size[c] += 1
    sig: list = [tuple(sorted(class_size[c] for _, c in adj[v]))
                 for v in range(n)]
    order = {s: i for i, s in enumerate(sorted(set(sig)))}
    rank = [order[s] for s in sig]
    distinct = len(order)
    while True:
        sig = [(rank[v],
                tuple(sorted((rank[u], class_size[c]) for u, c in adj[v])))
               for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new_rank = [order[s] for s in sig]
        if len(order) == distinct:
            return new_rank
        distinct = len(order)
        rank = new_rank


def _canonical_code(g: EdgeColoredGraph) -> list[tuple[int, ...]]:
    """Minimal edge-matrix code over all allowed vertex orderings.

    Row i encodes adjacency of the i-th placed vertex to the previously
    placed ones: cell j is 0 for a non-edge, otherwise 1 + color slot,
    slots assigned in order of first appearance along the code. Allowed
    orderings respect the refined vertex partition (cells in rank order),
    which is itself isomorphism-invariant, so the minimum is a complete
    invariant. Vertices with identical labeled adjacency are automorphic
    swaps and only the smallest is branched on.
    """
    n = g.n
    if n == 0:
        return []
    rank = _refined_ranks(g)
    nbr = g.neighbor_colors
    # exact-adjacency signature for the interchangeable-vertex prune
    vsig = [tuple(sorted(nbr[v].items())) for v in range(n)]
    ncells = max(rank) + 1
    cells: list[list[int]] = [[] for _ in range(ncells)]
    for v in range(n):
        cells[rank[v]].append(v)

    order: list[int] = []
    placed = [False] * n
    slot = [-1] * max(g.num_colors, 1)
    next_slot = [0]
    rows: list[tuple[int, ...]] = []
    best: list[tuple[int, ...]] | None = None

    def rec(i: int, tight: bool) -> bool:
        nonlocal best
        if i == n:
            best = list(rows)
            return True
        cell = next(cl for cl in cells if any(not placed[v] for v in cl))
        updated = False
        seen_sigs = set()
        for v in cell:
            if placed[v]:
                continue
            if vsig[v] in seen_sigs:
                continue
            seen_sigs.add(vsig[v])
            row = []
            assigned = []
            vn = nbr[v]
            for j in range(i):
                c = vn.get(order[j], -1)
                if c < 0:
                    row.append(0)
                else:
                    if slot[c] < 0:
                        slot[c] = next_slot[0]
                        next_slot[0] += 1
                        assigned.append(c)
                    row.append(1 + slot[c])
            row_t = tuple(row)
            child_tight = False
            if tight and best is not None:
                ref = best[i]
                if row_t > ref:
                    for c in assigned:
                        slot[c] = -1
                    next_slot[0] -= len(assigned)
                    continue
                child_tight = row_t == ref
            placed[v] = True
            order.append(v)
            rows.append(row_t)
            if rec(i + 1, child_tight):
                updated = True
                tight = True
            rows.pop()
            order.pop()
            placed[v] = False
            for c in assigned:
                slot[c] = -1
            next_slot[0] -= len(assigned)
        return updated

    rec(0, True)
    assert best is not None
    return best


def canonical_form(g: EdgeColoredGraph):
    """Return (key, canonically relabeled graph).

    The key is an opaque hashable value; equal keys mean a vertex bijection
    plus a color bijection maps one graph onto the other. The relabeled
    graph is the canonical representative itself, identical bytes for every
    member of an isomorphism class. Requires a properly colored input.
    """
    if not is_properly_colored(g):
        raise ValueError("canonical form requires a properly colored graph")
    cached = g._cache.get("canon")
    if cached is None:
        code = _canonical_code(g)
        flat = []
        edges = []
        for i, row in enumerate(code):
            flat.extend(row)
            for j, cell in enumerate(row):
                if cell:
                    edges.append((j, i, cell - 1))
        key = (g.n, g.num_colors, tuple(flat))
        cached = (key, build(g.n, edges))
        g._cache["canon"] = cached
    return cached


def canonical_key(g: EdgeColoredGraph):
    """Opaque isomorphism-class key (vertex bijection + color bijection)."""
    return canonical_form(g)[0]
