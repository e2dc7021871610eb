"""Executable verifiers for per-edge and per-vertex rainbow-cycle bounds.

Each checker pairs a hypothesis with a conclusion and emits a structured
CheckReport. Hypotheses are verified, not assumed: a graph that violates
one (improper coloring, a rainbow path of the forbidden length, an empty
vertex set V') yields a `skipped` report with a reason, never a failure,
because the underlying statements say nothing about such graphs. Skipped
reports carry holds=True vacuously.

The quantities checked, for a properly colored graph g and length ell:

* per-edge count f(e): rainbow cycles of length ell through edge e is at
  most (k-1)!/(k-ell)! when k colors are used, and at most
  (2*ell-3)^(ell-2) whenever g has no rainbow path of length ell
  (specialized to 4! = 24 for ell = 5);
* every vertex on a rainbow cycle has degree at most 2*ell-3 under the
  same freeness hypothesis (at most 7 for ell = 5);
* for ell = 5 the average degree over V' (vertices on at least one
  rainbow 5-cycle) is at most 5 — compared in exact rational arithmetic
  (2*sum(d) <= 10*|V'|) to avoid float ties at the boundary.

Checkers never mutate the input graph, and failing reports carry the
extremal witnesses so `holds` can be recomputed from the report plus the
host graph alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .colored_graph import EdgeColoredGraph, degree, is_properly_colored
from .constructions import d_star
from .rainbow import (count_per_edge, enumerate_rainbow_cycles,
                      has_rainbow_path, vertices_on_rainbow_cycles)


@dataclass(frozen=True)
class CheckReport:
    """Structured verdict of one checker on one graph."""

    check_name: str
    holds: bool
    bound: object = None
    observed_max: object = None
    witnesses: tuple = ()
    skipped: bool = False
    reason: str | None = None


def _skipped(name: str, reason: str) -> CheckReport:
    return CheckReport(name, holds=True, skipped=True, reason=reason)


def _max_edge_counts(g: EdgeColoredGraph, ell: int):
    counts = count_per_edge(g, ell)
    observed = max(counts.values(), default=0)
    witnesses = tuple(sorted(e for e, c in counts.items() if c == observed)) \
        if observed > 0 else ()
    return observed, witnesses


def _max_degree_on(g: EdgeColoredGraph, vertices) -> tuple[int, tuple]:
    if not vertices:
        return 0, ()
    degs = {v: degree(g, v) for v in vertices}
    observed = max(degs.values())
    return observed, tuple(sorted(v for v, d in degs.items() if d == observed))


def check_k_color_edge_bound(g: EdgeColoredGraph, ell: int) -> CheckReport:
    """Per-edge rainbow-C_ell count against (k-1)!/(k-ell)! for a proper
    coloring with k colors. Vacuous (skipped) when k < ell."""
    name = "k_color_edge_bound"
    if ell < 3:
        raise ValueError(f"cycle length must be >= 3, got {ell}")
    if not is_properly_colored(g):
        return _skipped(name, "coloring is not proper")
    k = g.num_colors
    if k < ell:
        return _skipped(name, f"only {k} colors in use; "
                              f"no rainbow cycle with {ell} edges can exist")
    bound = math.perm(k - 1, ell - 1)
    observed, witnesses = _max_edge_counts(g, ell)
    return CheckReport(name, observed <= bound, bound, observed, witnesses)


def check_degree_lemma(g: EdgeColoredGraph, ell: int) -> CheckReport:
    """Degrees of vertices on rainbow C_ell copies against 2*ell-3, under
    the hypothesis that g has no rainbow P_ell."""
    name = "degree_on_cycle_vertices"
    if ell < 3:
        raise ValueError(f"cycle length must be >= 3, got {ell}")
    if not is_properly_colored(g):
        return _skipped(name, "coloring is not proper")
    if has_rainbow_path(g, ell):
        return _skipped(name, f"graph contains a rainbow path with {ell} edges")
    bound = 2 * ell - 3
    observed, witnesses = _max_degree_on(g, vertices_on_rainbow_cycles(g, ell))
    return CheckReport(name, observed <= bound, bound, observed, witnesses)


def check_general_upper_per_edge(g: EdgeColoredGraph, ell: int) -> CheckReport:
    """Per-edge rainbow-C_ell count against (2*ell-3)^(ell-2), under the
    no-rainbow-P_ell hypothesis."""
    name = "general_upper_per_edge"
    if ell < 3:
        raise ValueError(f"cycle length must be >= 3, got {ell}")
    if not is_properly_colored(g):
        return _skipped(name, "coloring is not proper")
    if has_rainbow_path(g, ell):
        return _skipped(name, f"graph contains a rainbow path with {ell} edges")
    bound = (2 * ell - 3) ** (ell - 2)
    observed, witnesses = _max_edge_counts(g, ell)
    return CheckReport(name, observed <= bound, bound, observed, witnesses)


def check_p5_edge_bound(g: EdgeColoredGraph) -> CheckReport:
    """Per-edge rainbow-C_5 count against 4! = 24 in rainbow-P_5-free
    graphs; tight on the diagonal construction."""
    name = "p5_edge_bound"
    if not is_properly_colored(g):
        return _skipped(name, "coloring is not proper")
    if has_rainbow_path(g, 5):
        return _skipped(name, "graph contains a rainbow path with 5 edges")
    observed, witnesses = _max_edge_counts(g, 5)
    return CheckReport(name, observed <= 24, 24, observed, witnesses)


def check_avg_degree_on_v_prime(g: EdgeColoredGraph) -> CheckReport:
    """Average degree over V' (vertices on rainbow 5-cycles) against 5,
    in exact rational arithmetic."""
    name = "avg_degree_on_v_prime"
    if not is_properly_colored(g):
        return _skipped(name, "coloring is not proper")
    if has_rainbow_path(g, 5):
        return _skipped(name, "graph contains a rainbow path with 5 edges")
    vprime = vertices_on_rainbow_cycles(g, 5)
    if not vprime:
        return _skipped(name, "no vertex lies on a rainbow cycle with 5 edges")
    total = sum(degree(g, v) for v in vprime)
    holds = 2 * total <= 10 * len(vprime)
    return CheckReport(name, holds, 5, Fraction(total, len(vprime)),
                       tuple(sorted(vprime)))


def check_p5_max_degree(g: EdgeColoredGraph) -> CheckReport:
    """Maximum degree over V' against 7 for ell = 5; the length-5
    specialization of the degree check, kept separate for report naming."""
    name = "p5_max_degree"
    if not is_properly_colored(g):
        return _skipped(name, "coloring is not proper")
    if has_rainbow_path(g, 5):
        return _skipped(name, "graph contains a rainbow path with 5 edges")
    vprime = vertices_on_rainbow_cycles(g, 5)
    if not vprime:
        return _skipped(name, "no vertex lies on a rainbow cycle with 5 edges")
    observed, witnesses = _max_degree_on(g, vprime)
    return CheckReport(name, observed <= 7, 7, observed, witnesses)


def verify_construction(ell: int) -> CheckReport:
    """Full self-check of d_star(ell): properly colored, no rainbow path
    of length ell, ell * 2^(ell-2) edges, exactly (ell-1)! * 2^(ell-2)
    rainbow cycles of length ell, and every such cycle through exactly one
    diagonal edge. Supported for 3 <= ell <= 7."""
    name = "construction_suite"
    if not (3 <= ell <= 7):
        raise ValueError(f"parameter must be in 3..7, got {ell}")
    g = d_star(ell)
    expected_cycles = math.factorial(ell - 1) * (1 << (ell - 2))
    expected_edges = ell * (1 << (ell - 2))
    cycles = enumerate_rainbow_cycles(g, ell)
    diag = g.neighbor_colors[0][(1 << (ell - 1)) - 1]
    offenders = tuple(w for w in cycles if w.colors.count(diag) != 1)
    holds = (is_properly_colored(g)
             and not has_rainbow_path(g, ell)
             and g.m == expected_edges
             and len(cycles) == expected_cycles
             and not offenders)
    return CheckReport(name, holds, expected_cycles, len(cycles), offenders)


def run_suite(g: EdgeColoredGraph, ell: int) -> list[CheckReport]:
    """All checkers applicable at the given length, in a fixed order."""
    reports = [
        check_k_color_edge_bound(g, ell),
        check_degree_lemma(g, ell),
        check_general_upper_per_edge(g, ell),
    ]
    if ell == 5:
        reports.extend([
            check_p5_edge_bound(g),
            check_p5_max_degree(g),
            check_avg_degree_on_v_prime(g),
        ])
    return reports
