"""Acceptance gates, one test per criterion.

Each test asserts its criterion at full stated strength (exact equality,
zero tolerated violations, stated wall-clock ceilings) and then prints a
single machine-greppable line `criterion N PASS: ...` with the key
numbers. Run with `pytest tests/test_acceptance.py -v -s` to see the
lines; a failing criterion fails its test.
"""

import json
import math
import time
from fractions import Fraction
from random import Random

import pytest

from rainbowgraphs.checkers import (check_avg_degree_on_v_prime,
                                    check_degree_lemma,
                                    check_k_color_edge_bound,
                                    check_p5_edge_bound, run_suite,
                                    verify_construction)
from rainbowgraphs.colored_graph import is_properly_colored
from rainbowgraphs.constructions import d_star, lower_bound_graph
from rainbowgraphs.corpus import (rainbow_free_instances,
                                  random_colored_graph, random_proper_graph)
from rainbowgraphs.graph_io import result_to_dict, witness_line
from rainbowgraphs.rainbow import (enumerate_rainbow_cycles,
                                   enumerate_rainbow_paths, has_rainbow_path)
from rainbowgraphs.reference import (naive_rainbow_cycles,
                                     naive_rainbow_paths, naive_search)
from rainbowgraphs.search import (SearchProblem, solve,
                                  verify_extremal_regularity)

EXPECTED_CYCLE_COUNTS = {3: 4, 4: 24, 5: 192, 6: 1920}
GRID = [(n, ell, obj) for n in (2, 3, 4, 5) for ell in (3, 4)
        for obj in ("max_edges", "max_rainbow_cycles")]


def _gate(num: int, detail: str) -> None:
    print(f"criterion {num} PASS: {detail}")


@pytest.fixture(scope="module")
def proper_corpus():
    rng = Random(2024)
    graphs = [random_proper_graph(rng) for _ in range(1000)]
    graphs.extend(random_proper_graph(rng, dense=True) for _ in range(100))
    return graphs


@pytest.fixture(scope="module")
def free_corpus():
    return {ell: rainbow_free_instances(Random(900 + ell), ell, 500)
            for ell in (3, 4, 5)}


@pytest.fixture(scope="module")
def solve_grid():
    return {key: solve(SearchProblem(*key, all_optima=True)) for key in GRID}


@pytest.fixture(scope="module")
def archive_witnesses(solve_grid):
    """Every graph an exhaustive search run certified, keyed by the length
    parameter it is rainbow-path-free for."""
    archive = {3: [], 4: [], 5: []}
    for (n, ell, obj), res in solve_grid.items():
        archive[ell].extend(res.optima)
    archive[5].append(solve(SearchProblem(5, 5, "max_edges")).witness)
    return archive


def test_criterion_1_construction_suite():
    start = time.monotonic()
    for ell, expected in EXPECTED_CYCLE_COUNTS.items():
        report = verify_construction(ell)
        assert report.holds and not report.skipped
        assert report.observed_max == expected
        g = d_star(ell)
        assert is_properly_colored(g)
        assert not has_rainbow_path(g, ell)
        assert g.m == ell * (1 << (ell - 2))
        assert len(enumerate_rainbow_cycles(g, ell)) == expected
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    _gate(1, "construction suite holds for ell=3..6, cycle counts "
             f"4/24/192/1920, {elapsed:.2f}s")


def test_criterion_2_exact_extremal_values_at_n4():
    start = time.monotonic()
    edges = solve(SearchProblem(4, 3, "max_edges", all_optima=True))
    assert edges.exhaustive and edges.value == 6
    assert verify_extremal_regularity(edges, 3)
    cycles = solve(SearchProblem(4, 3, "max_rainbow_cycles", all_optima=True))
    assert cycles.exhaustive and cycles.value == 4
    assert verify_extremal_regularity(cycles, 3)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    _gate(2, "solve(4,3) gives 6 edges / 4 cycles, exhaustive, all optima "
             f"3-regular, {elapsed:.2f}s")


def test_criterion_3_declared_gaps_covered_by_construction_and_bounds():
    # Exhausting all 8-vertex (length 4) and 16-vertex (length 5) colored
    # graphs is declared out of desk-scale reach; the claimed equalities
    # are covered on the construction side (matching lower-bound counts
    # 3n and 12n) and on the bound side (the checker suites).
    g8 = lower_bound_graph(8, 4)
    assert len(enumerate_rainbow_cycles(g8, 4)) == 3 * 8
    assert not has_rainbow_path(g8, 4)
    g16 = lower_bound_graph(16, 5)
    assert len(enumerate_rainbow_cycles(g16, 5)) == 12 * 16
    assert not has_rainbow_path(g16, 5)
    assert all(r.holds for r in run_suite(g8, 4))
    assert all(r.holds for r in run_suite(g16, 5))
    _gate(3, "n=8 and n=16 exhaustion declared out of reach; construction "
             "counts 24=3n and 192=12n verified plus bound suites hold")


def test_criterion_4_per_edge_bound_on_random_proper_graphs(proper_corpus):
    assert len(proper_corpus) >= 1000
    checks = violations = 0
    for g in proper_corpus:
        k = g.num_colors
        for ell in range(3, min(k, g.n) + 1):
            report = check_k_color_edge_bound(g, ell)
            assert not report.skipped
            assert report.bound == math.perm(k - 1, ell - 1)
            checks += 1
            if not report.holds:
                violations += 1
    assert checks >= 1000
    assert violations == 0
    _gate(4, f"per-edge color-count bound: {checks} applicable (k,ell) "
             f"checks over {len(proper_corpus)} seeded proper graphs, "
             "0 violations")


def test_criterion_5_degree_bound_on_free_instances(free_corpus,
                                                    archive_witnesses):
    total = violations = 0
    for ell in (3, 4, 5):
        instances = free_corpus[ell] + archive_witnesses[ell]
        assert len(free_corpus[ell]) >= 500
        for g in instances:
            report = check_degree_lemma(g, ell)
            assert not report.skipped  # corpus graphs are free by filter
            total += 1
            if not report.holds:
                violations += 1
    assert violations == 0
    _gate(5, f"degree bound on cycle vertices: {total} rainbow-path-free "
             "instances (seeded corpora + search archives), 0 violations")


def test_criterion_6_per_edge_24_bound_tight_and_universal(free_corpus):
    tight = check_p5_edge_bound(d_star(5))
    assert tight.holds and tight.observed_max == 24 and tight.bound == 24
    violations = 0
    for g in free_corpus[5]:
        report = check_p5_edge_bound(g)
        assert not report.skipped
        if not report.holds:
            violations += 1
    assert violations == 0
    _gate(6, "length-5 per-edge bound: observed max exactly 24 on the "
             f"diagonal construction, 0 violations over {len(free_corpus[5])} "
             "free instances")


def test_criterion_7_average_degree_bound(free_corpus):
    equality = check_avg_degree_on_v_prime(d_star(5))
    assert equality.holds and not equality.skipped
    assert equality.observed_max == Fraction(5, 1)
    nonempty = violations = 0
    for g in free_corpus[5]:
        report = check_avg_degree_on_v_prime(g)
        if report.skipped:
            assert "no vertex" in report.reason
            continue
        nonempty += 1
        if not report.holds:
            violations += 1
    assert nonempty >= 100
    assert violations == 0
    _gate(7, "average degree over cycle vertices: exactly 5 on the diagonal "
             f"construction, 0 violations over {nonempty} instances with "
             "nonempty vertex set")


def test_criterion_8_oracle_equivalence(solve_grid):
    rng = Random(808)
    mismatches = 0
    graphs = [random_colored_graph(rng) for _ in range(120)]
    for g in graphs:
        for ell in (1, 2, 3, 4):
            fast = {(w.vertices, w.colors)
                    for w in enumerate_rainbow_paths(g, ell)}
            ref = {(w.vertices, w.colors) for w in naive_rainbow_paths(g, ell)}
            if fast != ref:
                mismatches += 1
        for ell in (3, 4, 5):
            fast = {(w.vertices, w.colors)
                    for w in enumerate_rainbow_cycles(g, ell)}
            ref = {(w.vertices, w.colors)
                   for w in naive_rainbow_cycles(g, ell)}
            if fast != ref:
                mismatches += 1
    assert mismatches == 0
    for key in GRID:
        best, _ = naive_search(*key)
        assert solve_grid[key].value == best
    _gate(8, f"enumeration equals naive oracle on {len(graphs)} graphs "
             "(n<=6, 7 length settings each) and solve equals unpruned "
             f"reference on all {len(GRID)} (n<=5, ell in 3..4) problems")


def test_criterion_9_byte_identical_across_thread_counts():
    digests = []
    for threads in (1, 2, 8):
        parts = []
        for n, ell, obj in ((4, 3, "max_edges"), (4, 3, "max_rainbow_cycles"),
                            (5, 3, "max_edges"), (5, 4, "max_rainbow_cycles")):
            res = solve(SearchProblem(n, ell, obj, all_optima=True,
                                      threads=threads))
            parts.append(json.dumps(result_to_dict(res), sort_keys=True))
        rng = Random(909)
        for _ in range(25):
            g = random_colored_graph(rng)
            parts.extend(witness_line(w)
                         for w in enumerate_rainbow_paths(g, 3, threads=threads))
            parts.extend(witness_line(w)
                         for w in enumerate_rainbow_cycles(g, 3, threads=threads))
        digests.append("\n".join(parts).encode())
    assert digests[0] == digests[1] == digests[2]
    _gate(9, "search results and witness listings byte-identical across "
             "1/2/8 worker threads "
             f"({len(digests[0])} bytes compared)")
