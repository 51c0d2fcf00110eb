import math

import pytest

import subcount as sc


@pytest.fixture
def triangle():
    return sc.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p3():
    return sc.TemplateTree.from_edges(3, [(0, 1), (1, 2)])


def test_graph_basics(triangle):
    assert triangle.n == 3
    assert triangle.m == 3
    assert triangle.neighbors(0) == [1, 2]
    triangle.validate()
    stats = sc.degree_stats(triangle)
    assert stats.min_degree == stats.max_degree == 2


def test_rmat_deterministic(tmp_path):
    g1 = sc.rmat_generate(scale=8, edges=512, seed=7)
    g2 = sc.rmat_generate(scale=8, edges=512, seed=7)
    assert g1.m == g2.m
    path = tmp_path / "g.el"
    sc.save_edge_list(g1, str(path))
    loaded, dropped = sc.load_edge_list(str(path))
    assert dropped == 0
    assert loaded.m == g1.m


def test_template_and_partition(p3):
    assert p3.t == 3
    assert sc.count_automorphisms(p3) == 2
    plan = sc.partition_template(p3)
    assert len(plan.subtemplates) == 5
    assert plan.subtemplates[plan.top_index].vertex_mask == 0b111


def test_estimate_matches_truth(triangle, p3):
    truth = sc.brute_force_embeddings(triangle, p3) / sc.count_automorphisms(p3)
    est = sc.estimate(triangle, p3, iterations=2000, threads=2, seed=1)
    assert est.stderr > 0
    assert abs(est.value - truth) <= 3 * est.stderr


def test_distributed_matches_single(triangle, p3):
    single = sc.estimate(triangle, p3, iterations=5, seed=9)
    for workers in (1, 2, 3):
        dist = sc.distributed_estimate(triangle, p3, workers, iterations=5, seed=9)
        assert dist.estimate.per_iteration == single.per_iteration


def test_peak_memory(triangle, p3):
    assert sc.estimate_peak_memory(triangle, p3) == 3 * 9 * 8


def test_scaling_report(triangle, p3):
    report = sc.run_scaling(triangle, p3, [1, 2], repeat=2, seed=0)
    rows = report.rows
    assert len(rows) == 2
    assert rows[0].speedup == 1.0
    assert rows[0].efficiency == 1.0
    assert rows[0].checksum == rows[1].checksum
    for threads, eff in sc.efficiency_series(report):
        assert math.isfinite(eff)
