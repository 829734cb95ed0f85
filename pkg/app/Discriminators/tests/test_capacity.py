import numpy as np
import pytest

from Discriminators.capacity_feature.vc import (
    graph_vc_dim,
    is_shattered,
    restriction_count,
    sauer_bound,
    vc_dim,
)
from Discriminators.constructions_feature.graphs import collision_graph
from Discriminators.core_feature.classes import (
    all_hypergraphs_class,
    power_set_class,
    random_class,
    singleton_class,
    threshold_class,
)
from Discriminators.core_feature.hypergraph import DistinguishingClass, Hypergraph
from Discriminators.core_feature.universe import VertexUniverse
from Discriminators.tests.conftest import tuple_vc


# ---- 1. hand-derivable capacities ----

def test_single_member_class_has_dimension_zero():
    u = VertexUniverse(5)
    c = DistinguishingClass.of([Hypergraph.from_vertex_set(u, [1, 3])])
    assert vc_dim(c).dimension == 0
    assert vc_dim(c).witness == ()


def test_singleton_indicators_have_dimension_one():
    report = vc_dim(singleton_class(VertexUniverse(5)))
    assert report.dimension == 1
    assert len(report.witness) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_power_set_dimension_is_universe_size(n):
    report = vc_dim(power_set_class(VertexUniverse(n)))
    assert report.dimension == n
    assert report.witness == tuple(range(n))


def test_thresholds_have_dimension_one():
    assert vc_dim(threshold_class(VertexUniverse(6))).dimension == 1


def test_all_pair_graphs_on_three_vertices():
    report = graph_vc_dim(all_hypergraphs_class(VertexUniverse(3), 2))
    assert report.dimension == 3
    assert report.pins == (0,)


def test_collision_class_has_graph_dimension_zero():
    c = DistinguishingClass.of([collision_graph(VertexUniverse(4), 2)])
    assert graph_vc_dim(c).dimension == 0


def test_graph_vc_of_arity_one_is_vc():
    c = threshold_class(VertexUniverse(4))
    assert graph_vc_dim(c) == vc_dim(c)


def test_single_graph_has_graph_dimension_zero():
    rng = np.random.default_rng(21)
    for k in (1, 2, 3):
        for n in (1, 2, 3, 4):
            c = random_class(VertexUniverse(n), k, 1, seed=rng)
            report = graph_vc_dim(c)
            assert report.dimension == 0
            assert len(report.pins) == k - 1


def test_removing_a_graph_never_raises_capacity():
    rng = np.random.default_rng(30)
    for _ in range(40):
        n = int(rng.integers(2, 6))
        k = int(rng.integers(1, 3))
        c = random_class(VertexUniverse(n), k, int(rng.integers(2, 10)), seed=rng)
        if len(c) < 2:
            continue
        smaller = DistinguishingClass.of(c[i] for i in range(len(c)) if i != int(rng.integers(len(c))))
        assert graph_vc_dim(smaller).dimension <= graph_vc_dim(c).dimension
        if k == 1:
            assert vc_dim(smaller).dimension <= vc_dim(c).dimension


@pytest.mark.parametrize("k", [2, 3])
def test_projection_never_raises_graph_dimension(k):
    rng = np.random.default_rng(40 + k)
    for _ in range(15):
        u = VertexUniverse(4)
        c = random_class(u, k, 10, seed=rng)
        full = graph_vc_dim(c).dimension
        for v in range(u.size):
            assert graph_vc_dim(c.project((v,))).dimension <= full


# ---- 2. gVC never exceeds the tuple VC dimension ----

def test_graph_vc_bounded_by_tuple_vc():
    rng = np.random.default_rng(8)
    for _ in range(100):
        u = VertexUniverse(int(rng.integers(2, 5)))
        c = random_class(u, 2, int(rng.integers(1, 9)), seed=rng)
        assert graph_vc_dim(c).dimension <= tuple_vc(c)


def test_witness_is_shattered_by_the_projected_class():
    rng = np.random.default_rng(12)
    for _ in range(20):
        c = random_class(VertexUniverse(4), 3, 12, seed=rng)
        report = graph_vc_dim(c)
        projected = c.project(report.pins)
        assert projected.arity == 1
        assert is_shattered(projected, report.witness)
        assert len(report.pins) == 2


# ---- 3. growth function and Sauer ----

def test_restriction_count_respects_sauer():
    rng = np.random.default_rng(4)
    for _ in range(30):
        c = random_class(VertexUniverse(6), 1, 10, seed=rng)
        d = vc_dim(c).dimension
        for size in range(1, 7):
            t = tuple(rng.choice(6, size=size, replace=False).tolist())
            assert restriction_count(c, t) <= sauer_bound(d, size)


def test_sauer_bound_values():
    assert sauer_bound(0, 5) == 1
    assert sauer_bound(1, 5) == 6
    assert sauer_bound(7, 3) == 8


def test_restriction_count_needs_arity_one():
    c = all_hypergraphs_class(VertexUniverse(2), 2)
    with pytest.raises(ValueError):
        restriction_count(c, (0,))


# ---- 4. limits ----

def test_universe_cap_from_settings(monkeypatch):
    monkeypatch.setenv("HYPERDISC_VC_UNIVERSE_CAP", "3")
    with pytest.raises(ValueError, match="capped at 3"):
        vc_dim(singleton_class(VertexUniverse(4)))
    assert vc_dim(singleton_class(VertexUniverse(4)), cap=4).dimension == 1


def test_vc_dim_rejects_higher_arity():
    with pytest.raises(ValueError):
        vc_dim(all_hypergraphs_class(VertexUniverse(2), 2))


def test_report_to_dict():
    report = graph_vc_dim(all_hypergraphs_class(VertexUniverse(3), 2))
    assert report.to_dict() == {"dimension": 3, "witness": [0, 1, 2], "pins": [0]}


def test_shattering_accepts_any_iterable():
    c = power_set_class(VertexUniverse(3))
    assert is_shattered(c, [0, 2])
    assert is_shattered(c, (v for v in (0, 2)))
    assert not is_shattered(singleton_class(VertexUniverse(3)), (v for v in (0, 2)))
