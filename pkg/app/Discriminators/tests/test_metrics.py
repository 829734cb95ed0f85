from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from Discriminators.core_feature.classes import power_set_class, random_class, singleton_class
from Discriminators.core_feature.distribution import Distribution, Sample, tv_distance
from Discriminators.core_feature.frequency import edge_freq_true
from Discriminators.core_feature.hypergraph import DistinguishingClass, Hypergraph
from Discriminators.core_feature.universe import VertexUniverse
from Discriminators.errors import BudgetExceededError, UniverseMismatchError
from Discriminators.metrics_feature.ipm import IpmResult, ipm_exact, ipm_sampled, to_json_number
from Discriminators.metrics_feature.lift import delta_n, mixture_grid_sweep, mixture_ipm_expansion
from Discriminators.tests.conftest import exact_dist, exact_distributions

U4 = VertexUniverse(4)


def random_exact(rng, universe: VertexUniverse, max_support: int | None = None) -> Distribution:
    n = universe.size
    weights = rng.integers(0, 6, size=n)
    if max_support is not None and max_support < n:
        weights[rng.permutation(n)[max_support:]] = 0
    if weights.sum() == 0:
        weights[int(rng.integers(n))] = 1
    return exact_dist(universe, [int(w) for w in weights])


# ---------- ipm_exact ----------

def test_power_set_ipm_equals_tv():
    rng = np.random.default_rng(2024)
    for _ in range(500):
        u = VertexUniverse(int(rng.integers(1, 7)))
        p1, p2 = random_exact(rng, u), random_exact(rng, u)
        result = ipm_exact(power_set_class(u), p1, p2)
        assert result.value == tv_distance(p1, p2)
        assert isinstance(result.value, Fraction)


def test_arity_one_ipm_never_exceeds_tv():
    rng = np.random.default_rng(77)
    for _ in range(200):
        u = VertexUniverse(int(rng.integers(1, 7)))
        c = random_class(u, 1, int(rng.integers(1, 6)), seed=rng)
        p1, p2 = random_exact(rng, u), random_exact(rng, u)
        assert ipm_exact(c, p1, p2).value <= tv_distance(p1, p2)
        f1, f2 = p1.as_float(), p2.as_float()
        assert ipm_exact(c, f1, f2).value <= float(tv_distance(p1, p2)) + 1e-12


def test_singleton_ipm_is_largest_pointwise_gap():
    p1 = exact_dist(U4, [4, 3, 2, 1])
    p2 = Distribution.uniform(U4)
    result = ipm_exact(singleton_class(U4), p1, p2)
    assert result.value == Fraction(3, 20)
    assert result.witness == 0
    assert result.per_graph_gaps == (Fraction(3, 20), Fraction(1, 20), Fraction(1, 20), Fraction(3, 20))


def test_witness_is_lowest_index_on_ties():
    assert IpmResult.from_gaps([Fraction(1, 3), Fraction(1, 2), Fraction(1, 2)]).witness == 1


def test_identical_distributions_give_zero(uniform4):
    assert ipm_exact(power_set_class(U4), uniform4, uniform4).value == 0


def test_float_mode_ipm():
    p1 = exact_dist(U4, [1, 1, 0, 0]).as_float()
    p2 = exact_dist(U4, [0, 0, 1, 1]).as_float()
    result = ipm_exact(power_set_class(U4), p1, p2)
    assert result.value == pytest.approx(1.0)
    assert isinstance(result.value, float)


def test_ipm_budget_error_points_at_sampling(uniform4):
    c = DistinguishingClass.of([Hypergraph.complete(U4, 3)])
    with pytest.raises(BudgetExceededError) as info:
        ipm_exact(c, uniform4, uniform4, budget=10)
    assert info.value.hint == "ipm_sampled"
    assert info.value.required == 64


def test_ipm_universe_mismatch(uniform4):
    with pytest.raises(UniverseMismatchError):
        ipm_exact(power_set_class(U4), uniform4, Distribution.uniform(VertexUniverse(3)))


def test_ipm_result_to_dict():
    result = IpmResult.from_gaps([Fraction(1, 4), 0.5])
    assert result.to_dict() == {"value": 0.5, "witness": 1, "per_graph_gaps": ["1/4", 0.5]}
    assert to_json_number(Fraction(2, 6)) == "1/3"


@settings(max_examples=40, deadline=None)
@given(p=exact_distributions(4), q=exact_distributions(4), r=exact_distributions(4))
def test_ipm_is_a_pseudometric(p, q, r):
    c = random_class(U4, 2, 5, seed=1)
    d = lambda a, b: ipm_exact(c, a, b).value  # noqa: E731
    assert d(p, p) == 0
    assert d(p, q) == d(q, p)
    assert d(p, r) <= d(p, q) + d(q, r)


# ---------- ipm_sampled ----------

def test_ipm_sampled_on_disjoint_samples():
    s1 = Sample(U4, (0, 0, 1))
    s2 = Sample(U4, (2, 3))
    result = ipm_sampled(singleton_class(U4), s1, s2)
    assert result.value == Fraction(2, 3)
    assert result.witness == 0


def test_ipm_sampled_collision_graph():
    g = Hypergraph(U4, 2, frozenset((v, v) for v in range(4)))
    c = DistinguishingClass.of([g])
    result = ipm_sampled(c, Sample(U4, (0, 0, 1)), Sample(U4, (0, 1, 2)))
    assert result.value == Fraction(5, 9) - Fraction(3, 9)


# ---------- delta_n and the mixture expansion ----------

def test_delta_n_endpoints():
    rng = np.random.default_rng(3)
    c = random_class(U4, 3, 1, seed=4)
    g = c[0]
    p1, p2 = random_exact(rng, U4), random_exact(rng, U4)
    assert delta_n(g, 1, 3, p1, p2) == 0
    assert delta_n(g, 1, 0, p1, p2) == edge_freq_true(g, p1) - edge_freq_true(g, p2)
    with pytest.raises(ValueError):
        delta_n(g, 1, 4, p1, p2)


def test_mixture_expansion_identity():
    rng = np.random.default_rng(77)
    u = VertexUniverse(5)
    for _ in range(500):
        k = int(rng.integers(1, 5))
        c = random_class(u, k, 3, seed=rng)
        p1 = random_exact(rng, u, max_support=5)
        p2 = random_exact(rng, u, max_support=5)
        v = int(rng.integers(5))
        for j in range(k + 1):
            lhs, rhs = mixture_ipm_expansion(c, v, Fraction(j, k), p1, p2)
            assert abs(lhs - rhs) <= 1e-12


def test_mixture_expansion_float_mode():
    rng = np.random.default_rng(5)
    c = random_class(U4, 2, 4, seed=6)
    p1 = random_exact(rng, U4).as_float()
    p2 = random_exact(rng, U4).as_float()
    lhs, rhs = mixture_ipm_expansion(c, 2, 0.3, p1, p2)
    assert lhs == pytest.approx(rhs, abs=1e-12)


# ---------- mixture grid sweep ----------

def test_grid_sweep_reaches_floor():
    rng = np.random.default_rng(99)
    u = VertexUniverse(5)
    epsilon = Fraction(1, 20)
    checked = 0
    for _ in range(2000):
        k = int(rng.integers(2, 5))
        c = random_class(u, k, 4, seed=rng)
        p1, p2 = random_exact(rng, u), random_exact(rng, u)
        v = int(rng.integers(5))
        if ipm_exact(c.project((v,)), p1, p2).value < epsilon:
            continue
        sweep = mixture_grid_sweep(c, v, p1, p2)
        assert sweep.projected_ipm >= epsilon
        assert sweep.floor == sweep.projected_ipm / 2 ** (3 * k * k)
        assert sweep.holds
        checked += 1
        if checked == 100:
            break
    assert checked == 100


def test_grid_sweep_arity_one_has_zero_floor():
    p1 = exact_dist(U4, [1, 0, 0, 0])
    p2 = exact_dist(U4, [0, 1, 0, 0])
    sweep = mixture_grid_sweep(singleton_class(U4), 0, p1, p2)
    assert sweep.grid == (Fraction(0), Fraction(1))
    assert sweep.projected_ipm == 0
    assert sweep.lifted_ipm == (Fraction(1), Fraction(0))
    assert sweep.holds
    assert sweep.to_dict()["grid"] == ["0", "1"]
