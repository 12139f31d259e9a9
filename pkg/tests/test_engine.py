import time
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from dominion.engine import (
    GammaReport,
    brute_force_dominion,
    checked_u128,
    closed_neighborhood,
    dominating_sets_of_size,
    domination_number,
    dominion,
    enumerate_gamma_sets,
    greedy_dominating_set,
    is_dominating,
)
from dominion.errors import CapacityError, CountOverflowError, SearchTimeout
from dominion.graph import (
    Graph,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    make_star,
    make_sun,
    members,
    vertex_set,
)

from conftest import graphs, random_graph


def gamma_sets(g):
    return [members(s) for s in enumerate_gamma_sets(g)]


# closed neighborhoods and the domination predicate

def test_closed_neighborhood_examples():
    assert members(closed_neighborhood(make_cycle(4), 0)) == [0, 1, 3]
    for v in range(5):
        assert members(closed_neighborhood(make_complete(5), v)) == [0, 1, 2, 3, 4]
    assert members(closed_neighborhood(make_path(3), 1)) == [0, 1, 2]


def test_closed_neighborhood_range():
    with pytest.raises(IndexError):
        closed_neighborhood(make_path(3), 3)


def test_is_dominating_examples(sun3_labels):
    p4 = make_path(4)
    assert is_dominating(p4, vertex_set([1, 2]))
    assert not is_dominating(p4, vertex_set([0, 1]))
    L = sun3_labels
    assert is_dominating(make_sun(3), vertex_set([L["u"], L["v"], L["w"]]))


def test_greedy_is_dominating(rng):
    for _ in range(30):
        g = random_graph(rng.randint(1, 15), rng.random(), rng)
        assert is_dominating(g, greedy_dominating_set(g))


# domination number

def test_domination_number_examples():
    assert domination_number(make_path(7)) == 3
    for n in range(1, 12):
        assert domination_number(make_complete(n)) == 1


def test_c9_gamma_against_subset_scan():
    g = make_cycle(9)
    smallest = None
    for k in range(1, 4):
        if any(is_dominating(g, vertex_set(c)) for c in combinations(range(9), k)):
            smallest = k
            break
    assert smallest == 3
    assert domination_number(g) == 3


def test_empty_graph_conventions():
    g = Graph(0, ())
    assert domination_number(g) == 0
    assert dominion(g, with_sets=True) == GammaReport(0, 1, (0,))
    assert brute_force_dominion(g) == GammaReport(0, 1)


def test_isolated_vertices_belong_to_every_gamma_set():
    g = Graph.from_edges(5, [(0, 1), (1, 2)])  # 3 and 4 isolated
    report = dominion(g, with_sets=True)
    assert report.gamma == 3
    assert all(s & 0b11000 == 0b11000 for s in report.sets)
    assert dominion(make_empty(6)) == GammaReport(6, 1)


# enumeration

def test_enumerate_p4_in_listed_order():
    assert gamma_sets(make_path(4)) == [[0, 2], [0, 3], [1, 2], [1, 3]]


def test_enumerate_p3_center():
    assert gamma_sets(make_path(3)) == [[1]]


def test_enumerate_p5():
    sets = gamma_sets(make_path(5))
    assert sets == [[0, 3], [1, 3], [1, 4]]
    assert all(2 not in s for s in sets)
    oracle = brute_force_dominion(make_path(5), with_sets=True)
    assert [members(s) for s in oracle.sets] == sets


def test_dominating_sets_of_size_superset_completion():
    # every 2-subset of K_3 dominates; exercises the early-complete branch
    assert [members(s) for s in dominating_sets_of_size(make_complete(3), 2)] == [[0, 1], [0, 2], [1, 2]]
    assert list(dominating_sets_of_size(make_path(3), 4)) == []


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_enumeration_is_sorted_unique_and_dominating(g):
    sets = list(enumerate_gamma_sets(g))
    keys = [members(s) for s in sets]
    assert keys == sorted(keys)
    assert len(set(sets)) == len(sets)
    gamma = domination_number(g)
    assert all(len(k) == gamma and is_dominating(g, s) for k, s in zip(keys, sets))


# dominion

def test_dominion_examples(sun3_labels):
    assert dominion(make_sun(3)) == GammaReport(3, 8)
    assert dominion(make_complete(6)) == GammaReport(1, 6)
    assert dominion(make_star(4)) == GammaReport(1, 1)


def test_dominion_sets_only_on_request():
    assert dominion(make_path(4)).sets is None
    assert len(dominion(make_path(4), with_sets=True).sets) == 4


def test_brute_force_examples():
    assert brute_force_dominion(make_path(10)) == GammaReport(4, 13)
    assert brute_force_dominion(make_path(7)) == GammaReport(3, 8)
    c4 = brute_force_dominion(make_cycle(4), with_sets=True)
    assert c4.gamma == 2 and c4.zeta == 6
    assert sorted(members(s) for s in c4.sets) == [list(p) for p in combinations(range(4), 2)]


def test_brute_force_cap():
    with pytest.raises(CapacityError):
        brute_force_dominion(make_path(25))
    assert brute_force_dominion(make_path(24)).gamma == 8


def test_oracle_equivalence_random(rng):
    for i in range(200):
        n = rng.randint(1, 10)
        g = random_graph(n, (0.05, 0.2, 0.4, 0.7, 0.95)[i % 5], rng)
        assert dominion(g, with_sets=True) == brute_force_dominion(g, with_sets=True), g.edges()


@pytest.mark.parametrize(
    "g",
    [make_path(n) for n in range(1, 11)] + [make_cycle(n) for n in range(3, 11)] + [make_sun(n) for n in (3, 4, 5)],
    ids=str,
)
def test_oracle_equivalence_families(g):
    assert dominion(g) == brute_force_dominion(g)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_bounds_hold(g):
    r = dominion(g)
    assert 1 <= r.zeta <= comb(g.n, r.gamma)


def test_overflow_is_reported():
    assert checked_u128(2**128 - 1) == 2**128 - 1
    with pytest.raises(CountOverflowError):
        checked_u128(2**128)
    with pytest.raises(CountOverflowError):
        GammaReport(1, 2**128)


def test_deadline_raises_timeout():
    with pytest.raises(SearchTimeout):
        dominion(make_cycle(30), deadline=time.monotonic() - 1)
    with pytest.raises(SearchTimeout):
        brute_force_dominion(make_path(20), deadline=time.monotonic() - 1)


# structural facts about paths, checked on enumerated γ-sets

@pytest.mark.parametrize("n", range(2, 22))
def test_exactly_one_of_last_two_vertices(n):
    for s in gamma_sets(make_path(n)):
        assert (n - 1 in s) != (n - 2 in s)


@pytest.mark.parametrize("k", range(1, 8))
def test_unique_set_for_multiples_of_three(k):
    n = 3 * k
    sets = gamma_sets(make_path(n))
    assert domination_number(make_path(n)) == k
    # the unique set is v_2, v_5, ..., v_{3k-1} (0-based 1, 4, ...)
    assert sets == [list(range(1, n, 3))]
    assert n - 2 in sets[0]


@pytest.mark.parametrize("k", range(1, 8))
def test_one_set_contains_last_vertex_when_n_is_2_mod_3(k):
    n = 3 * k + 2
    sets = gamma_sets(make_path(n))
    with_last = [s for s in sets if n - 1 in s]
    assert len(with_last) == 1
    assert with_last[0] == list(range(1, 3 * k, 3)) + [n - 1]


@pytest.mark.parametrize("k", range(1, 8))
def test_third_vertex_never_in_a_gamma_set_when_n_is_2_mod_3(k):
    n = 3 * k + 2
    assert all(2 not in s for s in gamma_sets(make_path(n)))


@pytest.mark.parametrize("k", range(1, 8))
def test_path_gamma_set_dominates_cycle(k):
    n = 3 * k
    (s,) = list(enumerate_gamma_sets(make_path(n)))
    cycle = make_cycle(n)
    assert is_dominating(cycle, s)
    assert bin(s).count("1") == domination_number(cycle)
