import random

import pytest

from dominion.closed_forms import (
    FamilyValue,
    Status,
    complete_dominion,
    cycle_dominion,
    dominion_bounds,
    iterated_join_dominion,
    join_dominion,
    join_gamma,
    join_lower_bound,
    multipartite_dominion,
    path_dominion,
    star_dominion,
    sun_dominion,
)
from dominion.engine import GammaReport, brute_force_dominion, dominion
from dominion.errors import CountOverflowError, HypothesisViolation, InvalidFamilyError, InvalidInputError
from dominion.graph import (
    join,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_empty,
    make_path,
    make_star,
    make_sun,
)
from dominion.harness import multipartite_vectors, random_connected_graph


def test_path_examples():
    assert path_dominion(9).zeta == 1
    assert path_dominion(10).zeta == 13
    assert path_dominion(5).zeta == 3
    assert path_dominion(4).zeta == 4
    assert path_dominion(7).zeta == 8
    assert path_dominion(10).gamma == 4
    assert path_dominion(10).status is Status.PROVEN


def test_path_domain():
    with pytest.raises(InvalidFamilyError):
        path_dominion(1)


def test_path_n1_formula_matches_the_listed_sequence():
    # 4, 8, 13, 19, 26, 34, 43 for n = 4, 7, 10, ...
    assert [path_dominion(3 * k + 1).zeta for k in range(1, 8)] == [4, 8, 13, 19, 26, 34, 43]


@pytest.mark.parametrize("n", range(2, 22))
def test_path_against_oracle(n):
    fv = path_dominion(n)
    r = brute_force_dominion(make_path(n))
    assert (fv.gamma, fv.zeta) == (r.gamma, r.zeta)


def test_cycle_examples():
    assert cycle_dominion(12) == FamilyValue(4, 3, Status.PROVEN, cycle_dominion(12).source)
    c4 = cycle_dominion(4)
    assert (c4.zeta, c4.status) == (6, Status.CONJECTURED)
    c5 = cycle_dominion(5)
    assert (c5.zeta, c5.status) == (5, Status.CONJECTURED)
    assert brute_force_dominion(make_cycle(5)).zeta == 5


@pytest.mark.parametrize("n", range(3, 40))
def test_cycle_status_only_conjectured_off_multiples_of_three(n):
    assert (cycle_dominion(n).status is Status.CONJECTURED) == (n % 3 != 0)


@pytest.mark.parametrize("k", range(1, 8))
def test_cycle_multiple_of_three_against_engine(k):
    n = 3 * k
    assert cycle_dominion(n).zeta == 3 == dominion(make_cycle(n)).zeta
    assert cycle_dominion(n).zeta == path_dominion(n).zeta + 2


def test_cycle_domain():
    with pytest.raises(InvalidFamilyError):
        cycle_dominion(2)


def test_sun_examples():
    assert sun_dominion(3).zeta == 8
    assert sun_dominion(4).zeta == 16
    assert sun_dominion(7).zeta == 128
    with pytest.raises(InvalidFamilyError):
        sun_dominion(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_sun_against_engine(n):
    r = brute_force_dominion(make_sun(n))
    assert (r.gamma, r.zeta) == (sun_dominion(n).gamma, sun_dominion(n).zeta)


def test_sun_overflow():
    assert sun_dominion(127).zeta == 2**127
    with pytest.raises(CountOverflowError):
        sun_dominion(128)


def test_complete_and_star():
    for n in range(1, 9):
        assert complete_dominion(n).zeta == dominion(make_complete(n)).zeta == n
    for leaves in range(2, 9):
        assert star_dominion(leaves).zeta == dominion(make_star(leaves)).zeta == 1
    with pytest.raises(InvalidFamilyError):
        star_dominion(1)


@pytest.mark.parametrize("g1, g2, expected", [(1, 5, 1), (2, 2, 2), (3, 7, 2), (5, 1, 1)])
def test_join_gamma(g1, g2, expected):
    assert join_gamma(g1, g2) == expected


def test_join_gamma_rejects_zero():
    with pytest.raises(InvalidInputError):
        join_gamma(0, 3)


def _jd(g1, g2):
    return join_dominion(g1, dominion(g1), g2, dominion(g2))


def test_join_examples():
    assert _jd(make_complete(3), make_complete(3)).zeta == 6
    assert _jd(make_path(4), make_path(4)).zeta == 24
    assert _jd(make_path(4), make_path(7)).zeta == 32
    assert _jd(make_path(7), make_path(4)).zeta == 32


def test_join_engine_values_frozen():
    assert brute_force_dominion(join(make_path(4), make_path(4))) == GammaReport(2, 24)
    assert brute_force_dominion(join(make_path(4), make_path(7))) == GammaReport(2, 32)
    assert brute_force_dominion(join(make_cycle(4), make_cycle(4))) == GammaReport(2, 28)


def test_join_rejects_disconnected():
    g = make_empty(2)
    with pytest.raises(HypothesisViolation):
        join_dominion(g, dominion(g), make_path(3), dominion(make_path(3)))


def test_join_random_pairs_against_engine():
    rng = random.Random(33)
    for _ in range(40):
        n1 = rng.randint(1, 8)
        n2 = rng.randint(1, 16 - n1)
        g1 = random_connected_graph(n1, rng.random() * 0.5, rng)
        g2 = random_connected_graph(n2, rng.random() * 0.5, rng)
        r1, r2 = brute_force_dominion(g1), brute_force_dominion(g2)
        fv = join_dominion(g1, r1, g2, r2)
        engine = brute_force_dominion(join(g1, g2))
        assert (fv.gamma, fv.zeta) == (engine.gamma, engine.zeta)
        if 2 <= min(r1.gamma, r2.gamma):
            assert engine.zeta >= join_lower_bound(n1, n2)


def test_iterated_join_examples():
    assert iterated_join_dominion(1, 1, 5) == 5 == dominion(make_complete(5)).zeta
    assert iterated_join_dominion(1, 3, 2) == 6 == brute_force_dominion(join(make_complete(3), make_complete(3))).zeta
    assert iterated_join_dominion(1, 7, 1) == 7


def test_iterated_join_needs_gamma_one():
    with pytest.raises(HypothesisViolation):
        iterated_join_dominion(2, 4, 3)


def test_iterated_join_overflow():
    with pytest.raises(CountOverflowError):
        iterated_join_dominion(1, 2**127, 2)


def test_multipartite_examples():
    fv = multipartite_dominion((1, 1, 3))
    assert (fv.gamma, fv.zeta) == (1, 2)
    assert multipartite_dominion((2, 2)).zeta == 6 == brute_force_dominion(make_cycle(4)).zeta
    assert multipartite_dominion((3, 3)).zeta == 9


@pytest.mark.parametrize("parts", [(2, 1), (3,), (), (0, 2)])
def test_multipartite_invalid(parts):
    with pytest.raises(InvalidInputError):
        multipartite_dominion(parts)


@pytest.mark.parametrize("parts", multipartite_vectors(), ids=str)
def test_multipartite_against_oracle(parts):
    r = brute_force_dominion(make_complete_multipartite(parts))
    fv = multipartite_dominion(parts)
    assert (fv.gamma, fv.zeta) == (r.gamma, r.zeta)


def test_bounds_examples():
    assert dominion_bounds(5, 1) == (1, 5)
    assert dominion(make_complete(5)).zeta == dominion_bounds(5, 1)[1]
    assert dominion(make_star(4)).zeta == dominion_bounds(5, 1)[0]
    assert dominion_bounds(6, 3) == (1, 20)
    with pytest.raises(InvalidInputError):
        dominion_bounds(3, 0)


def test_bounds_fit_128_bits_at_capacity():
    assert dominion_bounds(128, 64)[1] < 2**128


def test_join_lower_bound_examples():
    assert join_lower_bound(4, 4) == 16 <= 28
    assert join_lower_bound(4, 7) == 28 <= 32
    assert join_lower_bound(1, 1) == 1
