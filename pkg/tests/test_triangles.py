from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acychrom.core import Tournament, random_tournament, transitive_tournament
from acychrom.triangles import (
    cyclic_triangle_counts,
    find_transitive_subtournament,
    is_transitive,
    max_transitive_subtournament,
    min_cyclic_edge,
    transitive_order,
)

from conftest import rotational5, three_cycle, tournaments
from oracles import brute_max_transitive, cyclic_triangles_by_triples, is_transitive_set


def c3() -> Tournament:
    return Tournament.from_oriented(three_cycle())


def test_census_examples():
    rep = cyclic_triangle_counts(c3())
    assert rep.total_cyclic == 1 and set(rep.counts.values()) == {1}
    assert set(cyclic_triangle_counts(transitive_tournament(6)).counts.values()) == {0}
    rot = cyclic_triangle_counts(rotational5())
    assert rot.total_cyclic == 5 and rot.counts[(0, 1)] == 1


def test_min_cyclic_edge_examples():
    assert min_cyclic_edge(transitive_tournament(5)) == ((0, 1), 0)
    assert min_cyclic_edge(c3())[1] == 1


@pytest.mark.parametrize("seed", range(200))
def test_census_matches_triples_and_bounds(seed):
    t = 5 + seed % 21
    g = random_tournament(t, seed)
    rep = cyclic_triangle_counts(g)
    total, per_edge = cyclic_triangles_by_triples(list(g.out))
    assert rep.total_cyclic == total
    assert {e: c for e, c in rep.counts.items() if c} == per_edge
    assert rep.identities_hold(g)
    assert 4 * min_cyclic_edge(g)[1] <= t + 1
    assert 24 * rep.total_cyclic <= (t + 1) * t * (t - 1)


def test_max_transitive_examples():
    assert max_transitive_subtournament(transitive_tournament(6)) == frozenset(range(6))
    assert len(max_transitive_subtournament(c3())) == 2
    assert min(len(max_transitive_subtournament(g)) for g in tournaments(4)) == 3


@pytest.mark.parametrize("seed", range(30))
def test_max_transitive_matches_oracle(seed):
    g = random_tournament(3 + seed % 8, seed)
    best = max_transitive_subtournament(g)
    assert is_transitive_set(list(g.out), sorted(best))
    assert len(best) == brute_max_transitive(list(g.out))


def test_find_transitive_examples():
    t5 = transitive_tournament(5)
    assert find_transitive_subtournament(t5, 3) == frozenset({0, 1, 2})
    assert find_transitive_subtournament(c3(), 3) is None
    valid = {
        frozenset(s)
        for s in combinations(range(5), 3)
        if len(set(s) & {0, 1}) <= 1 and len(set(s) & {2, 3}) <= 1
    }
    assert valid == {frozenset(s) for s in [(0, 2, 4), (0, 3, 4), (1, 2, 4), (1, 3, 4)]}
    found = find_transitive_subtournament(t5, 3, forbidden=[{0, 1}, {2, 3}])
    assert found == frozenset({0, 2, 4})


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 9), st.integers(0, 2**32), st.integers(2, 5), st.data())
def test_find_transitive_is_exhaustive(t, seed, s, data):
    g = random_tournament(t, seed)
    blocks = data.draw(st.lists(st.sets(st.integers(0, t - 1), max_size=3), max_size=2))
    found = find_transitive_subtournament(g, s, forbidden=blocks)
    ok = lambda vs: is_transitive_set(list(g.out), vs) and all(len(set(vs) & b) <= 1 for b in blocks)
    if found is None:
        assert not any(ok(c) for c in combinations(range(t), s))
    else:
        assert len(found) == s and ok(sorted(found))


def test_transitive_order_is_source_first():
    g = random_tournament(12, 4)
    best = max_transitive_subtournament(g)
    order = transitive_order(g, best)
    assert all(g.has_edge(a, b) for i, a in enumerate(order) for b in order[i + 1:])
    assert is_transitive(g, best) and not is_transitive(c3(), [0, 1, 2])
