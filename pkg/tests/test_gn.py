import random
from itertools import combinations

import pytest

from acychrom.chromatic import chromatic_number
from acychrom.core import LinearOrder, SplitMix64, underlying_graph
from acychrom.errors import SizeLimitExceeded
from acychrom.gn import (
    GridPoint,
    Quadruple,
    build_aux_digraph,
    build_gn,
    cover_bound,
    cover_by_transitive,
    cover_k_min,
    find_interval_quadruple,
    find_large_transitive,
    is_left_proper_cover,
    longest_path,
    points_tightness_example,
    row_vertices,
)
from acychrom.orderings import left_subgraph, right_underlying
from acychrom.triangles import is_transitive

from oracles import brute_quadruple_exists, gn_rule


def P(x, y):
    return GridPoint(x, y)


def test_g1_and_g2():
    assert build_gn(1).n == 1
    g = build_gn(2)
    v = lambda x, y: P(x, y).vertex(2)
    expected = {
        (v(2, 1), v(1, 1)),
        (v(2, 2), v(1, 2)),
        (v(1, 1), v(1, 2)),
        (v(2, 1), v(2, 2)),
        (v(1, 1), v(2, 2)),
        (v(1, 2), v(2, 1)),
    }
    assert set(g.edges()) == expected


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_edge_rule_matches_transcription(n):
    g = build_gn(n)
    for a in range(n * n):
        for b in range(n * n):
            if a != b:
                pa, pb = GridPoint.of(a, n), GridPoint.of(b, n)
                assert g.has_edge(a, b) == gn_rule((pa.x, pa.y), (pb.x, pb.y))


def test_vertex_numbering():
    for v in range(16):
        assert GridPoint.of(v, 4).vertex(4) == v
    assert P(1, 2).vertex(3) == 3


def test_rows_run_right_to_left():
    g = build_gn(6)
    for y in range(1, 7):
        row = row_vertices(6, y)
        assert all(g.has_edge(row[j], row[i]) for i in range(6) for j in range(i + 1, 6))


def test_cap():
    with pytest.raises(SizeLimitExceeded):
        build_gn(101)


def test_quadruple_examples():
    pts = [P(1, 1), P(2, 1), P(1, 2), P(2, 2)]
    assert find_interval_quadruple(pts, 2) == Quadruple(P(1, 1), P(2, 1), P(1, 2), P(2, 2))
    tight3 = [P(1, 1), P(2, 1), P(2, 2), P(3, 2), P(3, 3)]
    assert sorted(points_tightness_example(3)) == sorted(tight3)
    assert find_interval_quadruple(tight3, 3) is None
    assert sorted(points_tightness_example(2)) == [P(1, 1), P(2, 1), P(2, 2)]


def test_quadruple_validity_checks():
    assert not Quadruple(P(1, 1), P(2, 1), P(2, 2), P(3, 2)).is_valid()
    assert not Quadruple(P(1, 2), P(3, 2), P(1, 1), P(3, 1)).is_valid()
    assert Quadruple(P(1, 1), P(3, 1), P(2, 2), P(3, 2)).is_valid()


def test_points_outside_grid_rejected():
    with pytest.raises(ValueError):
        find_interval_quadruple([P(0, 1)], 2)


@pytest.mark.parametrize("seed", range(150))
def test_quadruple_search_matches_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    cells = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    pts = rng.sample(cells, rng.randint(1, 2 * n))
    found = find_interval_quadruple([P(x, y) for x, y in pts], n)
    assert (found is not None) == brute_quadruple_exists(pts)
    if found:
        assert found.is_valid()
        assert {found.p_i, found.p_j, found.p_k, found.p_l} <= {P(x, y) for x, y in pts}


def test_every_six_points_of_3x3_grid_give_quadruple():
    cells = [P(x, y) for x in range(1, 4) for y in range(1, 4)]
    subsets = list(combinations(cells, 6))
    assert len(subsets) == 84
    assert all(find_interval_quadruple(s, 3) is not None for s in subsets)


def test_tightness_n4():
    pts = points_tightness_example(4)
    assert len(pts) == 7 and find_interval_quadruple(pts, 4) is None
    assert not brute_quadruple_exists([(p.x, p.y) for p in pts])


def test_phase_a_returns_full_row():
    n = 4
    g = build_gn(n)
    row = row_vertices(n, 2)
    rest = [v for v in range(n * n) if v not in row]
    pi = LinearOrder(tuple(rest[:5] + row[::-1] + rest[5:]))
    assert find_large_transitive(g, row, pi, k_min=n) == frozenset(row)


def test_phase_b_returns_increasing_diagonal():
    n = 5
    g = build_gn(n)
    diag = [P(x, x).vertex(n) for x in range(1, n + 1)]
    rest = [v for v in range(n * n) if v not in diag]
    pi = LinearOrder(tuple(diag + rest))
    assert find_large_transitive(g, diag, pi, k_min=2) == frozenset(diag)


@pytest.mark.parametrize("seed", range(30))
def test_large_transitive_is_right_clique(seed):
    n = 3 + seed % 4
    g = build_gn(n)
    pi = LinearOrder.random(n * n, seed)
    found = find_large_transitive(g, range(n * n), pi, k_min=2)
    assert found is not None and len(found) >= 2
    assert right_underlying(g, pi).is_clique(found)


@pytest.mark.parametrize("seed", range(30))
def test_aux_digraph_invariants(seed):
    n = 4 + seed % 3
    pi = LinearOrder.random(n * n, seed)
    rng = random.Random(seed)
    Y = rng.sample(range(n * n), n * n // 2)
    aux = build_aux_digraph(Y, pi, n)
    assert not aux.up_edges & aux.down_edges
    for p, q in aux.up_edges | aux.down_edges:
        px, py, qx, qy = p % n, p // n, q % n, q // n
        assert px < qx and py != qy and pi.position[p] < pi.position[q]
        assert (py < qy) == ((p, q) in aux.up_edges)
    right = right_underlying(build_gn(n), pi)
    for edges in (aux.up_edges, aux.down_edges):
        path = longest_path(aux.S, edges, pi)
        assert all((a, b) in edges for a, b in zip(path, path[1:]))
        assert right.is_clique(path)


def test_sampled_diagonals_are_transitive():
    n = 12
    g = build_gn(n)
    rng = SplitMix64(5)
    rows = list(range(1, n + 1))
    for _ in range(50):
        rng.shuffle(rows)
        diag = [P(x, rows[x - 1]).vertex(n) for x in range(1, n + 1)]
        assert is_transitive(g, diag)
        assert all(g.has_edge(diag[i], diag[j]) for i in range(n) for j in range(i + 1, n))


def test_cover_bound_values():
    assert cover_bound(2) == 10
    assert cover_bound(3) == 20
    assert cover_k_min(3) == 1 and cover_k_min(16) == 1 and cover_k_min(17) == 2


@pytest.mark.parametrize("seed", range(20))
def test_cover_n2_and_n3(seed):
    for n in (2, 3):
        g = build_gn(n)
        pi = LinearOrder.random(n * n, seed)
        fam = cover_by_transitive(n, pi, g)
        assert len(fam.parts) <= min(n * n, cover_bound(n))
        assert is_left_proper_cover(g, fam)
        chi_left = chromatic_number(underlying_graph(left_subgraph(g, pi)))[0]
        assert len(fam.parts) >= chi_left


def test_cover_without_clique_cap_uses_row_search():
    n = 5
    g = build_gn(n)
    pi = LinearOrder.random(n * n, 3)
    fam = cover_by_transitive(n, pi, g, clique_cap=0)
    assert is_left_proper_cover(g, fam) and len(fam.parts) <= cover_bound(n)
