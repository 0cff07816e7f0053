from dataclasses import replace

import pytest

from acychrom.core import LinearOrder, random_tournament, transitive_tournament, underlying_graph
from acychrom.errors import PreconditionViolated, VerificationFailed
from acychrom.orderings import left_subgraph, right_subgraph
from acychrom.theorem1 import check_structure, theorem1_ordering, theorem1_threshold, verify_theorem1


def test_threshold_values():
    assert theorem1_threshold(3) == 8
    assert theorem1_threshold(4) == 13
    assert theorem1_threshold(5) == 21


def test_preconditions():
    with pytest.raises(PreconditionViolated):
        verify_theorem1(random_tournament(7, 0), 3)
    with pytest.raises(PreconditionViolated):
        verify_theorem1(random_tournament(8, 0), 2)


def test_block_layout_on_transitive():
    g = transitive_tournament(8)
    parts = theorem1_ordering(g)
    assert (parts.u, parts.v, parts.q) == (0, 1, 0)
    assert parts.pi.order == parts.X + (parts.v,) + parts.Y + (parts.u,) + parts.rest
    check_structure(g, parts)


@pytest.mark.parametrize("seed", range(60))
def test_structure_and_claim(seed):
    g = random_tournament(8, seed)
    rep = verify_theorem1(g, 3)
    p = rep.parts
    assert rep.holds and max(rep.chi_right, rep.chi_left) >= 4
    left = underlying_graph(left_subgraph(g, p.pi))
    right = right_subgraph(g, p.pi)
    assert left.degree(p.u) == g.n - 1
    assert right.out[p.v] == sum(1 << w for w in p.Q) and right.inn[p.v] == 0
    assert set(p.X) | set(p.Y) | {p.v} == {w for w in range(g.n) if g.has_edge(p.u, w)}
    assert len(p.Q) == p.q


def test_check_structure_catches_tampering():
    g = random_tournament(9, 5)
    parts = theorem1_ordering(g)
    bad = replace(parts, pi=LinearOrder(parts.pi.order[::-1]))
    with pytest.raises(VerificationFailed):
        check_structure(g, bad)


def test_larger_instance():
    rep = verify_theorem1(random_tournament(13, 77), 4)
    assert rep.m == 13 and rep.holds
