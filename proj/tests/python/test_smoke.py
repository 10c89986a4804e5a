import pytest

import maxcon


def test_graphicality():
    assert maxcon.is_graphic([2, 2, 2, 2])
    assert not maxcon.is_graphic([3, 3, 1, 1])


def test_realize_and_connectivity():
    g = maxcon.realize([2, 2, 2, 2])
    assert g.degrees() == [2, 2, 2, 2]
    assert maxcon.edge_connectivity(g) == 2
    assert len(maxcon.min_cuts(g)) == 6
    lam, shores = maxcon.brute_min_cut(g)
    assert lam == 2 and len(shores) == 6


def test_realize_rejects_non_graphic():
    with pytest.raises(maxcon.ValidationError):
        maxcon.realize([3, 3, 1, 1])


def test_rewire_two_triangles():
    g0 = maxcon.Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    g, cert, trace = maxcon.rewire(g0, z0=g0)
    assert cert["final_lambda"] == 2
    assert cert["mode_target_met"]
    assert g.degrees() == g0.degrees()
    assert len(trace) == cert["moves_applied"]

    _, cert_default, _ = maxcon.rewire(g0)
    assert cert_default["mode_target_met"]


def test_factor_pipeline():
    g, factor = maxcon.kundu_realize([2, 2, 2, 2], [1, 1, 1, 1])
    assert factor.is_subgraph_of(g)
    assert factor.degrees() == [1, 1, 1, 1]

    g, factor, cert = maxcon.maxcon_with_factor([2, 2, 2, 2], [1, 1, 1, 1])
    assert cert["final_lambda"] == 2

    g, factor, matchings, residual = maxcon.peel_one_factors([3, 3, 3, 3], k=3, r=1)
    assert len(matchings) == 2


def test_matching():
    g = maxcon.Graph(4, [(1, 2), (3, 4), (2, 3)])
    assert maxcon.perfect_matching(g) == [(1, 2), (3, 4)]
    assert maxcon.perfect_matching(maxcon.Graph(4, [(1, 2), (1, 3)])) is None


def test_graph6_round_trip():
    g = maxcon.realize([3, 2, 2, 2, 1])
    assert maxcon.decode_graph6(maxcon.encode_graph6(g)) == g


def test_feasibility_and_oracle():
    assert not maxcon.connectivity_feasible([1, 1, 1, 1], 1)
    assert maxcon.connectivity_feasible([2, 2, 2, 2], 2)
    assert maxcon.count_realizations([2, 2, 2, 2]) == 3
    report = maxcon.check_theorem("thm1", max_n=4)
    assert report["ok"]
