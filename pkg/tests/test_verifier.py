import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcoloring.graph import Multigraph, builtin, line_graph
from hcoloring.solver import solve
from hcoloring.structure import is_k_edge_colorable
from hcoloring.verifier import (
    OracleRefused,
    WitnessInputError,
    brute_force_colorable,
    identity_witness,
    solve_vertex_first,
    verify_witness,
)
from oracles import configuration_model, random_host_shaped, random_multigraph

HOSTS = ["xbar", "ahat", "two_c3"]


@pytest.mark.parametrize("host", HOSTS + ["petersen", "k4", "cube", "tietze"])
def test_identity_witness(host):
    H = builtin(host)
    w = identity_witness(H)
    assert verify_witness(H, H, w.f, w.g)


def test_parallel_edges_same_color_rejected():
    D = Multigraph.from_pairs(2, [(0, 1), (0, 1)])
    check = verify_witness(D, builtin("k1k", 2), [0, 0], [0, 0])
    assert not check
    assert check.reason == "adjacent edges share a color" and check.edges == (0, 1)


def test_boundary_mismatch_reported():
    H = builtin("xbar")
    check = verify_witness(H, H, list(range(7)), [1, 0, 2, 3, 4])
    assert not check and check.vertex == 0


def test_ill_formed_mappings_raise():
    H = builtin("xbar")
    with pytest.raises(WitnessInputError):
        verify_witness(H, H, list(range(6)), list(range(5)))
    with pytest.raises(WitnessInputError):
        verify_witness(H, H, list(range(6)) + [7], list(range(5)))
    with pytest.raises(WitnessInputError):
        verify_witness(H, H, list(range(7)), [0, 1, 2, 3, 5])


def test_line_graph_of_k4_xbar_witness():
    L = line_graph(builtin("k4"))
    H = builtin("xbar")
    w, _ = solve(L, H)
    assert w is not None and verify_witness(L, H, w.f, w.g)


def test_perturbed_witness_fails():
    rng = random.Random(5)
    cases = [(line_graph(builtin(g)), builtin(h)) for g in ("k4", "cube") for h in HOSTS]
    cases.append((line_graph(builtin("tietze")), builtin("ahat")))
    for G, H in cases:
        w, _ = solve(G, H)
        assert w is not None
        for _ in range(20):
            f = list(w.f)
            e = rng.randrange(G.m)
            f[e] = rng.choice([c for c in range(H.m) if c != f[e]])
            assert not verify_witness(G, H, f, w.g)


@pytest.mark.parametrize("host", HOSTS + ["petersen", "k1k"])
def test_vertex_first_self(host):
    H = builtin(host, 3 if host == "k1k" else None)
    w, _ = solve_vertex_first(H, H)
    assert w is not None and verify_witness(H, H, w.f, w.g)


def test_vertex_first_line_tietze_ahat():
    L = line_graph(builtin("tietze"))
    w, _ = solve_vertex_first(L, builtin("ahat"))
    assert w is not None and verify_witness(L, builtin("ahat"), w.f, w.g)


def test_brute_force_examples():
    edge = Multigraph.from_pairs(2, [(0, 1)])
    assert brute_force_colorable(edge, edge)
    triangle = Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
    assert not brute_force_colorable(triangle, builtin("k1k", 2))
    assert brute_force_colorable(builtin("two_c3"), builtin("two_c3"))


def test_brute_force_guard():
    with pytest.raises(OracleRefused):
        brute_force_colorable(builtin("petersen"), builtin("petersen"))


@settings(max_examples=300, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from(HOSTS), st.booleans())
def test_triple_agreement_small(rnd, host, shaped):
    G = random_host_shaped(rnd, 7, 10) if shaped else random_multigraph(rnd, 6, 8)
    H = builtin(host)
    a = solve(G, H)[0] is not None
    w, _ = solve_vertex_first(G, H)
    assert a == (w is not None) == brute_force_colorable(G, H)
    if w is not None:
        assert verify_witness(G, H, w.f, w.g)


def test_agreement_on_line_graphs_of_cubic_graphs():
    rng = random.Random(21)
    graphs = [builtin(n) for n in ("k4", "cube", "petersen")]
    while len(graphs) < 15:
        G = configuration_model(rng, [3] * rng.choice((4, 6, 8)))
        if G is not None:
            graphs.append(G)
    for G in graphs:
        L = line_graph(G)
        for host in HOSTS:
            H = builtin(host)
            w1, _ = solve(L, H)
            w2, _ = solve_vertex_first(L, H)
            assert (w1 is None) == (w2 is None), (G.pairs(), host)


def test_star_equivalence_random_regular():
    rng = random.Random(8)
    seen = {True: 0, False: 0}
    for _ in range(60):
        k = rng.choice((3, 4))
        n = rng.choice([x for x in range(2, 11) if (x * k) % 2 == 0])
        G = configuration_model(rng, [k] * n)
        if G is None:
            continue
        expected = is_k_edge_colorable(G, k) is not None
        seen[expected] += 1
        assert (solve(G, builtin("k1k", k))[0] is not None) == expected
        assert (solve_vertex_first(G, builtin("k1k", k))[0] is not None) == expected
    assert seen[True] and seen[False]
