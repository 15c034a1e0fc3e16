import itertools
import random

import pytest

from injhom.graphs import (
    Mode,
    OrientedGraph,
    all_oriented_graphs,
    converse,
    directed_cycle,
    directed_path,
    edgeless,
    hat,
    random_oriented_graph,
    transitive_tournament,
)
from injhom.solver import check_hom, enumerate_homs, protected_pairs, solve
from injhom.targets import build_named

C3 = build_named("C3")
C3r = build_named("C3r")
T2r = build_named("T2r")
T3 = build_named("T3")
T3r = build_named("T3r")
U4 = build_named("U4")

MODES = (Mode.PLAIN, Mode.IOS, Mode.IOT)


def naive_homs(g, h, mode):
    out = []
    for f in itertools.product(range(h.n), repeat=g.n):
        if check_hom(g, h, f, mode):
            out.append(f)
    return out


def test_check_hom_constant_onto_reflexive():
    g = directed_cycle(3)
    assert check_hom(g, C3r, (0, 0, 0), Mode.IOS)


def test_check_hom_hat_collision():
    # both hat ends into one image: fails ios on the centre's in-pair
    assert not check_hom(hat(), T2r, (0, 1, 0), Mode.IOS)
    assert check_hom(hat(), T2r, (0, 1, 1), Mode.IOS)


def test_check_hom_arc_preservation():
    g = directed_path(2)
    assert not check_hom(g, T3, (2, 0), Mode.PLAIN)
    assert check_hom(g, T3, (0, 2), Mode.PLAIN)


def test_check_hom_rejects_bad_shape():
    with pytest.raises(ValueError):
        check_hom(directed_path(2), T3, (0,), Mode.PLAIN)
    with pytest.raises(ValueError):
        check_hom(directed_path(2), T3, (0, 9), Mode.PLAIN)


def test_check_hom_reflexive_input_needs_reflexive_target():
    g = OrientedGraph(2, [(0, 1)], reflexive=True)
    assert not check_hom(g, T3, (0, 1), Mode.PLAIN)
    assert check_hom(g, T3r, (0, 1), Mode.PLAIN)


def test_protected_pairs_hat_iot():
    g = hat()
    assert (0, 2) in protected_pairs(g, Mode.IOS)
    assert (0, 2) in protected_pairs(g, Mode.IOT)
    assert protected_pairs(g, Mode.PLAIN) == []


def test_protected_pairs_iot_unions():
    g = OrientedGraph(3, [(0, 1), (1, 2)])  # directed path through 1
    assert (0, 2) in protected_pairs(g, Mode.IOT)
    assert (0, 2) not in protected_pairs(g, Mode.IOS)


def test_solver_matches_naive_exhaustive_small():
    targets = (C3, C3r, T2r, T3, T3r)
    for g in all_oriented_graphs(3):
        for h in targets:
            for mode in MODES:
                want = sorted(naive_homs(g, h, mode))
                got = sorted(enumerate_homs(g, h, mode))
                assert got == want, (g, h, mode)


def test_solver_matches_naive_random_larger():
    rng = random.Random(42)
    targets = (C3r, T3r, U4)
    for _ in range(60):
        g = random_oriented_graph(5, rng)
        h = targets[rng.randrange(len(targets))]
        mode = MODES[rng.randrange(3)]
        want = sorted(naive_homs(g, h, mode))
        got = sorted(enumerate_homs(g, h, mode))
        assert got == want


def test_witnesses_always_check():
    rng = random.Random(43)
    for _ in range(40):
        g = random_oriented_graph(5, rng)
        res = solve(g, C3r, Mode.IOS)
        if res.satisfiable:
            assert check_hom(g, C3r, res.witness.map, Mode.IOS)


def test_mode_monotonicity():
    # iot-injective implies ios-injective implies plain
    rng = random.Random(44)
    for _ in range(60):
        g = random_oriented_graph(5, rng)
        plain = solve(g, C3r, Mode.PLAIN).satisfiable
        ios = solve(g, C3r, Mode.IOS).satisfiable
        iot = solve(g, C3r, Mode.IOT).satisfiable
        assert (not iot or ios) and (not ios or plain)


def test_ios_equals_iot_on_irreflexive_targets():
    rng = random.Random(45)
    for _ in range(40):
        g = random_oriented_graph(4, rng)
        for h in (C3, T3, U4):
            a = sorted(enumerate_homs(g, h, Mode.IOS))
            b = sorted(enumerate_homs(g, h, Mode.IOT))
            assert a == b


def test_converse_symmetry():
    rng = random.Random(46)
    for _ in range(40):
        g = random_oriented_graph(5, rng)
        for h in (C3r, T3r):
            for mode in (Mode.IOS, Mode.IOT):
                a = solve(g, h, mode).satisfiable
                b = solve(converse(g), converse(h), mode).satisfiable
                assert a == b


def test_composition_closure_through_reflexive_mid():
    # g -> mid and mid -> h (mid reflexive, treated as an input with closed
    # neighbourhoods) compose to g -> h
    rng = random.Random(47)
    mid = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)], reflexive=True)
    h = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)], reflexive=True)
    for _ in range(30):
        g = random_oriented_graph(4, rng)
        for mode in (Mode.IOS, Mode.IOT):
            f1 = solve(g, mid, mode)
            f2 = solve(mid, h, mode)
            if f1.satisfiable and f2.satisfiable:
                composed = tuple(f2.witness.map[x] for x in f1.witness.map)
                assert check_hom(g, h, composed, mode)


def test_pins_respected():
    g = directed_cycle(3)
    for pin in range(3):
        res = solve(g, C3r, Mode.IOS, pins={0: pin})
        assert res.satisfiable and res.witness.map[0] == pin


def test_pin_validation():
    g = directed_cycle(3)
    with pytest.raises(ValueError):
        solve(g, C3r, Mode.IOS, pins={9: 0})
    with pytest.raises(ValueError):
        solve(g, C3r, Mode.IOS, pins={0: 7})


def test_enumerate_limit_and_count():
    g = edgeless(2)
    full = list(enumerate_homs(g, T3, Mode.PLAIN))
    assert len(full) == 9
    res = solve(g, T3, Mode.PLAIN, enumerate_all=True)
    assert res.count == 9
    assert len(list(enumerate_homs(g, T3, Mode.PLAIN, limit=4))) == 4


def test_enumeration_deterministic():
    rng = random.Random(48)
    g = random_oriented_graph(5, rng)
    a = list(enumerate_homs(g, C3r, Mode.IOS))
    b = list(enumerate_homs(g, C3r, Mode.IOS))
    assert a == b


def test_empty_graph_and_target():
    assert solve(edgeless(0), T3, Mode.IOS).satisfiable
    assert not solve(directed_path(2), OrientedGraph(0, ()), Mode.IOS).satisfiable


def test_reflexive_input_infeasible_on_irreflexive_target():
    g = OrientedGraph(2, [(0, 1)], reflexive=True)
    assert not solve(g, T3, Mode.IOS).satisfiable
    assert solve(g, T3r, Mode.IOS).satisfiable


def test_reflexive_input_uses_closed_neighbourhoods():
    # path on 3 reflexive vertices: centre's closed in-set {0,1} and closed
    # out-set {1,2} each need two distinct images in ios mode
    g = OrientedGraph(3, [(0, 1), (1, 2)], reflexive=True)
    t1r = build_named("T1r")
    assert not solve(g, t1r, Mode.IOS).satisfiable
    assert solve(g, T3r, Mode.IOS).satisfiable


def test_nodes_explored_reported():
    g = directed_cycle(6)
    res = solve(g, C3r, Mode.IOS)
    assert res.nodes_explored >= 0
