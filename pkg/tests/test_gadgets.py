"""Frozen enumeration facts for the forcing gadgets.

The counts and forcing properties asserted here were obtained by
exhaustive enumeration and are what the hardness reductions depend on.
"""

import pytest

from injhom.gadgets import (
    GADGET_BUILDERS,
    antidirected_cycle,
    apex_cycle,
    equalizer,
    in_star,
    selector_cycle,
    selector_forced_cycle_roles,
)
from injhom.graphs import Mode
from injhom.solver import enumerate_homs, solve
from injhom.targets import build_named

C3r = build_named("C3r")
T3r = build_named("T3r")


def test_apex_cycle_shape():
    for d in (1, 2, 3):
        g = apex_cycle(d).graph
        assert g.n == 9 * d
        assert len(g.arcs) == 12 * d
    with pytest.raises(ValueError):
        apex_cycle(0)


def test_apex_cycle_d1_enumeration():
    gad = apex_cycle(1)
    homs = list(enumerate_homs(gad.graph, C3r, Mode.IOS))
    assert len(homs) == 6
    # consecutive apexes step one place around the directed triangle
    x1, x2, x3 = gad.role_vertices(["x1", "x2", "x3"])
    for f in homs:
        assert f[x2] == (f[x1] + 1) % 3
        assert f[x3] == (f[x2] + 1) % 3


def test_apex_cycle_d1_no_transitive_triangle():
    gad = apex_cycle(1)
    assert not solve(gad.graph, T3r, Mode.IOS).satisfiable


def test_apex_cycle_d2_enumeration():
    gad = apex_cycle(2)
    homs = list(enumerate_homs(gad.graph, C3r, Mode.IOS))
    assert len(homs) == 6
    # apexes three apart share an image: x1 = x4, x2 = x5, x3 = x6
    for f in homs:
        for t in (1, 2, 3):
            assert f[gad.roles[f"x{t}"]] == f[gad.roles[f"x{t + 3}"]]


def test_selector_cycle_shape_and_validation():
    for d in (2, 3):
        g = selector_cycle(d).graph
        assert g.n == 10 * d
    with pytest.raises(ValueError):
        selector_cycle(1)


def test_selector_cycle_d2_forced_constant():
    gad = selector_cycle(2)
    homs = list(enumerate_homs(gad.graph, C3r, Mode.IOS))
    assert len(homs) == 3
    cycle = gad.role_vertices(selector_forced_cycle_roles(2))
    images = set()
    for f in homs:
        vals = {f[v] for v in cycle}
        assert len(vals) == 1
        images |= vals
    # one solution per cycle colour, so every colour is reachable
    assert images == {0, 1, 2}


def test_selector_cycle_d2_pins_extend():
    gad = selector_cycle(2)
    x1 = gad.roles["x1"]
    for colour in range(3):
        res = solve(gad.graph, C3r, Mode.IOS, pins={x1: colour})
        assert res.satisfiable
        assert res.witness.map[x1] == colour


def test_selector_cycle_d3_forced_constant():
    gad = selector_cycle(3)
    cycle = gad.role_vertices(selector_forced_cycle_roles(3))
    for f in enumerate_homs(gad.graph, C3r, Mode.IOS):
        assert len({f[v] for v in cycle}) == 1


def test_antidirected_cycle_structure():
    gad = antidirected_cycle(8)
    g = gad.graph
    assert g.n == 8 and len(g.arcs) == 8
    for v in range(8):
        if v % 2 == 0:
            assert g.out_degree(v) == 2 and g.in_degree(v) == 0
        else:
            assert g.in_degree(v) == 2 and g.out_degree(v) == 0
    for bad in (3, 6 + 1, 2):
        with pytest.raises(ValueError):
            antidirected_cycle(bad)


def test_antidirected_cycle_divisibility():
    # length divisible by 6 for the reflexive directed triangle, by 4 for
    # the reflexive transitive triangle, whole-neighbourhood injectivity
    for n in range(4, 26, 2):
        sat = solve(antidirected_cycle(n).graph, C3r, Mode.IOT).satisfiable
        assert sat == (n % 6 == 0), n
    for n in range(4, 22, 2):
        sat = solve(antidirected_cycle(n).graph, T3r, Mode.IOT).satisfiable
        assert sat == (n % 4 == 0), n


def test_equalizer_shape():
    gad = equalizer()
    g = gad.graph
    assert g.n == 40 and len(g.arcs) == 48
    assert gad.roles == {"u": 11, "v": 9}
    assert g.in_degree(gad.roles["u"]) == 1 and g.out_degree(gad.roles["u"]) == 0
    assert g.in_degree(gad.roles["v"]) == 1 and g.out_degree(gad.roles["v"]) == 0


def test_equalizer_forces_equal_ports_ios():
    gad = equalizer()
    u, v = gad.roles["u"], gad.roles["v"]
    for colour in range(3):
        homs = list(enumerate_homs(gad.graph, T3r, Mode.IOS, pins={u: colour}))
        assert len(homs) == 64
        assert all(f[v] == colour for f in homs)


def test_equalizer_forces_equal_ports_iot():
    gad = equalizer()
    u, v = gad.roles["u"], gad.roles["v"]
    for colour in range(3):
        homs = list(enumerate_homs(gad.graph, T3r, Mode.IOT, pins={u: colour}))
        assert len(homs) == 16
        assert all(f[v] == colour for f in homs)


def test_in_star_needs_three_in_images():
    gad = in_star()
    assert not solve(gad.graph, build_named("T2r"), Mode.IOS).satisfiable
    res = solve(gad.graph, T3r, Mode.IOS)
    assert res.satisfiable
    f = res.witness.map
    leaves = gad.role_vertices(["leaf1", "leaf2", "leaf3"])
    assert len({f[x] for x in leaves}) == 3


def test_gadget_builders_registry():
    assert set(GADGET_BUILDERS) == {"D", "X", "B", "F", "instar"}
    sample_args = {"D": (1,), "X": (2,), "B": (6,), "F": (), "instar": ()}
    for name, (fn, arity) in GADGET_BUILDERS.items():
        args = sample_args[name]
        assert len(args) == arity
        gad = fn(*args)
        assert gad.graph.n > 0
        assert all(0 <= v < gad.graph.n for v in gad.roles.values())
