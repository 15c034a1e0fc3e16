"""Why the hardness gadgets work: enumerate their maps and watch the
forcing.

Three exhibits.  The selector cycle admits exactly three maps to the
reflexive directed triangle and its designated cycle is constant in all
of them, so it behaves like a variable taking one of three colours.  The
equalizer has two far-apart ports that every map to the reflexive
transitive triangle sends to the same vertex, so it behaves like a wire.
The in-star needs three distinct images on its leaves, so it behaves
like a palette.
"""

from injhom import (
    Mode,
    build_named,
    enumerate_homs,
    equalizer,
    in_star,
    selector_cycle,
    selector_forced_cycle_roles,
    solve,
)

C3r = build_named("C3r")
T3r = build_named("T3r")


def show_selector():
    gad = selector_cycle(2)
    cycle = gad.role_vertices(selector_forced_cycle_roles(2))
    print(f"selector_cycle(2): {gad.graph.n} vertices, forced cycle {cycle}")
    for i, f in enumerate(enumerate_homs(gad.graph, C3r, Mode.IOS), start=1):
        values = {f[v] for v in cycle}
        print(f"  map {i}: forced cycle image set {sorted(values)}")
    print("  three maps, one per colour: the gadget is a 3-way selector\n")


def show_equalizer():
    gad = equalizer()
    u, v = gad.roles["u"], gad.roles["v"]
    print(f"equalizer: {gad.graph.n} vertices, ports u={u} v={v}")
    for pin in range(3):
        homs = list(enumerate_homs(gad.graph, T3r, Mode.IOS, pins={u: pin}))
        far = {f[v] for f in homs}
        print(f"  pin u=t{pin}: {len(homs)} maps, far port image set {sorted(far)}")
    print("  the far port always copies the pin: the gadget is a wire\n")


def show_in_star():
    gad = in_star()
    print("in-star: three leaves aimed at one centre")
    print(f"  fits in T2r (two colours)? {solve(gad.graph, build_named('T2r'), Mode.IOS).satisfiable}")
    res = solve(gad.graph, T3r, Mode.IOS)
    leaves = gad.role_vertices(["leaf1", "leaf2", "leaf3"])
    print(f"  fits in T3r? {res.satisfiable}, leaf images {[res.witness.map[x] for x in leaves]}")
    print("  the leaves always show all three colours: the gadget is a palette")


def main():
    show_selector()
    show_equalizer()
    show_in_star()


if __name__ == "__main__":
    main()
