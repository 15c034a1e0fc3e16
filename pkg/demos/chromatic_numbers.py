"""Three injective oriented chromatic numbers side by side.

For each sample graph, the least number of colours such that the graph
maps to SOME tournament on that many vertices, under each of the three
colouring flavours: proper (loopless targets, in/out injective) and the
two improper ones (reflexive targets, in/out or whole-neighbourhood
injective).  Improper numbers never exceed proper ones, and the
whole-neighbourhood flavour never drops below the in/out one.
"""

from injhom import (
    ChiCapError,
    chi,
    directed_cycle,
    directed_path,
    edgeless,
    hat,
    transitive_tournament,
)

FLAVOURS = ["improper-ios", "improper-iot", "proper-ios"]

GRAPHS = [
    ("edgeless on 3", edgeless(3)),
    ("directed path P3", directed_path(3)),
    ("directed path P6", directed_path(6)),
    ("directed cycle C5", directed_cycle(5)),
    ("directed cycle C6", directed_cycle(6)),
    ("hat", hat()),
    ("transitive tournament T4", transitive_tournament(4)),
]


def main():
    print(f"{'graph':28}" + "".join(f"{fl:>14}" for fl in FLAVOURS))
    for label, g in GRAPHS:
        row = f"{label:28}"
        for flavour in FLAVOURS:
            try:
                row += f"{chi(g, flavour).value:>14}"
            except ChiCapError:
                row += f"{'> 6':>14}"
        print(row)

    print()
    res = chi(directed_cycle(5), "proper-ios")
    arcs = " ".join(f"{u}->{v}" for u, v in sorted(res.tournament.arcs))
    print(f"witness for C5 proper: {res.value} colours on tournament [{arcs}]")
    print(f"map: {res.witness}")


if __name__ == "__main__":
    main()
