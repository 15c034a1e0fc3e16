"""Length divisibility decides where an antidirected cycle can go.

The antidirected cycle alternates sources and sinks.  Under
whole-neighbourhood injectivity it maps to the reflexive directed
triangle exactly when its length is a multiple of 6, and to the
reflexive transitive triangle exactly when its length is a multiple of
4.  This table makes both patterns visible, along with the residue
structure of the triangle witnesses.
"""

from injhom import Mode, antidirected_cycle, build_named, enumerate_homs, solve

C3r = build_named("C3r")
T3r = build_named("T3r")


def main():
    print(f"{'n':>4} {'-> C3r':>8} {'-> T3r':>8}   (mode iot)")
    for n in range(4, 26, 2):
        c = solve(antidirected_cycle(n).graph, C3r, Mode.IOT).satisfiable
        t = solve(antidirected_cycle(n).graph, T3r, Mode.IOT).satisfiable
        marks = []
        if n % 6 == 0:
            marks.append("n = 6k")
        if n % 4 == 0:
            marks.append("n = 4k")
        print(f"{n:>4} {'yes' if c else '-':>8} {'yes' if t else '-':>8}   {', '.join(marks)}")

    print()
    n = 12
    g = antidirected_cycle(n).graph
    homs = list(enumerate_homs(g, C3r, Mode.IOT))
    print(f"all {len(homs)} triangle maps of the length-{n} cycle,")
    print("read as one image per position; positions 6 apart always agree:")
    for f in homs:
        print("  " + " ".join(str(c) for c in f))


if __name__ == "__main__":
    main()
