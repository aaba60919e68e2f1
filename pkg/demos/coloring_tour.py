"""Tour of the coloring solvers on a few classic graphs.

Builds graphs in code, finds an optimal-width decomposition with the
small-instance search, and compares the naive and canonical coloring
plugins plus the chromatic-number search.
"""
from pwdp import (
    Graph, chromatic_number, exact_pathwidth_decomposition, generate_states,
    make_plugin, solve_coloring,
)


def petersen():
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return Graph(10, outer + spokes + inner)


def main():
    for label, g in [
        ("triangle", Graph(3, [(1, 2), (1, 3), (2, 3)])),
        ("5-cycle", Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])),
        ("petersen", petersen()),
    ]:
        npd, width = exact_pathwidth_decomposition(g)
        print(f"{label}: n={g.n} m={g.m} pathwidth={width}")
        chi = chromatic_number(g, npd)
        print(f"  chromatic number {chi}")
        res = solve_coloring(g, npd, chi, canonical=False)
        print(f"  coloring with {chi} colors: {res.certificate}")
        worse = solve_coloring(g, npd, chi - 1, canonical=True)
        print(f"  {chi - 1} colors feasible? {worse.feasible}")

    # state spaces: the canonical plugin collapses color permutations
    g = Graph(9, [])
    naive = make_plugin("coloring", g, C=7)
    canonical = make_plugin("coloring-canonical", g, C=7)
    print("bag of 9 vertices, 7 colors:")
    print(f"  naive states     {naive.count_states(9):>9}")
    print(f"  canonical states {len(generate_states(canonical, 9)):>9}")


if __name__ == "__main__":
    main()
