"""Weighted problems on one small road-network-like graph.

The same graph and decomposition feed five different plugins; each
result is reconstructed into a certificate and re-checked.
"""
from pwdp import Graph, exact_pathwidth_decomposition
from pwdp.solve import (
    solve_avg_path, solve_k_replica, solve_max_leaf_tree,
    solve_max_weight_independent_set, solve_min_maximal_matching,
)


def build_graph():
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5), (3, 6)]
    return Graph(
        6, edges,
        vertex_weights={1: 4, 2: 9, 3: 2, 4: 7, 5: 5, 6: 1},
        selection_costs={1: 2, 2: 8, 3: 1, 4: 3, 5: 2, 6: 4},
        edge_weights={e: w for e, w in zip(edges, (3, 1, 4, 1, 5, 9, 2, 6))},
        edge_penalties={e: p for e, p in zip(edges, (2, 7, 1, 8, 2, 8, 1, 8))},
    )


def main():
    g = build_graph()
    npd, width = exact_pathwidth_decomposition(g)
    print(f"graph: n={g.n} m={g.m} pathwidth={width}")

    res = solve_max_weight_independent_set(g, npd)
    print(f"max-weight independent set: weight {res.objective}, "
          f"vertices {res.certificate}")

    res = solve_min_maximal_matching(g, npd)
    print(f"cheapest maximal matching: weight {res.objective}, "
          f"edges {res.certificate}")

    res = solve_k_replica(g, npd, k=3)
    print(f"3 replicas: cost {res.objective}, placed at {res.certificate}")

    res = solve_max_leaf_tree(g, npd)
    print(f"spanning tree maximizing leaf weight: {res.objective}, "
          f"edges {res.certificate}")

    res = solve_avg_path(g, npd, L=2, U=4)
    verts, edges = res.certificate
    print(f"best average path (length 2..4): {res.objective} "
          f"on vertices {verts}")


if __name__ == "__main__":
    main()
