"""Graphs, validation, and Perron-Frobenius data.

Every construction in this package starts from a simple biorientable graph:
undirected, loop-free, connected, with 0/1 adjacency.  The largest adjacency
eigenvalue beta and its positive eigenvector mu (smallest entry normalized
to 1) drive all the path-space weights, and for beta < 2 the Coxeter number
bounds how long an essential path can be.
"""

import numpy as np

from pathhopf import (
    available_fixtures,
    coxeter_info,
    load_fixture,
    parse_graph,
    perron_frobenius,
    validate,
)

print("bundled graphs:", ", ".join(available_fixtures()))
print()

for name in ("a2", "a3", "a4", "d4", "a_aff_2"):
    graph = load_fixture(name)
    spectrum = perron_frobenius(graph)
    info = coxeter_info(spectrum)
    print(f"{graph.name}: {graph.num_vertices} vertices")
    print("  adjacency:")
    for row in graph.adjacency:
        print("   ", " ".join(str(v) for v in row))
    print(f"  beta = {spectrum.beta:.9f}")
    print("  mu   = (" + ", ".join(f"{v:.9f}" for v in spectrum.mu) + ")")
    residual = np.max(np.abs(graph.adjacency @ spectrum.mu - spectrum.beta * spectrum.mu))
    print(f"  eigen residual = {residual:.3e}")
    if info:
        print(
            f"  Coxeter number {info.coxeter_number}, so essential paths "
            f"stop at length {info.max_essential_length}"
        )
    else:
        print("  beta >= 2: essential paths occur at every length")
    print()

# validation collects failures instead of raising
report = validate(parse_graph('{"name": "ok", "vertices": ["0", "1"], "edges": [[0, 1]]}'))
print("two-vertex chain valid:", report.passed)

from pathhopf import Graph

bad = Graph("lopsided", ("0", "1"), np.array([[0, 1], [0, 0]]))
print("asymmetric adjacency:", validate(bad).failures)
