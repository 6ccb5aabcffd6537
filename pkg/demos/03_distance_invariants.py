"""Distance-based invariants and their published closed forms side by side.

The distance-0 coefficient counts self pairs, so the coefficients always sum
to n + C(n, 2).  The oracle disagrees with the published coefficients exactly
where the closed forms assume the cyclic part induces a complete graph.
"""

from powg import (
    FamilyParams,
    build_family,
    build_power_graph,
    diameter,
    hosoya_polynomial,
    paper_hosoya_coeffs,
    paper_rs_hosoya,
    reciprocal_status,
    rs_hosoya_polynomial,
    wiener_index,
)

for k, p in [(2, 3), (2, 5)]:
    graph = build_power_graph(build_family(FamilyParams(k, p)))
    dd = hosoya_polynomial(graph)
    print(f"(k={k}, p={p})  n={graph.n}  diameter={diameter(graph)}")
    print(f"  oracle distance counts : {dd.counts}")
    print(f"  published              : {paper_hosoya_coeffs(k, p)}")
    print(f"  polynomial             : {dd.polynomial_string()}")
    print(f"  Wiener index           : {wiener_index(graph)}")
    print()

graph = build_power_graph(build_family(FamilyParams(2, 3)))
print("reciprocal status at a few vertices (exact rationals):")
for v in (0, 6, 1, 13):
    print(f"  rs({graph.labels[v]}) = {reciprocal_status(graph, v)}")

print("\ntransmission-sum edge polynomial, oracle:")
print(" ", rs_hosoya_polynomial(graph).render())
print("published, as printed (pendant term merged into the x^34 group):")
print(" ", paper_rs_hosoya(2, 3, "printed").render())
print("published, proof-corrected (pendant term at x^35):")
print(" ", paper_rs_hosoya(2, 3, "corrected").render())
