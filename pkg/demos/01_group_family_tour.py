"""Tour of the built-in group family.

Builds <r, s | r^(2^k p) = s^2 = e, s r s^-1 = r^(2^(k-1)p - 1)> at
(k, p) = (2, 3), walks through element orders, the H0..H3 partition, and
the partner pairs {y, y^3} that drive the power graph's structure.
"""

from collections import Counter

from powg import FamilyParams, build_family, cyclic_subgroup, element_order, partition

params = FamilyParams(2, 3)
g = build_family(params)

print(f"family (k={params.k}, p={params.p}): order {g.order}")
print(f"cyclic part <r> has order {params.n_r}, twist exponent m = {params.twist}")

r, s = 1, params.n_r
print(f"\ngenerators: r = {g.labels[r]!r}, s = {g.labels[s]!r}")
print(f"r^{params.n_r} = {g.labels[g.power(r, params.n_r)]!r}, "
      f"s^2 = {g.labels[g.mult(s, s)]!r}")
conj = g.mult(g.mult(s, r), g.inverse(s))
print(f"s r s^-1 = {g.labels[conj]!r} (= r^m)")

orders = Counter(element_order(g, x) for x in g.elements())
print("\nelement order histogram:", dict(sorted(orders.items())))

part = partition(g, params)
print(f"\npartition sizes (H0, H1, H2, H3): {part.sizes()}")
print(f"u = {g.labels[part.u]!r} is the unique involution inside <r>")
print("every even-exponent reflection squares to e, "
      "every odd-exponent reflection has order 4")

print("\npartner pairs (y, z = y^3), each generating {e, y, u, z}:")
for y, z in part.partner_pairs:
    sub = sorted(cyclic_subgroup(g, y))
    print(f"  {g.labels[y]:>7} + {g.labels[z]:<7} -> <y> = "
          f"{{{', '.join(g.labels[t] for t in sub)}}}")
