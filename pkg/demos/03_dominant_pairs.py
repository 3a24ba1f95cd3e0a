"""l-dominant pairs: lifting, decomposing, enumerating.

A pair (v, w) is l-dominant when w - C_q v >= 0.  Three mechanisms generate
them all on the sigma(S)/sigma(Sigma S) weight sector:
  - iota lifts an indecomposable module N to the unique pair with residual
    e_{sigma N};
  - the Cartan vectors (v^f_i, w^f_i) and (v^Sigma-f_i, w^f_i) have residual 0;
  - the triangular decomposition splits any such pair into positive, Cartan
    and negative l-dominant parts.
"""

from cyclotome import (
    VWPair,
    build_index,
    decompose,
    enumerate_l_dominant,
    iota,
    is_l_dominant,
    kostant_partitions,
    orient,
    residual,
    solve_w_tilde,
    v_f,
    w_f,
)

idx = build_index(orient("A2", "linear"))
ar = idx.ar

print("iota on the three indecomposables of A2:")
for slot in ar.modules:
    pair = iota(idx, slot)
    print(f"  iota({ar.slot_name(slot):2s}) = {pair.pretty(idx)}")
    assert residual(idx, pair) == {idx.sigma(idx.vertex_of_slot[slot]): 1}

print("\nCartan pair and its zero residual:")
cart = VWPair(v_f(idx, 1), w_f(idx, 1))
print(f"  (v^f_1, w^f_1) = {cart.pretty(idx)}  residual = {residual(idx, cart)}")

print("\nthe unique lift of a weight in W+:")
wtilde = {idx.sigma(idx.vertex_of_slot[ar.projective[2]]): 1}
print(f"  solve(e[sigma(P2)]) = {solve_w_tilde(idx, wtilde).pretty(idx)}")

print("\nenumeration on w = e[sigma S1] + e[sigma S2]:")
w = {
    idx.sigma(idx.vertex_of_slot[ar.simple[1]]): 1,
    idx.sigma(idx.vertex_of_slot[ar.simple[2]]): 1,
}
for v in enumerate_l_dominant(idx, w, verify=True):
    print(f"  v = {VWPair(v, {}).pretty(idx).split(',')[0].lstrip('(')}")
print(f"  count = Kostant(alpha_1 + alpha_2) = {kostant_partitions(idx, (1, 1))}")

print("\ntriangular decomposition of a mixed pair:")
mixed_w = dict(w_f(idx, 1))
mixed = VWPair(v_f(idx, 1), mixed_w)
assert is_l_dominant(idx, mixed)
plus, cart, minus = decompose(idx, mixed)
print(f"  {mixed.pretty(idx)}")
print(f"    = {plus.pretty(idx)} + {cart.pretty(idx)} + {minus.pretty(idx)}")
