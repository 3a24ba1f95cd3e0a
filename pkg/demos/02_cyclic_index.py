"""The root-of-unity index world over a quiver.

Heights live mod 2h.  I-hat carries the framing spaces, sigma-I-hat the
representation spaces; the canonical section matches each sigma-I-hat vertex
with a window object, and the shift functor induces an involution on vertices
that commutes with sigma.  The q-Cartan matrix moves a unit vector to its two
height-neighbours minus its quiver-neighbours.
"""

from cyclotome import build_index, orient

idx = build_index(orient("A2", "linear"))
print(f"type {idx.quiver.dynkin_type}: heights mod {idx.two_h}, xi = {idx.xi}")

print(f"\n|I-hat| = {len(idx.i_hat)}  |sigma-I-hat| = {len(idx.sigma_i_hat)}")
print("section dictionary (vertex -> object):")
for v in sorted(idx.sigma_i_hat):
    print(f"  {v} -> {idx.vertex_name(v)}")

v0 = sorted(idx.sigma_i_hat)[0]
print(f"\nsigma{v0} = {idx.sigma(v0)}   tau{v0} = {idx.tau_vertex(v0)}")
print(f"shift involution: {v0} <-> {idx.shift_vertex(v0)}")

print("\nq-Cartan matrix on unit vectors:")
for v in sorted(idx.sigma_i_hat):
    image = idx.q_cartan_apply({v: 1})
    pretty = " + ".join(
        f"{'-' if c < 0 else ''}e[{idx.vertex_name(k)}]" for k, c in sorted(image.items())
    ).replace("+ -", "- ")
    print(f"  C_q e[{idx.vertex_name(v)}] = {pretty}")

rows, cols, mat = idx.q_cartan_matrix()
print(f"\nas a matrix: {len(rows)} x {len(cols)}; it is not injective:")
from cyclotome import v_f, v_sigma_f

print(f"  C_q v^f_1 == C_q v^Sigma-f_1: {idx.q_cartan_apply(v_f(idx,1)) == idx.q_cartan_apply(v_sigma_f(idx,1))}")
print(f"  yet v^f_1 = {v_f(idx,1)} differs from v^Sigma-f_1 = {v_sigma_f(idx,1)}")
