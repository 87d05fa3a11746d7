"""Walk through the ideal criterion on two small towers.

Run with: python3 demos/01_criterion.py
"""

from p3ext import MapContext, build_tower, element_from_text, nonpower_witness, ideal_criterion

# L = Q(zeta_3, delta) where delta is the cubic period of conductor 7.
t = build_tower(3, r=7)
maps = MapContext(t)
print("tower:", t.summary()["degrees"], "e =", t.e)

x = element_from_text("d + z", t)
gamma = maps.norm_L_over_K(x)
print("Nr_L/K(x) =", gamma, " Nr_L/Q(x) =", maps.norm_L_over_Q(x))

rep = ideal_criterion(maps, x)
for en in rep.entries:
    print(f"  q={en.q} l={en.l} split={en.splits_completely_in_L} betas={en.betas} chi={en.chi}")
print("verdict:", rep.verdict)

# Conductor 19: the ideal test says nothing, but residue witnesses still
# show that neither b(x) is a cube.
t19 = build_tower(3, r=19, sigma=6)
maps19 = MapContext(t19)
x19 = element_from_text("d + z + 1", t19)
rep19 = ideal_criterion(maps19, x19)
print("\nr=19 verdict:", rep19.verdict, "betas:", rep19.entries[0].betas, "chi:", rep19.entries[0].chi)
for variant in ("heisenberg", "semidirect"):
    w = nonpower_witness(t19, maps19.b_value(x19, variant))
    print(f"  b_{variant}: not a cube, witnessed mod s = {w.witness}")
