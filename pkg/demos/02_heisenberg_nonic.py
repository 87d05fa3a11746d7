"""Build a Heisenberg extension of degree 27 and its nonic generator.

With e = -1 the map kappa is t -> 1/t, so alpha = t + 1/t and the minimal
polynomial factors through X^3 - 3X.
"""

from p3ext import (
    build_construction,
    build_tower,
    element_from_text,
    irr_alpha_matrix,
    irr_shortcut_p3,
    numeric_crosscheck,
    ram_set,
)

t = build_tower(3, r=19, sigma=6, e=-1)
res = build_construction(t, element_from_text("d + z + 1", t), "heisenberg")
print("provenance:", res.provenance)
print("omega =", res.omega)

f = irr_alpha_matrix(res)  # Krylov on the 18x18 matrix of alpha over Q
g = irr_shortcut_p3(res)    # minpoly(omega + 1/omega) composed with X^3 - 3X
print("Irr(alpha) =", f.factored_display())
print("routes agree:", f == g)
print("200-bit numeric check:", numeric_crosscheck(res, f))

rep = ram_set(f)
print("ramified primes:", rep.final_set)
