"""C_9 x| C_3 from the conductor 7 tower, then a look at factorization
patterns mod l, which separate the two groups of order 27."""

from p3ext import build_construction, build_tower, element_from_text, galois_stats, irr_alpha_matrix
from p3ext.groups import cycle_type_distribution

t = build_tower(3, r=7, e=-1)
theta = element_from_text("3*d^2 + 3*d + 3*z*d + z - 4", t)
assert t.sigma_bar(theta) == t.zeta_p * theta

res = build_construction(t, element_from_text("d + z", t), "semidirect", theta=theta)
f = irr_alpha_matrix(res)
print("Irr(alpha) =", f.factored_display())

for group in ("heisenberg", "semidirect"):
    dist = cycle_type_distribution(group, 3)
    print(group, {"+".join(map(str, k)): str(v) for k, v in dist.items()})

# The semidirect group has elements of order 9, so f should be irreducible
# mod about two thirds of the primes. Against H_27 those are impossible.
for group in ("semidirect", "heisenberg"):
    rep = galois_stats(f, group, prime_bound=20_000)
    print(f"as {group}: {rep.primes_used} primes, impossible patterns {sum(rep.impossible.values())}, "
          f"TV distance {rep.tv_distance:.3f}")
