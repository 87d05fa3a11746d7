"""Search the zeta_9 tower for elements whose norm involves one split prime
besides 3, then build the Heisenberg nonic over it. Only 3 and 19 ramify."""

from p3ext import SearchSpec, build_construction, build_tower, irr_alpha_matrix, ram_set, search

t = build_tower(3, zeta_p2=True, e=2)
hits = search(SearchSpec(t, height=2, support=["1", "z9"], minimal_ramification=True, max_results=20))
for h in hits:
    print(f"{h.text:>12}  Nr = {h.report.norm}")

x = next(h.x for h in hits if h.text == "2 + z9")
res = build_construction(t, x, "heisenberg")
f = irr_alpha_matrix(res)
print("\nIrr(alpha) =", f.factored_display())
rep = ram_set(f)
for q, status in sorted(rep.statuses.items()):
    print(f"  {q}: {status.value:12} {rep.reasons[q]}")
print("Ram =", rep.final_set)
