"""Fiber profiles: the statistics that decide convertibility.

For a function f, the multiplicity profile phi counts codomain points by how
many preimages they have; the tail profile gamma counts points with at least
that many.  Mass bookkeeping, additivity under disjoint union, and a
canonical realization make these the working currency of the whole package.
"""

from pcdres import (
    FinFun,
    Profile,
    disjoint_union,
    enumerate_all_functions,
    gamma_profile,
    phi_profile,
    realize_profile,
)

f = FinFun.from_map([0, 0, 1, 3], 4)
print("f =", f)
phi, gamma = phi_profile(f), gamma_profile(f)
print("phi  =", phi, " (one unhit point, two single fibers, one double)")
print("gamma =", gamma)

print()
print("mass checks: sum i*phi_i =", sum(i * n for i, n in phi.items()), "= |dom|,",
      "sum phi_i =", sum(n for _, n in phi.items()), "= |cod|")
print("tail check: gamma_2 =", gamma[2], "= phi_2 + phi_3 + ... =",
      phi[2] + phi[3] + phi[4])

print()
print("== additivity ==")
g = FinFun.from_map([0, 0], 1)
both = disjoint_union(f, g)
print("phi(f) + phi(g) =", phi_profile(f) + phi_profile(g))
print("phi(f + g)      =", phi_profile(both))

print()
print("== realization ==")
p = Profile({0: 1, 1: 2, 3: 1})
r = realize_profile(p)
print("a canonical function with profile", p, "is", r)
print("round trip:", phi_profile(r) == p)

print()
print("== profiles seen at sizes <= 2 ==")
seen = sorted({phi_profile(h) for h in enumerate_all_functions(2)},
              key=lambda q: tuple(q.items()))
for q in seen:
    print(" ", q)
