"""Deciding conversions and building explicit witnesses.

The question: given processes f and g, can g (plus junk to discard) be
recovered from f by padding with an untouched auxiliary system and wiring
with free morphisms?  With bijections free the answer is multiplicity-profile
dominance away from index 1; with injections free it is tail-profile
dominance away from indices 0 and 1.  A positive answer comes with concrete
wiring data, replayed and checked here.
"""

from pcdres import (
    FinFun,
    TheoryVariant,
    check_witness,
    decide,
    enumerate_all_functions,
    equivalent,
    normal_form,
    witness,
)

BIJ, INJ = TheoryVariant.SET_BIJ, TheoryVariant.SET_INJ

f = FinFun.from_map([0, 0], 1)  # merge two points
g = FinFun.from_map([0], 1)     # pass one point through
print("f =", f, "  g =", g)
print("normal forms (bij): ", normal_form(BIJ, f), "vs", normal_form(BIJ, g))

for variant in (BIJ, INJ):
    print()
    print(f"== {variant.value} ==")
    print("f -> g ?", decide(variant, f, g), "   g -> f ?", decide(variant, g, f))
    w = witness(variant, f, g)
    print("witness: Z =", w.Z.size)
    print("  xi1 =", w.xi1)
    print("  xi2 =", w.xi2)
    print("  j   =", w.j)
    print("replays correctly:", check_witness(variant, f, g, w))

print()
print("== where the variants disagree ==")
nothing = FinFun.from_map([], 0)
unhit = FinFun.from_map([], 1)
print("nothing -> one unhit output, bij:", decide(BIJ, nothing, unhit),
      " inj:", decide(INJ, nothing, unhit))
print("(an injection can invent a fresh output; a bijection cannot)")

print()
print("== equivalence classes at sizes <= 2 ==")
for variant in (BIJ, INJ):
    classes = {}
    for h in enumerate_all_functions(2):
        classes.setdefault(normal_form(variant, h), []).append(h)
    print(f"{variant.value}: {len(classes)} classes")
    for form, members in sorted(classes.items(), key=lambda kv: tuple(kv[0].items())):
        print("  ", form, " e.g.", members[0])
    sample = classes[sorted(classes, key=lambda q: tuple(q.items()))[0]]
    if len(sample) > 1:
        print("   spot check:", sample[0], "~", sample[1], "->",
              equivalent(variant, sample[0], sample[1]))
