"""
V_5(H) inside V_3(G)
====================

A G-invariant complete code S of n words over m letters lets every letter of
the big alphabet stand for a code word.  G permutes S, and that permutation
group (the root group) must be conjugate to H.  Then substituting code words
for letters turns tables of V_n(H) into tables of V_m(G).
"""

import random

from symthompson import PermGroup, Triple, build_context, embed_topo, find_solution, root_group
from symthompson.perms import Perm
from symthompson.tables import compose, equals, evaluate, random_element, random_point
from symthompson.topo import translate_point
from symthompson.words import format_evword

m, n = 3, 5
G = PermGroup(m, [Perm.from_cycles(m, [(0, 1)])])
H = PermGroup(n, [Perm.from_cycles(n, [(0, 3), (1, 2)])])

# smallest invariant code with five words
S = find_solution(Triple(m, n, G), max_depth=2)
print("invariant code:", S)

root = root_group(G, S)
print("root group generated by", [str(root(g)) for g in G.generators])

# H is conjugate to the root group; the context finds the conjugator
ctx = build_context(m, n, G, H, S)
print("conjugator:", ctx.conj)
print("letters become:", {i: "".join(map(str, ctx.letter(i))) for i in range(n)})

rng = random.Random(1)
g = random_element(n, H, 2, rng=rng)
while len(g) < 5:
    g = random_element(n, H, 2, rng=rng)
print("\ng in V_5(H):")
print(g)
print("\nits image in V_3(G):")
print(embed_topo(ctx, g))

# the image acts on translated points exactly as g acts on points
z = random_point(n, rng)
lhs = evaluate(embed_topo(ctx, g), translate_point(ctx, z))
rhs = translate_point(ctx, evaluate(g, z))
print(f"\nz = {format_evword(z)}:  image(t(z)) = {format_evword(lhs)},  t(g(z)) = {format_evword(rhs)}")

# homomorphism on random pairs
ok = 0
for _ in range(50):
    a = random_element(n, H, 3, rng=rng)
    b = random_element(n, H, 3, rng=rng)
    ok += equals(embed_topo(ctx, compose(b, a)), compose(embed_topo(ctx, b), embed_topo(ctx, a)))
print(f"homomorphism holds on {ok}/50 random pairs")
