"""
V_m(G) inside V_n(G_ext)
========================

The image of g fixes the letters 0..m-2, copies g under the letter m-1,
repeats g's columns on the successor words, and fixes the remaining new
letters.  On the cylinder of m-1 the image acts as g.  This script shows that
part and then checks the homomorphism property for both ways of ordering the
range words.  Only the reverse dictionary range order with trivial G passes.
"""

import random

from symthompson import AlgContext, PermGroup, embed_alg, make_table
from symthompson.perms import Perm
from symthompson.tables import (compose, equals, evaluate, expand_column, random_element,
                                random_point)
from symthompson.words import concat, format_evword

# the smallest case: V_2 inside V_3
G = PermGroup.trivial(2)
ctx = AlgContext(2, 3, G)
e = Perm.identity(2)
swap = make_table(2, G, [((0,), e, (1,), e), ((1,), e, (0,), e)])
print("g swaps the two halves of Cantor space:")
print(swap)
print("\nimage, range successors following the domain:")
print(embed_alg(ctx, swap))
print("\nimage, range successors in reverse dictionary order:")
print(embed_alg(ctx, swap, range_order="reverse-dict"))

# on the cylinder of the top letter both images act as g
rng = random.Random(3)
z = random_point(2, rng)
print(f"\nz = {format_evword(z)}: image(1z) = {format_evword(evaluate(embed_alg(ctx, swap), concat((1,), z)))},"
      f" 1 g(z) = {format_evword(concat((1,), evaluate(swap, z)))}")

# but the domain-following rule gives different images to equal tables
expanded = expand_column(swap, 0)
print("\nequal tables, equal images?",
      "domain rule:", equals(embed_alg(ctx, swap), embed_alg(ctx, expanded)),
      " reverse-dict rule:", equals(embed_alg(ctx, swap, range_order="reverse-dict"),
                                    embed_alg(ctx, expanded, range_order="reverse-dict")))


def homomorphism_rate(m, n, group, order, samples=100, seed=5):
    c = AlgContext(m, n, group)
    r = random.Random(seed)
    ok = 0
    for _ in range(samples):
        g = random_element(m, group, 3, rng=r)
        h = random_element(m, group, 3, rng=r)
        lhs = embed_alg(c, compose(h, g), range_order=order)
        rhs = compose(embed_alg(c, h, range_order=order), embed_alg(c, g, range_order=order))
        ok += equals(lhs, rhs)
    return ok


print("\npairs with iota(h o g) = iota(h) o iota(g), out of 100")
for label, group in (("trivial G", PermGroup.trivial(3)), ("G = Sym(3)", PermGroup.symmetric(3))):
    for order in ("domain", "reverse-dict"):
        print(f"  m=3 n=5 {label:11s} {order:13s} {homomorphism_rate(3, 5, group, order)}")
