"""
Computing in V_n(H) with tables
===============================

Elements are tables of columns (p, sigma, q, tau).  A column sends the
cylinder p sigma(u) to q tau(u).  This script builds a few elements, applies
the four moves and checks equality by reducing g h^-1 to the identity.
"""

from symthompson import (PermGroup, compose, equals, evaluate, expand_column, inverse,
                         make_table, push_down, push_up, reduce_once, canonical)
from symthompson.perms import Perm
from symthompson.words import EvWord, format_evword

# V_3 extended by the full symmetric group on the letters {0, 1, 2}
H = PermGroup.symmetric(3)
e = Perm.identity(3)
swap01 = Perm.from_cycles(3, [(0, 1)])
rot = Perm.from_cycles(3, [(0, 1, 2)])

# g: cylinder 0 goes to 1 with letters 0, 1 swapped, 1 goes to 2, 2 goes to 0 rotated
g = make_table(3, H, [((0,), e, (1,), swap01),
                      ((1,), e, (2,), e),
                      ((2,), e, (0,), rot)])
print("g =")
print(g)

# evaluation at an eventually periodic point head(period)
z = EvWord((0, 2), (1,))
print(f"\ng({format_evword(z)}) = {format_evword(evaluate(g, z))}")

# the four moves change the table, not the homeomorphism
moves = {
    "expand column 2": expand_column(g, 2),
    "push down": push_down(g),
    "push up": push_up(g),
    "reduce after expanding": reduce_once(expand_column(g, 0)),
}
for name, t in moves.items():
    print(f"{name:24s} columns={len(t)}  same element: {equals(t, g)}  "
          f"same value at z: {evaluate(t, z) == evaluate(g, z)}")

# group operations
h = make_table(3, H, [((), rot, (), e)])
gh = compose(g, h)            # h first, then g
print("\n(g o h)(z) =", format_evword(evaluate(gh, z)),
      "  g(h(z)) =", format_evword(evaluate(g, evaluate(h, z))))
print("g o g^-1 is the identity:", equals(compose(g, inverse(g)), make_table(3, H, [((), e, (), e)])))

# canonical form: torsion pushed to the range row, reduced, columns sorted
print("\ncanonical form of g o h:")
print(canonical(gh))
