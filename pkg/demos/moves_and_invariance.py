"""Watch the invariants as a diagram is deformed.

Kinks multiply the bracket by -A^3 or -A^-3 and shift the writhe, so
the rescaled invariant stays put.  Finger moves change nothing at all.
A full twist re-embeds the annulus in the ambient space; the bracket
moves but its breadth does not.

Run:  python demos/moves_and_invariance.py
"""

import random

from annulink.diagram import (
    apply_full_twist,
    from_braid_closure,
    insert_r1,
    insert_r2,
)
from annulink.skein import bracket_gray, jones, writhe


def row(label, d):
    print("%-28s n=%-3d w=%+d  bracket=%s" % (label, d.n, writhe(d), bracket_gray(d)))


rng = random.Random(7)
d = from_braid_closure([1, 1, 1], 2, disk=True)
row("start (3-crossing knot)", d)
print("%-28s %s" % ("  rescaled invariant", jones(d)))
print()

d1 = insert_r1(d, sorted(d.edge_parity)[0], sign=1)
row("after one positive kink", d1)
d2 = insert_r1(d1, sorted(d1.edge_parity)[2], sign=-1)
row("after an opposite kink", d2)

# a finger move: push one edge over another across a shared face
face = max(d2.trace_faces(), key=len)
(c1, s1), (c2, s2) = list(face)[0], list(face)[-1]
d3 = insert_r2(d2, d2.crossings[c1][s1], d2.crossings[c2][s2])
row("after a finger move", d3)
print("%-28s %s" % ("  rescaled invariant", jones(d3)))
print()
assert jones(d3) == jones(d)

word = [1, -2, 3]
base = from_braid_closure(word, 4)
twisted = from_braid_closure(apply_full_twist(word, 4), 4)
row("annular zigzag", base)
row("same link, full twist", twisted)
print()
print("breadths %d and %d: re-embedding the annulus preserves breadth,"
      % (bracket_gray(base).breadth(), bracket_gray(twisted).breadth()))
print("which is why the breadth checks survive the choice of closure.")
