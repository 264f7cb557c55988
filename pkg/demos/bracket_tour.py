"""A first walk through the bracket: calibration values, the two
embeddings of the trefoil word, and what mirroring does.

Run:  python demos/bracket_tour.py
"""

from annulink.diagram import from_braid_closure, from_free_loops, mirror_diagram
from annulink.skein import bracket, jones, writhe


def show(label, d):
    poly = bracket(d)
    print("%-34s %s" % (label, poly))
    return poly


print("calibration")
print("-----------")
show("empty diagram", from_free_loops([]))
show("one trivial loop", from_free_loops([0]))
show("one essential loop", from_free_loops([1]))
show("two essential loops", from_free_loops([1, 1]))
print()

# The essential loop vanishes: its class in H_1 of the solid-torus
# complement is nontrivial mod 2, and every state of such a diagram
# cancels against a partner.  Two parallel essential loops are back in
# the trivial class and contribute 1.

print("the same word, two surfaces")
print("---------------------------")
word = [1, 1, 1]
annular = from_braid_closure(word, 2)
disk = from_braid_closure(word, 2, disk=True)
show("closure of s1 s1 s1 (annular)", annular)
show("closure of s1 s1 s1 (disk)", disk)
print()
print("In the annulus the three crossings all touch both boundary")
print("regions and can be pushed off one by one, so the closure is an")
print("essential-curve diagram in disguise: bracket a monomial, breadth")
print("%d.  Flattened into a disk it is the trefoil, breadth %d."
      % (bracket(annular).breadth(), bracket(disk).breadth()))
print()

print("mirroring")
print("---------")
m = mirror_diagram(disk)
print("trefoil writhe %+d, mirror writhe %+d" % (writhe(disk), writhe(m)))
print("jones(trefoil)  =", jones(disk))
print("jones(mirror)   =", jones(m))
print("the mirror substitutes A -> A^-1 in both invariants")
