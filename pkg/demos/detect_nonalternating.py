"""Certify non-alternation from the bracket alone.

The classifier consumes a bracket polynomial, a claimed crossing
count and user-asserted position facts, and reports which obstruction
clause fires.  Every conclusion is a disjunction; the computation
never claims to know which disjunct holds.

Run:  python demos/detect_nonalternating.py
"""

from annulink.corpus import ENTRIES, build
from annulink.laurent import LaurentPoly
from annulink.skein import bracket_gray
from annulink.theorems import LinkAssertions, classify_nonalternating

FLAGS = LinkAssertions(
    non_h_split=True,
    not_in_3ball=True,
    no_double_sphere_intersection=True,
)


def report(label, poly, n_claim, in_3ball=False):
    call = classify_nonalternating(poly, n_claim, FLAGS, in_3ball)
    print(label)
    print("  bracket  %s   (breadth %d)" % (poly, call.breadth))
    if call.case:
        print("  clause %d fires: %s" % (call.case, call.conclusion))
    else:
        print("  %s" % call.conclusion)
    print()


# A connected 3-crossing diagram whose bracket vanishes outright.
d13 = build(ENTRIES["fig13"].recipe)
report("4-strand closure of s1 s2 s3, claimed with 3 crossings",
       bracket_gray(d13), 3)

# The recorded value for the 3-crossing 2-strand closure.  Its breadth
# is 6, not a multiple of 4, so the first clause fires; whatever link
# it described could not come from an alternating 3-crossing diagram.
report("a recorded 3-crossing bracket of breadth 6",
       LaurentPoly.parse("A^1 - A^-3 - A^-5"), 3)

# Breadth 4 with a claimed crossing count of 1 inside a ball is
# consistent with an alternating picture, and nothing fires.
report("unknot bracket claimed with one crossing, inside a ball",
       LaurentPoly.parse("-A^2 - A^-2"), 0, in_3ball=True)

print("Without the non-H-split assertion no clause is available:")
call = classify_nonalternating(LaurentPoly.parse("A^2"), 5, LinkAssertions(), False)
print("  " + call.conclusion)
