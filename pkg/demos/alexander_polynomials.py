"""
Alexander polynomials of knots from braid words
===============================================

Close a few braids, read off the knot group and compute the Alexander
polynomial by Fox calculus. Fibered knots have monic polynomials.
"""

from fibrometer import BraidWord, alexander_polynomial, braid_to_presentation, format_presentation, untwisted_rep

# the closure of s1^3 on two strands is the trefoil
p, phi = braid_to_presentation(BraidWord(2, (1, 1, 1)))
print(format_presentation(p, phi))

res = alexander_polynomial(p, untwisted_rep(p, phi))
print("trefoil:", res.polynomial, "monic" if res.monic else "not monic")

# a few more knots: figure-eight, 5_2 and the (2,5) torus knot
braids = {
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
    "5_2": BraidWord(3, (1, 1, 1, 2, -1, 2)),
    "torus(2,5)": BraidWord(2, (1, 1, 1, 1, 1)),
}
for name, b in braids.items():
    p, phi = braid_to_presentation(b)
    res = alexander_polynomial(p, untwisted_rep(p, phi))
    print(f"{name:>13}: {str(res.polynomial):<24} monic={res.monic}")

# 5_2 has leading coefficient 2, so it cannot fiber over the circle
