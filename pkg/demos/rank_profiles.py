"""
Rank profiles of cyclic covers
==============================

For each n, build the n-fold cyclic cover group by Reidemeister-Schreier,
simplify it, and bracket its rank between b1 and the generator count.
"""

from fibrometer import corpus, rank_profile
from fibrometer.presentation import PhiMap, Presentation

# free group on two generators: the covers stay free, of rank n + 1
free = Presentation(("x", "y"), ())
prof = rank_profile(free, PhiMap((1, 1)), 8)
print("F2, phi = (1, 1)")
for e in prof.entries:
    print(f"  n={e.n}  rank<={e.rank_upper}  b1>={e.b1_lower}")
print("  gradient estimate:", prof.gradient_estimate)

# Baumslag-Solitar BS(1,2): rank stays 2 while torsion 2^n - 1 appears
p, phi = corpus.load("bs12")
prof = rank_profile(p, phi, 6)
print("BS(1,2)")
for e in prof.entries:
    print(f"  n={e.n}  rank<={e.rank_upper}  b1>={e.b1_lower}  torsion={list(e.torsion)}")

# the trefoil fibers with fiber a punctured torus, so ranks stay bounded;
# b1 jumps at n = 6 because sixth roots of unity are roots of t^2 - t + 1
p, phi = corpus.load("trefoil")
prof = rank_profile(p, phi, 12)
print("trefoil")
print("  rank upper bounds:", [e.rank_upper for e in prof.entries])
print("  b1 lower bounds:  ", [e.b1_lower for e in prof.entries])
