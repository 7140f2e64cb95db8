"""Loop-space class algebra series.

The surviving second-page ranks feed a free graded-commutative algebra,
one generator per surviving class.  Even generators contribute
polynomial factors and odd generators exterior factors.  The regular
stratum alone contributes a polynomial subalgebra whose series is the
same for d and d + 1.
"""

from artifact.loopspace import free_gca_series, loopspace_series, mmm_subseries

D = 16

# hand-sized example first: one even generator in degree 2 and one odd
# generator in degree 3 give (1/(1-t^2)) * (1+t^3)
toy = free_gca_series({2: 1, 3: 1}, 10)
print("free algebra on x2 (even), y3 (odd):",
      ",".join(str(c) for c in toy.c))

full = loopspace_series(4, "inf", D)
base = mmm_subseries(4, D)
print()
print("d = 4 loop-space series :", ",".join(str(c) for c in full.c))
print("regular-stratum subring :", ",".join(str(c) for c in base.c))
print("first degree with classes beyond the subring:",
      next(n for n in range(D + 1) if full[n] > base[n]))

print()
print("the subring only sees the even part of d:",
      "mmm(5) == mmm(4) is", mmm_subseries(5, D) == mmm_subseries(4, D))

shifted = loopspace_series(4, "inf", D, offset=2)
print()
print("offset 2 shifts every generator degree, series becomes:")
print("  ", ",".join(str(c) for c in shifted.c))
