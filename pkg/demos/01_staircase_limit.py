"""
A staircase whose colength grows like (5/2) n^2
===============================================

The family I_n is generated by the monomials x^i y^j with i/5 + j >= n.
Its colength is counted exactly, and ``colength / n^2`` settles at 5/2.
"""

from fractions import Fraction

import numpy as np

from gradedvol import StaircaseRule, colength, volume

F = StaircaseRule((Fraction(1, 5), 1))
print("I_3 is generated by", F.ideal_at(3).gens)

ns = np.array([10, 25, 50, 100, 200, 400])
lengths = np.array([colength(F.ideal_at(int(n))) for n in ns])

# the count is 5 n (n + 1) / 2, so the ratio overshoots 5/2 by 5/(2n)
print(np.column_stack([ns, lengths, lengths / ns**2]))
print("closed form holds:", np.array_equal(lengths, 5 * ns * (ns + 1) // 2))

est = volume(F, [int(n) for n in ns])
print("normalized by n^2/2!:", est.last, "extrapolated:", est.extrapolated)
