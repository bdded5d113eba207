"""
Multiplicity of a monomial ideal from its Newton polygon
========================================================

For an m-primary monomial ideal I, e(I) is d! times the area (volume) left
under the Newton polyhedron.  Colengths of powers approach the same number.
"""

from fractions import Fraction

import numpy as np

from gradedvol import MonomialIdeal, colength, multiplicity
from gradedvol.monomial import newton_complement_volume, power

I = MonomialIdeal(2, [(3, 0), (1, 1), (0, 4)])
print("area under the Newton polygon:", newton_complement_volume(I))
print("e(I) =", multiplicity(I))

ks = np.arange(5, 45, 5)
ratios = np.array([float(Fraction(2 * colength(power(I, int(k))), int(k) ** 2)) for k in ks])
print(np.column_stack([ks, ratios]))

# a grid of pure-power ideals: e((x^a, y^b)) = ab
grid = np.array([[int(multiplicity(MonomialIdeal(2, [(a, 0), (0, b)]))) for b in range(1, 6)] for a in range(1, 6)])
print(grid)
assert np.array_equal(grid, np.outer(np.arange(1, 6), np.arange(1, 6)))

# three variables work the same way
J = MonomialIdeal(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)])
print("e(J) =", multiplicity(J))
