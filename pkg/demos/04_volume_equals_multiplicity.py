"""
Volume against multiplicities for an irrational valuation
=========================================================

With weights (1, sqrt 2) the valuation ideals have no polynomial colength.
The normalized colength and the normalized multiplicities e(I_p)/p^2 both
approach sqrt(2)/2, the closed form 1/(weight product).
"""

import numpy as np

from gradedvol import RadicalNumber, ValuationIdeals, WeightVector, multiplicity, rad_to_decimal, volume

w = WeightVector([1, RadicalNumber.sqrt(2)])
F = ValuationIdeals(w)
target = RadicalNumber.sqrt(2) / 2
print("target:", target, "=", rad_to_decimal(target, 8))

est = volume(F, [62, 125, 250, 500])
for n, v in est.normalized:
    print(n, float(v))
print("extrapolated:", float(est.extrapolated))

ps = np.array([2, 5, 10, 20, 40])
ratios = np.array([float(multiplicity(F.ideal_at(int(p))) / int(p) ** 2) for p in ps])
print(np.column_stack([ps, ratios, np.abs(ratios - float(target))]))
