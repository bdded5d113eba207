"""
Value semigroup and its convex body
===================================

Level i of the semigroup collects exponents of I_i of total degree at most
beta * i.  The convex body is the hull of the rescaled levels; its volume is
the growth rate of the level sizes, and the difference between the ambient
body and the family body recovers the colength limit.
"""

from fractions import Fraction

import numpy as np

from gradedvol import StaircaseRule, body, build_semigroup, check_conditions, family_constants
from gradedvol.okounkov import AMBIENT, count_level

F = StaircaseRule((Fraction(1, 5), 1))
consts = family_constants(F)
print(consts)

S = build_semigroup(F, consts, 40)
A = build_semigroup(F, consts, 40, mode=AMBIENT)
print(check_conditions(S).to_json())

fam, amb = body(S), body(A)
print("family body vertices:", [tuple(map(str, v)) for v in fam.vertices])
print("volumes:", fam.volume, amb.volume, "difference:", amb.volume - fam.volume)

# level sizes divided by m^2 drift down towards the body volume
S = build_semigroup(F, consts, 200)
ms = np.array([25, 50, 100, 200])
counts = np.array([count_level(S, int(m)) for m in ms])
print(np.column_stack([ms, counts / ms**2, (counts / ms**2 - float(fam.volume)) * ms]))
