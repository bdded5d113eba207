"""
Additivity over the top-dimensional components
==============================================

The normalized length of R/I_n along its top components is compared with the
sum of the localized multiplicity limits over the face primes where the
family stays primary.
"""

import json

from gradedvol import MonomialIdeal, Powers, additivity_check

for gens in ([(1, 0)], [(2, 0), (1, 1)], [(1, 1)], [(2, 1), (1, 3)]):
    rep = additivity_check(Powers(MonomialIdeal(2, gens)), [4, 8, 16, 32])
    print(gens, "s =", rep.s, "lhs ->", rep.lhs.extrapolated, "rhs ->", rep.rhs_limit)
    print("   T =", [p.to_json()["support"] for p in rep.T], "A =", [p.to_json()["support"] for p in rep.A])

print(json.dumps(rep.to_json()["rhs"], indent=1))
