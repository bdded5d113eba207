"""
Counting values of a valuation below n
======================================

phi(n) counts nonzero lattice points v with v . (1, sqrt 2) < n.  It equals
the colength of the valuation ideal minus one, and phi(n)/n^2 tends to the
area of the triangle under the line, sqrt(2)/4.
"""

import numpy as np

from gradedvol import RadicalNumber, WeightVector, phi_sequence, rad_to_decimal
from gradedvol.asymptotics import threshold_covolume

w = WeightVector([1, RadicalNumber.sqrt(2)])
limit = threshold_covolume(w.entries)
print("limit:", limit, rad_to_decimal(limit, 6))

# verify=True checks phi(n) = colength(I_n) - 1 at every sample
phi_sequence(w, range(1, 201), verify=True)

seq = np.array(phi_sequence(w, [10, 100, 1000, 4000], verify=False), dtype=float)
print(np.column_stack([seq, seq[:, 1] / seq[:, 0] ** 2]))

# other weights give other limits in [0, 1/2)
for extra in (RadicalNumber.sqrt(3), 1 + RadicalNumber.sqrt(5)):
    v = WeightVector([1, extra])
    print(v.entries[1], rad_to_decimal(threshold_covolume(v.entries), 6))
