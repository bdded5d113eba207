"""
Epsilon multiplicity and symbolic powers
========================================

For I = (x^2, xy) the saturation of I^n is (x^n), so the local cohomology
length is colength of m^n inside (x): n(n+1)/2 and the limit is 1.
Saturating by y instead gives a symbolic power family with the same lengths.
"""

from gradedvol import FacePrime, MonomialIdeal, epsilon, symbolic_multiplicity
from gradedvol.asymptotics import epsilon_sequence
from gradedvol.monomial import colength, maximal_ideal, power, saturate

I = MonomialIdeal(2, [(2, 0), (1, 1)])
print("saturation of I^4:", saturate(power(I, 4), maximal_ideal(2)))
print(epsilon_sequence(I, range(1, 9)))
print("epsilon estimate:", epsilon(I, [100, 200]).extrapolated)

# a principal ideal never picks up m-torsion
print(epsilon_sequence(MonomialIdeal(2, [(1, 1)]), [5, 10]))

# for an m-primary ideal the whole quotient is m-torsion
J = MonomialIdeal(2, [(2, 0), (0, 3)])
print(epsilon_sequence(J, [10]), colength(power(J, 10)))

y = MonomialIdeal(2, [(0, 1)])
est = symbolic_multiplicity(I, y, FacePrime(2, (0, 1)), [25, 50, 100])
print("symbolic multiplicity at m:", est.extrapolated, float(est.extrapolated))
