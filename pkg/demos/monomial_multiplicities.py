"""Local multiplicities of monomial ideals at the origin.

Saturation slides the staircase along each axis; the gap between an ideal
and its saturation is finite exactly when the quotient lives at the origin.
Asymptotically, the n!-normalized gap of the p-th powers converges to the
Euclidean volume between the Newton region and its slid intersection.
"""

from locvol import (
    MonomialIdeal,
    asymptotic_multiplicity,
    h1_dim,
    multiplicity_sequence,
    power,
    saturation,
)
from locvol.toric import PointedCone

staircase = MonomialIdeal([(3, 0), (1, 3)])
print(f"ideal generated by X^3, X*Y^3: generators {staircase.generators}")
print(f"saturation: {saturation(staircase).generators}  (the principal ideal X)")
print(f"gap dimension h1 = {h1_dim(staircase)}  (six monomials X, X^2, XY, ...)")
print(f"asymptotic multiplicity = {asymptotic_multiplicity(staircase)}")

print("\nconvergence of 2 * h1(I^p) / p^2:")
for p, h1, normalized in multiplicity_sequence(staircase, 24):
    if p % 4 == 0:
        print(f"  p = {p:2d}: h1 = {h1:5d}, normalized = {normalized} "
              f"~ {float(normalized):.4f}")

print("\npowers stay minimal:", power(staircase, 2).generators)

print("\nmaximal-ideal powers on two variables (binomial staircases):")
maximal = MonomialIdeal([(1, 0), (0, 1)])
for p, h1, normalized in multiplicity_sequence(maximal, 6):
    print(f"  p = {p}: h1 = {h1} = p(p+1)/2, normalized = {normalized}")

print("\nHilbert-Samuel agreement for primary staircases (X^a, Y^b):")
for a, b in ((2, 3), (4, 5), (3, 7)):
    print(f"  ({a},{b}): multiplicity {asymptotic_multiplicity(MonomialIdeal([(a, 0), (0, b)]))} = {a}*{b}")

print("\nsemigroup-ring variant on a skew exponent cone:")
skew = PointedCone([(1, 0), (1, 2)])
ideal = MonomialIdeal([(1, 0), (1, 1)], ambient=skew)
print(f"  generators {ideal.generators} inside cone<(1,0),(1,2)>: "
      f"multiplicity {asymptotic_multiplicity(ideal)}")
