"""Three volumes of a cone singularity, exactly.

For the cone over a polarized smooth projective variety: the singularity
volume integrates vol(K - tH), the gamma-volume integrates vol(K + H - tH),
and the nef-envelope volume is the anticanonical pseudo-effective threshold
raised to the singularity dimension times the polarization degree.  On a
double cover of an abelian surface all three live in a real quadratic field.
"""

from fractions import Fraction as F

from locvol import (
    AbelianCover,
    Curve,
    LatticeModel,
    ProjSpace,
    SurfaceLattice,
    bdff_cone_volume,
    cone_gamma_volume,
    cone_singularity_volume,
    lambda_sequence,
    volume_function,
)

print("cones over curves: volume (2g-2)^2/d, envelope volume equal")
for g, d in ((2, 1), (3, 4), (4, 5)):
    model = Curve(g, d)
    print(f"  genus {g}, degree {d}: vol = {cone_singularity_volume(model)}, "
          f"Vol = {bdff_cone_volume(model)}")

print("\nprojective spaces polarized by O(n+1): canonical cones of volume 0,")
print("but positive gamma-volume (non-canonical in the pluricanonical sense):")
for n in (2, 3, 4):
    model = ProjSpace(n - 1, n + 1)
    print(f"  n = {n}: vol = {cone_singularity_volume(model)}, "
          f"gamma = {cone_gamma_volume(model)}")

print("\nplurigenus growth on the cone over a genus-2 curve:")
model = Curve(2, 1, general_position=True)
for m, lam, normalized in lambda_sequence(model, 12):
    if m % 3 == 0:
        print(f"  m = {m:2d}: lambda = {lam:4d}, 2*lambda/m^2 = {normalized} "
              f"~ {float(normalized):.4f}")
print(f"  limit: {cone_singularity_volume(model)}")

print("\ndouble cover of an abelian surface (intersection data 2, 3, 2):")
cover = AbelianCover(2, 3, 2)
series = volume_function(cover, 1, 0)
print(f"  vol(K - tH) = {series.pieces[0]} on [0, {series.breakpoints[-1]}]")
print(f"  singularity volume: {cone_singularity_volume(cover)}")
print(f"  nef-envelope volume: {bdff_cone_volume(cover)}  (both irrational)")

print("\nproduct of a line and a genus-2 curve: strict envelope gap")
lattice = SurfaceLattice([[0, 1], [1, 0]], (2, -2), (1, 1),
                         psef_generators=((1, 0), (0, 1)))
product = LatticeModel(lattice, (2, -2), (1, 1))
print(f"  vol = {cone_singularity_volume(product)}, "
      f"Vol = {bdff_cone_volume(product)}")

print("\npiecewise volume function across a Zariski wall (blown-up plane):")
bl = SurfaceLattice([[1, 0], [0, -1]], (-3, 1), (2, -1),
                    negative_curves=((0, 1),), psef_generators=((0, 1), (1, -1)))
walk = LatticeModel(bl, canonical=(3, -1), polarization=(3, -2))
series = volume_function(walk, 1, 0)
for i, piece in enumerate(series.pieces):
    lo, hi = series.breakpoints[i], series.breakpoints[i + 1]
    print(f"  on [{lo}, {hi}]: coefficients {piece}")
print(f"  integral: {series.integral()}")
