"""Torus localization on Hilbert schemes of points of a toric surface."""
from tautchi import ToricLineBundle, builtin, find_specialization, hilb_chi_series
from tautchi.hilbloc import enumerate_fixed_points

F1 = builtin("hirzebruch", 1)
K = ToricLineBundle((0, 1, 0, 0))
L = ToricLineBundle((1, 0, 0, 1))

# Fixed points are tuples of partitions, one per torus chart
for n in range(4):
    print(f"Hilb^{n}(F_1): {len(enumerate_fixed_points(F1, n))} fixed points")

# A one-parameter subgroup avoiding every tangent weight up to n = 3
spec = find_specialization(F1, 3)
print("specialization:", spec.to_json())

# Each coefficient is an exact sum over fixed points, evaluated at z = 1
series = hilb_chi_series(F1, K, L, 3, spec)
for n in range(4):
    print(f"  Q^{n}:", series[n])
