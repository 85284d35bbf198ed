"""Predicted series for the generating triples in low dimension."""
from tautchi.toricgeom import generators
from tautchi.verify import generator_report

for n in range(1, 5):
    print(f"dimension {n}: {len(generators(n))} triples")

# Each triple is a product of projective spaces with two line bundles
for (X, K, L), series in generator_report(2, 2):
    print(f"P^{list(X.lam)}  K={list(K)}  L={list(L)}  Q^1 = {series[1]}")
