"""The predicted generating series and its product form."""
from tautchi import ProjProduct, ToricLineBundle, builtin, chi_lambda_pair
from tautchi import predicted_closed_form, predicted_series

P2 = builtin("p2")
K = ToricLineBundle((1, 0, 0))   # O(1)
L = ToricLineBundle((2, 0, 0))   # O(2)

# The pairing chi(O) - u chi(K^v) - v chi(L) + uv chi(K^v L) on P^2
print("pairing on P^2:", chi_lambda_pair(P2, K, L))

# exp(sum_r pairing(u^r, v^r) Q^r / r), truncated after Q^4
series = predicted_series(P2, K, L, 4)
for n in range(5):
    print(f"  Q^{n}:", series[n])

# Same thing from four binomial factors
print("product form agrees:", series == predicted_closed_form(P2, K, L, 4))

# Products of projective spaces use integer multidegrees instead of fans
X = ProjProduct((1, 2))
print("P^1 x P^2, Q^2 term:", predicted_series(X, (1, 0), (0, 1), 2)[2])
