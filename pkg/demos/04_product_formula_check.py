"""Localization against the predicted series on three surfaces."""
from tautchi import ToricLineBundle as T, builtin, verify_conjecture_surface

cases = [
    (builtin("p2"), T((1, 0, 0)), T((2, 0, 0))),
    (builtin("p1xp1"), T((1, 0, 0, 0)), T((0, 1, 0, 0))),
    (builtin("hirzebruch", 1), T((1, -1, 0, 2)), T((0, 0, -2, 1))),
]

for S, K, L in cases:
    report = verify_conjecture_surface(S, K, L, 4)
    print(f"{S.name:8s} N=4  pass={report.passed}  {report.timing_ms:7.1f} ms")

# The residual series is exactly zero, not merely small
print("residual:", report.residual.to_json()["coefficients"])
