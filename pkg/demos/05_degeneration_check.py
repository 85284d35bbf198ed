"""Inclusion-exclusion along the degeneration of P^2 to its blow-up and P^2."""
from tautchi import ToricLineBundle as T, builtin, make_blowup_scenario, verify_inclusion_exclusion

P2 = builtin("p2")

# Blow up the torus-fixed point of chart 0 and glue in a P^2 along the exceptional curve
scenario = make_blowup_scenario(P2, 0, T((1, 0, 0)), 1, T((2, 0, 0)), 1)
for tag, entry in scenario.entries().items():
    print(f"{tag:5s} rays={list(entry.space.rays)}  K={entry.K.to_json()}  L={entry.L.to_json()}")

# log X + log P_D - log Y1 - log Y2 should vanish modulo Q^4
report = verify_inclusion_exclusion(scenario, 3)
print("pass:", report.passed)
for n in range(1, 4):
    print(f"  log-side Q^{n}:", report.lhs[n])
