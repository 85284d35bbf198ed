"""Three ways to solve c = a * b / d coefficientwise."""
import random

from tautchi import CoeffSeq, combine_direct, combine_log, combine_strata

rng = random.Random(7)
N = 6

# Three random sequences of a_1..a_N; the constant term a_0 is 1
a, b, d = (CoeffSeq([rng.randint(-5, 5) for _ in range(N)]) for _ in range(3))
for name, seq in (("a", a), ("b", b), ("d", d)):
    print(name, "=", [str(x) for x in seq.entries])

# Route 1: log c = log a + log b - log d on truncated series
via_log = combine_log(a, b, d, N)

# Route 2: sums over chains of decreasing indices
via_chains = combine_direct(a, b, d, N)

# Route 3: one term per stratum, i.e. per subset of {1, ..., n+1}
via_strata = [combine_strata(a, b, d, n) for n in range(1, N + 1)]

print("c =", [str(x) for x in via_log.entries])
print("all routes agree:", via_log == via_chains and list(via_log.entries) == via_strata)
