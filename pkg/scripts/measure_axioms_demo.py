#!/usr/bin/env python3
"""Show where the quantum measure departs from a probability measure at n=2."""

from itertools import combinations

from qmwalk.qmeasure import Event, grade2_check, mu_fast

n = 2
events = [Event.from_indices(n, c) for r in range(5) for c in combinations(range(4), r)]

print("event            mu")
for e in events:
    print(f"{str(set(e.indices().tolist())) if len(e) else '{}':<16} {mu_fast(e)}")

print("\nsubset pairs with mu(A) > mu(B):")
for a in events:
    for b in events:
        if a != b and a.issubset(b) and mu_fast(a) > mu_fast(b):
            print(f"  {set(a.indices().tolist())} within {set(b.indices().tolist())}: "
                  f"{mu_fast(a)} > {mu_fast(b)}")

singles = [Event.from_indices(n, [j]) for j in range(3)]
r = grade2_check(*singles)
print(f"\ngrade-2 sum rule on {{0}}, {{1}}, {{2}}: {r.lhs} == {r.rhs} -> {r.holds}")
