#!/usr/bin/env python3
"""Survey leader sets and maximum sparse ideals for small two-generator
semigroups, and show how often the inclusion-difference converse fails."""

from math import gcd

from sparse_duals import (
    NumericalSemigroup,
    leader_set,
    maximum_sparse_from_leader,
)

if __name__ == "__main__":
    for a in range(2, 8):
        for b in range(a + 1, 10):
            if gcd(a, b) != 1:
                continue
            S = NumericalSemigroup([a, b])
            bound = 2 * S.conductor
            leaders = leader_set(S, bound)
            print(f"<{a},{b}>: genus {S.genus}, conductor {S.conductor}, "
                  f"leaders <= {bound}: {' '.join(map(str, leaders))}")
            for lam in leaders[:3]:
                ideal = maximum_sparse_from_leader(S, S.index_of(lam))
                comp = ", ".join(map(str, ideal.complement))
                print(f"    leader {lam}: complement {{{comp}}}")
            non_leaders = [
                v for v in S.members(bound)
                if v >= S.conductor and v not in set(leaders)
            ]
            if non_leaders:
                print(f"    above-conductor non-leaders: "
                      f"{' '.join(map(str, non_leaders))}")
