"""How many linear series live on a chain of elliptic curves?

The count is governed by the Brill-Noether number rho.  When rho < 0 there
are none; when rho = 0 there are finitely many, counted by a generalized
Catalan number; when rho = 1 the locus is a curve whose component count we
can write down.
"""

from bncurve import (
    catalan,
    enumerate_ballot,
    generalized_catalan,
    limit_series_census,
    rho,
)

print("rho for small pencils (r = 1):")
for g, d in [(3, 2), (4, 3), (5, 4), (7, 5)]:
    print(f"  g={g}, d={d}: rho = {rho(g, 1, d)}")

print()
print("census of W^1_d across the three regimes:")
for g, r, d in [(3, 1, 2), (4, 1, 3), (5, 1, 4)]:
    census = limit_series_census(g, r, d)
    print(f"  W^{r}_{d} on genus {g}: {census.kind}, count {census.count}")

print()
print("rho = 0 counts are generalized Catalan numbers (Castelnuovo):")
for a, r in [(2, 1), (3, 1), (2, 2), (2, 3)]:
    n = generalized_catalan(a, r + 1)
    enumerated = sum(1 for _ in enumerate_ballot(a, r + 1))
    print(f"  a={a}, r={r}: formula {n}, enumeration {enumerated}")

print()
print("the a=2, r=2 ballot sequences behind the count of 5:")
for seq in enumerate_ballot(2, 3):
    print(f"  {''.join(map(str, seq.symbols))}")

print()
print("rho = 1 component counts nu = (2a+1) * catalan(a):")
for a in range(1, 7):
    print(f"  a={a}: nu = {(2 * a + 1) * catalan(a)}")
