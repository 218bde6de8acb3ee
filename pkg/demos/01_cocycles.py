"""Cocycles on the cyclic group.

Builds the standard 3-cocycle Phi_s for a few (n, s), checks the
pentagon identity exhaustively, derives the 2-cocycle sigma_s and shows
the twisted powers of the group generator.
"""
from mqg import CocycleParams, pentagon_report, sigma, sigma_report, twisted_power

for n, s in ((2, 1), (3, 2), (4, 1)):
    params = CocycleParams.standard(n, s)
    print(f"== n = {n}, s = {s}, qq = {params.qq} ==")
    rep = pentagon_report(params)
    print(f"  pentagon + normalization: {'pass' if rep['passed'] else rep}")
    rep = sigma_report(params)
    print(f"  sigma_s 2-cocycle identity: {'pass' if rep['passed'] else rep}")
    print("  sigma(g^i, g) for i = 0..n-1:",
          [str(sigma(params, i, 1)) for i in range(n)])
    print("  twisted powers g^(*i) = c_i g^i:",
          [str(twisted_power(params, i)) for i in range(1, n + 1)])
    print()
