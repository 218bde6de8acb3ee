"""The (s, q) family grid and admissible truncations.

Enumerates every family on small cycles with its truncation length d and
dimension n*d, then shows which truncation lengths admit a consistent
product and how an illegal one is rejected.
"""
from mqg import TruncationError, admissible_truncations, build_truncated, classify

for n in (2, 3, 4):
    print(f"== families on the cycle of order {n} ==")
    print(f"{'s':>3} {'q_exp':>6} {'conductor':>9} {'d':>4} {'dim':>5} hopf")
    for e in classify(n):
        print(f"{e.s:>3} {e.q_exp:>6} {e.conductor:>9} {e.d:>4} {e.dim:>5} "
              f"{e.is_hopf}")
    print(f"admissible truncation lengths: {sorted(admissible_truncations(n))}")
    print()

print("building the length-4 truncation on the 2-cycle:")
M = build_truncated(2, 4)
print(f"  found M(2,{M.s},q) with d = {M.d}, dim = {M.dim}")

print("attempting the illegal length-3 truncation on the 2-cycle:")
try:
    build_truncated(2, 3)
except TruncationError as exc:
    print(f"  rejected: {exc}")
