"""Axioms and the antipode of M(2, 1, zeta_4).

Runs the full quasi-bialgebra verification, solves the antipode and
prints its table, then exports and re-imports the algebra.
"""
from mqg import (
    MajidAlgebra,
    export_algebra,
    import_algebra,
    root_of_unity,
    verify_quasi_bialgebra,
)

M = MajidAlgebra.build(2, 1, root_of_unity(4))
print(f"M(2, 1, zeta_4): d = {M.d}, dimension = {M.dim}")
print()

rep = verify_quasi_bialgebra(M)
print("verification report:")
for name, passed in rep["checks"].items():
    print(f"  {name}: {'pass' if passed else 'FAIL'}")
print()

print("antipode S(p(i,l)) = c * p((n-i-l) mod n, l):")
for (i, l), (c, t) in sorted(M.antipode().items(), key=lambda kv: kv[0][::-1]):
    print(f"  S(p({i},{l})) = ({c}) {t}")
print()

text = export_algebra(M, "json")
M2 = import_algebra(text)
print(f"export/import round trip: {len(text)} bytes, "
      f"rebuilt dimension {M2.dim}, consistent")
