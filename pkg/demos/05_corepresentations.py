"""Corepresentations: intervals, decomposition, tensor products, FP dims.

Lists the indecomposable comodules of M(2, 1, zeta_4), decomposes a
scrambled random module by the rank formula, tensors two intervals and
computes Frobenius-Perron dimensions with their exact certificates.
"""
import random

from mqg import (
    IntervalModule,
    MajidAlgebra,
    brute_force_decompose,
    comodule_tensor,
    decompose,
    fp_dimension,
    fusion_data,
    indecomposables,
    random_module,
    root_of_unity,
    tensor_consistency_check,
)

M = MajidAlgebra.build(2, 1, root_of_unity(4))
n, d = M.n, M.d
print(f"M(2, 1, zeta_4): the {n * d} indecomposable comodules")
for I in indecomposables(n, d):
    print(f"  {I}  dims = {list(I.dims())}")
print()

rng = random.Random(5)
X, truth = random_module(n, d, rng, max_total=8)
print(f"random module with dims {list(X.dims)} (scrambled basis):")
print(f"  rank formula:  {decompose(X)}")
print(f"  brute force:   {brute_force_decompose(X)}")
print(f"  ground truth:  {truth}")
print()

A = IntervalModule(n, d, 0, 2).realize()
B = IntervalModule(n, d, 1, 3).realize()
T = comodule_tensor(M, A, B)
print(f"I(0,2) (x) I(1,3): dims {list(T.dims)},",
      f"coaction consistent: {tensor_consistency_check(M, A, B, T)}")
print(f"  decomposition: {decompose(T)}")
print()

F = fusion_data(M)
print("Frobenius-Perron dimensions (power iteration vs exact certificate):")
for I in indecomposables(n, d):
    value, cert = fp_dimension(F, I.simple_class())
    print(f"  FPdim {I} = {value:.9f}  (exact: {cert})")
