"""The quasi-bimodule structure on the arrow space of the basic cycle.

Arrows are X_1..X_n with X_i: g^(i-1) -> g^i, so X_i sits in the
isotypic component ^(g^i)M^(g^(i-1)).  Action tables for every group
element are materialized eagerly from the generator action through the
quasi-associativity rules; downstream shuffle products then only do
table lookups.
"""
from __future__ import annotations

from .cyclo import CycloNum, cached_mul
from .cocycle import CocycleParams, action_scalar, phi

__all__ = ["ArrowBimodule", "build_bimodule", "quasi_axiom_check"]


class ArrowBimodule:
    """Left/right quasi-actions of the cyclic group on the arrow space.

    left[(a, i)] = (scalar, j): g^a . X_i = scalar * X_j, and likewise
    right[(a, i)] for X_i . g^a.  Arrow indices run 1..n.
    """

    def __init__(self, params: CocycleParams, q: CycloNum, lam: CycloNum,
                 left: dict, right: dict):
        self.params = params
        self.q = q
        self.lam = lam
        self.left = left
        self.right = right
        # the recurring scalar qq^{-s} q^{-s} (with the s = 0 reading lam = q)
        self.deformation = params.qq ** (-params.s) * lam.inverse()

    @property
    def n(self) -> int:
        return self.params.n

    def left_act(self, a: int, i: int):
        return self.left[(a % self.n, i)]

    def right_act(self, i: int, a: int):
        return self.right[(a % self.n, i)]

    def isotypic(self, i: int) -> tuple[int, int]:
        """(g, h) exponents with X_i in ^(g^g)M^(g^h)."""
        return (i % self.n, (i - 1) % self.n)

    def to_json(self) -> dict:
        def table(t):
            return [
                {"g": f"g^{a}", "x": f"X_{i}",
                 "coeff": c.to_json(), "image": f"X_{j}"}
                for (a, i), (c, j) in sorted(t.items())
            ]
        return {
            "n": self.n,
            "s": self.params.s,
            "left": table(self.left),
            "right": table(self.right),
            "deformation": self.deformation.to_json(),
        }


def build_bimodule(params: CocycleParams, q: CycloNum) -> ArrowBimodule:
    """Extend g.X_i = X_{i+1} (with the wrap factor qq^s) and the module
    scalar to full action tables for every group element."""
    n, s = params.n, params.s
    lam = action_scalar(params, q)  # validates q
    one = CycloNum.one()

    left: dict = {}
    right: dict = {}
    for i in range(1, n + 1):
        left[(0, i)] = (one, i)
        right[(0, i)] = (one, i)
        # generator actions, the defining data
        if i < n:
            left[(1, i)] = (one, i + 1)
        else:
            left[(1, n)] = (params.qq**s, 1)
    hbar = params.qq ** (-s) * lam.inverse()
    for i in range(1, n + 1):
        right[(1, i)] = (hbar, i % n + 1)

    # g^a . X_i from g.(g^(a-1).X_i) = [Phi(g,g^(a-1),g^i)/Phi(g,g^(a-1),g^(i-1))] g^a . X_i
    for a in range(2, n):
        for i in range(1, n + 1):
            c1, j1 = left[(a - 1, i)]
            c2, j2 = left[(1, j1)]
            ratio = phi(params, 1, a - 1, i) / phi(params, 1, a - 1, i - 1)
            left[(a, i)] = (cached_mul(c1, c2) / ratio, j2)

    # X_i . g^a from (X_i.g^(a-1)).g = [Phi(g^(i-1),g^(a-1),g)/Phi(g^i,g^(a-1),g)] X_i . g^a
    for a in range(2, n):
        for i in range(1, n + 1):
            c1, j1 = right[(a - 1, i)]
            c2, j2 = right[(1, j1)]
            ratio = phi(params, i - 1, a - 1, 1) / phi(params, i, a - 1, 1)
            right[(a, i)] = (cached_mul(c1, c2) / ratio, j2)

    return ArrowBimodule(params, q, lam, left, right)


def quasi_axiom_check(bim: ArrowBimodule, collect: bool = False):
    """Quasi-associativity (left, right, mixed) and the bicomodule
    morphism property, exhaustively over group pairs and arrows.

    Returns bool, or (bool, failures) when collect is set.
    """
    params = bim.params
    n = params.n
    failures = []

    def record(kind, e, f, i):
        failures.append({"identity": kind, "e": e, "f": f, "arrow": i})

    for i in range(1, n + 1):
        g_exp, h_exp = bim.isotypic(i)
        for e in range(n):
            for f in range(n):
                # e.(f.m) = Phi(e,f,g)/Phi(e,f,h) (ef).m
                c1, j1 = bim.left_act(f, i)
                c2, j2 = bim.left_act(e, j1)
                c3, j3 = bim.left_act(e + f, i)
                ratio = phi(params, e, f, g_exp) / phi(params, e, f, h_exp)
                if j2 != j3 or cached_mul(c1, c2) != cached_mul(ratio, c3):
                    record("left", e, f, i)
                # (m.e).f = Phi(h,e,f)/Phi(g,e,f) m.(ef)
                c1, j1 = bim.right_act(i, e)
                c2, j2 = bim.right_act(j1, f)
                c3, j3 = bim.right_act(i, e + f)
                ratio = phi(params, h_exp, e, f) / phi(params, g_exp, e, f)
                if j2 != j3 or cached_mul(c1, c2) != cached_mul(ratio, c3):
                    record("right", e, f, i)
                # (e.m).f = Phi(e,h,f)/Phi(e,g,f) e.(m.f)
                c1, j1 = bim.left_act(e, i)
                c2, j2 = bim.right_act(j1, f)
                lhs = cached_mul(c1, c2)
                c3, j3 = bim.right_act(i, f)
                c4, j4 = bim.left_act(e, j3)
                ratio = phi(params, e, h_exp, f) / phi(params, e, g_exp, f)
                rhs = cached_mul(ratio, cached_mul(c3, c4))
                if j2 != j4 or lhs != rhs:
                    record("mixed", e, f, i)
        # bicomodule morphism property: g^a . X_i lands in the isotypic
        # component shifted by a on both sides, i.e. the image index is i+a
        for a in range(n):
            _, j = bim.left_act(a, i)
            if j % n != (i + a) % n:
                record("bicomodule-left", a, None, i)
            _, j = bim.right_act(i, a)
            if j % n != (i + a) % n:
                record("bicomodule-right", a, None, i)

    ok = not failures
    return (ok, failures) if collect else ok
