import random

import pytest

from mqg.cyclo import CycloNum, root_of_unity
from mqg.cocycle import CocycleParams, legal_q_values
from mqg.algebra import MajidAlgebra
from mqg.corep import (
    CycleModule,
    IntervalModule,
    NotAComoduleError,
    brute_force_decompose,
    comodule_tensor,
    decompose,
    direct_sum,
    fp_dimension,
    fusion_data,
    hom_dim,
    indecomposables,
    is_indecomposable,
    parse_interval,
    random_module,
    tensor_consistency_check,
    uniserial_check,
)


def _M(n, s, which=0):
    params = CocycleParams.standard(n, s)
    return MajidAlgebra.build(n, s, legal_q_values(params)[which])


def test_interval_realization():
    I = IntervalModule(3, 3, 1, 2)
    assert I.dims() == (0, 1, 1)
    M = I.realize()
    assert M.total_dim() == 2
    assert M.rank_profile(1, 1) == 1
    assert M.rank_profile(1, 2) == 0
    assert str(I) == "I(1,2)"
    with pytest.raises(ValueError):
        IntervalModule(3, 3, 0, 4)
    with pytest.raises(ValueError):
        IntervalModule(3, 3, 0, 0)


def test_parse_interval():
    I = parse_interval("I(2, 3)", 4, 4)
    assert (I.top, I.length) == (2, 3)
    assert parse_interval("I(-1,1)", 4, 4).top == 3
    with pytest.raises(ValueError):
        parse_interval("J(0,1)", 4, 4)


def test_indecomposables_count():
    mods = indecomposables(3, 4)
    assert len(mods) == 12
    assert len({(I.top, I.length) for I in mods}) == 12
    with pytest.raises(ValueError):
        indecomposables(1, 2)


def test_nilpotency_enforced():
    one = CycloNum.one()
    # a length-2 cycle rep with invertible arrows is not nilpotent
    with pytest.raises(NotAComoduleError):
        CycleModule(2, 2, (1, 1), [[[one]], [[one]]])
    # wrong arrow shape
    with pytest.raises(ValueError):
        CycleModule(2, 2, (1, 1), [[[one, one]], [[one]]])


def test_module_json_round_trip():
    M = IntervalModule(3, 3, 0, 3).realize()
    doc = M.to_json()
    M2 = CycleModule.from_json(doc)
    assert M2.dims == M.dims
    assert M2.to_json() == doc


def test_decompose_intervals_and_sums():
    n, d = 3, 3
    for I in indecomposables(n, d):
        assert decompose(I.realize()) == {(I.top, I.length): 1}
    S = direct_sum([IntervalModule(n, d, 0, 2).realize(),
                    IntervalModule(n, d, 0, 2).realize(),
                    IntervalModule(n, d, 2, 1).realize()])
    assert decompose(S) == {(0, 2): 2, (2, 1): 1}
    with pytest.raises(ValueError):
        direct_sum([])


def test_hom_dims_between_intervals():
    n, d = 3, 3
    I = IntervalModule(n, d, 0, 3).realize()
    S0 = IntervalModule(n, d, 0, 1).realize()
    S2 = IntervalModule(n, d, 2, 1).realize()
    assert hom_dim(I, I) == 1
    assert hom_dim(I, S0) == 1   # top of I is vertex 0
    assert hom_dim(S2, I) == 1   # socle of I is vertex 2
    assert hom_dim(S0, I) == 0
    assert hom_dim(I, S2) == 0
    assert hom_dim(S0, S2) == 0
    with pytest.raises(ValueError):
        hom_dim(S0, IntervalModule(2, 2, 0, 1).realize())


def test_indecomposability_tests():
    n, d = 3, 3
    I = IntervalModule(n, d, 1, 3)
    assert is_indecomposable(I.realize())
    assert uniserial_check(I.realize())
    S = direct_sum([I.realize(), IntervalModule(n, d, 1, 1).realize()])
    assert not is_indecomposable(S)
    assert not uniserial_check(S)


def test_brute_force_decompose_matches():
    rng = random.Random(7)
    for _ in range(5):
        M, multiset = random_module(3, 3, rng, max_total=6)
        assert decompose(M) == multiset
        assert brute_force_decompose(M) == multiset


def test_random_module_is_scrambled_but_equivalent():
    rng = random.Random(1)
    M, multiset = random_module(2, 4, rng, max_total=7)
    assert M.total_dim() == sum(l * m for (_, l), m in multiset.items())
    assert decompose(M) == multiset


def test_tensor_of_simples_shifts():
    M = _M(2, 1)
    Vi = IntervalModule(2, 4, 1, 1).realize()
    Vj = IntervalModule(2, 4, 1, 1).realize()
    T = comodule_tensor(M, Vi, Vj)
    assert decompose(T) == {(0, 1): 1}


def test_unit_comodule_is_neutral():
    M = _M(2, 1)
    unit = IntervalModule(2, 4, 0, 1).realize()
    for I in indecomposables(2, 4):
        X = I.realize()
        assert decompose(comodule_tensor(M, unit, X)) == {(I.top, I.length): 1}
        assert decompose(comodule_tensor(M, X, unit)) == {(I.top, I.length): 1}


def test_tensor_consistency():
    M = _M(2, 1)
    X = IntervalModule(2, 4, 0, 2).realize()
    Y = IntervalModule(2, 4, 1, 3).realize()
    assert tensor_consistency_check(M, X, Y)
    assert tensor_consistency_check(M, Y, X)
    with pytest.raises(ValueError):
        comodule_tensor(M, X, IntervalModule(3, 3, 0, 1).realize())


def test_tensor_additive_in_summands():
    M = _M(2, 1)
    X = IntervalModule(2, 4, 0, 2).realize()
    Y = IntervalModule(2, 4, 1, 1).realize()
    Z = IntervalModule(2, 4, 1, 2).realize()
    lhs = decompose(comodule_tensor(M, direct_sum([X, Y]), Z))
    a = decompose(comodule_tensor(M, X, Z))
    b = decompose(comodule_tensor(M, Y, Z))
    want = dict(a)
    for k, v in b.items():
        want[k] = want.get(k, 0) + v
    assert lhs == want


def test_fusion_is_the_group_ring():
    M = _M(3, 1)
    F = fusion_data(M)
    for i in range(3):
        for r in range(3):
            for c in range(3):
                assert F.matrices[i][r][c] == (1 if r == (i + c) % 3 else 0)


def test_fp_dimensions():
    M = _M(2, 1)
    F = fusion_data(M)
    for i in range(2):
        value, cert = fp_dimension(F, IntervalModule(2, 4, i, 1).simple_class())
        assert cert == 1 and abs(value - 1) < 1e-9
    value, cert = fp_dimension(F, IntervalModule(2, 4, 0, 3).simple_class())
    assert cert == 3 and abs(value - 3) < 1e-9
    value, cert = fp_dimension(F, (0, 0))
    assert value == 0.0 and cert == 0


def test_fp_dimension_multiplicative_on_tensor():
    M = _M(2, 1)
    F = fusion_data(M)
    X = IntervalModule(2, 4, 0, 2)
    Y = IntervalModule(2, 4, 1, 3)
    T = comodule_tensor(M, X.realize(), Y.realize())
    cls_T = tuple(T.dims)
    _, cert = fp_dimension(F, cls_T)
    assert cert == 2 * 3
