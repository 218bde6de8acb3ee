from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mqg.cyclo import CycloNum, root_of_unity
from mqg.quiver import (
    FiniteGroup,
    Path,
    PathVector,
    Quiver,
    RamificationDatum,
    comultiply,
    counit,
    hopf_quiver,
    is_connected,
    parse_path,
    thin_splits,
)


def test_cyclic_group():
    g = FiniteGroup.cyclic(5)
    assert g.order == 5
    assert g.mul(3, 4) == 2
    assert g.inv(2) == 3
    assert len(g.conjugacy_classes) == 5


def test_symmetric_group():
    g = FiniteGroup.symmetric(3)
    assert g.order == 6
    # class sizes of S3: 1, 3, 2
    assert sorted(len(c) for c in g.conjugacy_classes) == [1, 2, 3]


def test_bad_cayley_tables():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])  # row not a permutation
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])  # 0 not the unit
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 0], [0, 1]])  # not square


def test_ramification_datum_validation():
    g = FiniteGroup.cyclic(3)
    with pytest.raises(ValueError):
        RamificationDatum(g, {})
    with pytest.raises(ValueError):
        RamificationDatum(g, {c: -1 for c in g.conjugacy_classes})
    r = RamificationDatum.on_class_of(g, 1)
    assert sum(r.coefficients.values()) == 1


def test_hopf_quiver_cycle():
    g = FiniteGroup.cyclic(4)
    r = RamificationDatum.on_class_of(g, 1)
    q = hopf_quiver(g, r)
    assert len(q.vertices) == 4
    assert len(q.arrows) == 4
    assert all((s + 1) % 4 == t for s, t, _ in q.arrows)
    assert is_connected(q)


def test_hopf_quiver_disconnected():
    g = FiniteGroup.cyclic(4)
    r = RamificationDatum.on_class_of(g, 2)  # <g^2> is proper
    assert not is_connected(hopf_quiver(g, r))
    assert not is_connected(hopf_quiver(g, RamificationDatum.zero(g)))


def test_hopf_quiver_multiplicity():
    g = FiniteGroup.symmetric(3)
    cls_ = next(c for c in g.conjugacy_classes if len(c) == 3)
    r = RamificationDatum(g, {c: (2 if c is cls_ else 0)
                              for c in g.conjugacy_classes})
    q = hopf_quiver(g, r)
    assert len(q.arrows) == 6 * 3 * 2
    assert is_connected(q)


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver((0, 1), ((0, 2, 0),))


def test_path_basics():
    p = Path(4, 6, 3)
    assert p.source == 2 and p.target == 1
    assert str(p) == "p(2,3)"
    assert Path(4, 1, 0).is_vertex()
    with pytest.raises(ValueError):
        Path(4, 0, -1)


def test_parse_path():
    assert parse_path("p(2,3)", 4) == Path(4, 2, 3)
    assert parse_path("g^3", 4) == Path(4, 3, 0)
    assert parse_path("g2", 4) == Path(4, 2, 0)
    assert parse_path("X_1", 4) == Path(4, 0, 1)
    assert parse_path("X4", 4) == Path(4, 3, 1)
    with pytest.raises(ValueError):
        parse_path("nonsense", 4)


def test_comultiply_and_counit():
    p = Path(3, 1, 2)
    splits = comultiply(p)
    assert len(splits) == 3
    for left, right in splits:
        assert left.length + right.length == 2
        assert right.source == 1
        assert left.source == (1 + right.length) % 3
        assert left.target == p.target
    assert counit(Path(3, 2, 0)) == 1
    assert counit(p) == 0


def test_path_vector_algebra():
    one = CycloNum.one()
    z = root_of_unity(4)
    p = Path(4, 0, 1)
    q = Path(4, 1, 1)
    v = PathVector(4, {p: one, q: z})
    w = v + v
    assert w.terms[p] == one * 2
    assert (v - v).is_zero()
    assert v.scale(z).terms[q] == z * z
    with pytest.raises(ValueError):
        PathVector(4, {Path(3, 0, 1): one})


def test_thin_splits_counts():
    p = Path(3, 1, 2)
    for parts in (2, 3, 5):
        out = thin_splits(p, parts)
        assert len(out) == comb(parts, 2)
        for d, segments in out:
            assert sum(d) == 2
            assert len(segments) == parts
            # segments traverse the path: sources advance with each arrow
            k = 0
            for slot, seg in zip(d, segments):
                assert seg.length == slot
                assert seg.source == (1 + k) % 3
                k += slot
    with pytest.raises(ValueError):
        thin_splits(p, 1)


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 6), st.integers(0, 11), st.integers(0, 5))
def test_comultiply_coassociative(n, i, l):
    def key(*paths):
        return tuple((q.source, q.length) for q in paths)

    p = Path(n, i, l)
    lhs = sorted(
        key(x1, x2, y)
        for x, y in comultiply(p)
        for x1, x2 in comultiply(x)
    )
    rhs = sorted(
        key(x, y1, y2)
        for x, y in comultiply(p)
        for y1, y2 in comultiply(y)
    )
    assert lhs == rhs


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 6), st.integers(0, 11), st.integers(0, 5))
def test_comultiply_counit_law(n, i, l):
    p = Path(n, i, l)
    left = [x for x, y in comultiply(p) if counit(y)]
    right = [y for x, y in comultiply(p) if counit(x)]
    assert left == [p] and right == [p]
