import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segre import (
    QQ,
    ConsistencyError,
    ExtensionBundle,
    PlanePoint,
    PrimeField,
    RngState,
    ZeroCycle,
    bundle_from_json,
    cayley_bacharach,
    chern,
    h0_ideal,
    h0_twist,
    is_locally_free,
    is_stable,
    random_cycle,
    segre_invariant,
)

FBIG = PrimeField(10007)


def qpoints(*coords):
    return [PlanePoint(QQ, c) for c in coords]


Z3 = ZeroCycle(QQ, qpoints((1, 0, 0), (0, 1, 0), (0, 0, 1)))
COLLINEAR = ZeroCycle(QQ, qpoints((1, 0, 0), (0, 1, 0), (1, 1, 0)))
EMPTY = ZeroCycle(QQ)


def test_presentation_requires_a_le_b():
    with pytest.raises(ValueError):
        ExtensionBundle(1, -1, EMPTY)


def test_chern_classes():
    assert chern(ExtensionBundle(-1, 1, Z3)) == (0, 2)
    five = ZeroCycle(QQ, qpoints((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)))
    assert chern(ExtensionBundle(-2, 1, five)) == (-1, 3)
    assert chern(ExtensionBundle(-3, 3, EMPTY)) == (0, -9)


def test_cayley_bacharach_examples():
    assert cayley_bacharach(-2, Z3) is True
    assert cayley_bacharach(1, COLLINEAR) is True
    assert cayley_bacharach(1, Z3) is False


def test_cayley_bacharach_single_point():
    one = ZeroCycle(QQ, qpoints((1, 2, 3)))
    assert cayley_bacharach(0, one) is False  # constants do not vanish at the point
    assert cayley_bacharach(-1, one) is True


def test_h0_twist_examples():
    e = ExtensionBundle(-1, 1, Z3)
    assert h0_twist(e, 0) == 0
    assert h0_twist(e, 1) == 4
    split = ExtensionBundle(-2, 2, EMPTY)
    assert h0_twist(split, -2) == 1


def test_segre_examples():
    res = segre_invariant(ExtensionBundle(-1, 1, Z3))
    assert (res.s, res.witness_m, res.stable) == (2, 1, True)

    split = segre_invariant(ExtensionBundle(-3, 3, EMPTY))
    assert (split.s, split.witness_m, split.stable) == (-6, -3, False)

    one = ZeroCycle(QQ, qpoints((1, 4, 5)))
    res = segre_invariant(ExtensionBundle(-1, 0, one))
    assert (res.s, res.stable) == (1, True)


def test_segre_result_invariant_relation():
    for bundle in (
        ExtensionBundle(-1, 1, Z3),
        ExtensionBundle(-2, 2, EMPTY),
        ExtensionBundle(-1, 0, ZeroCycle(QQ, qpoints((1, 4, 5)))),
    ):
        res = segre_invariant(bundle)
        assert res.s == bundle.c1 + 2 * res.witness_m
        assert res.stable == (res.s > 0)


def test_is_stable_examples():
    assert is_stable(ExtensionBundle(-1, 1, Z3)) is True
    assert is_stable(ExtensionBundle(-1, 1, EMPTY)) is False
    z10 = random_cycle(10, FBIG, RngState(11))
    assert h0_ideal(3, z10) == 0
    assert is_stable(ExtensionBundle(-2, 2, z10)) is True


def test_local_freeness_flag():
    # split data over an empty cycle is always locally free
    assert is_locally_free(ExtensionBundle(-2, 2, EMPTY)) is True
    # (b - a - 3) = 1 with three non-collinear points fails Cayley-Bacharach
    assert is_locally_free(ExtensionBundle(-2, 2, Z3)) is False
    assert is_locally_free(ExtensionBundle(-1, 1, Z3)) is True  # degree -1: vacuous


def test_twist_invariance_of_segre():
    z = random_cycle(5, FBIG, RngState(3))
    base = segre_invariant(ExtensionBundle(-1, 1, z)).s
    for shift in (-2, -1, 1, 3):
        assert segre_invariant(ExtensionBundle(-1 + shift, 1 + shift, z)).s == base


@st.composite
def normalized_even_bundles(draw):
    k = draw(st.integers(1, 3))
    c2 = draw(st.integers(k * k + k, 14))
    seed = draw(st.integers(0, 2 ** 32))
    cycle = random_cycle(c2 + k * k, FBIG, RngState(seed))
    return k, c2, cycle


@settings(max_examples=30, deadline=None)
@given(normalized_even_bundles())
def test_even_invariant_matches_ideal_vanishing(params):
    k, c2, cycle = params
    bundle = ExtensionBundle(-k, k, cycle)
    s = segre_invariant(bundle).s
    if h0_ideal(2 * k - 1, cycle) == 0:
        assert s == 2 * k
    else:
        assert s <= 2 * k - 2


@st.composite
def normalized_odd_bundles(draw):
    k = draw(st.integers(1, 3))
    c2 = draw(st.integers(k * k, 14))
    seed = draw(st.integers(0, 2 ** 32))
    cycle = random_cycle(c2 + k * k - k, FBIG, RngState(seed))
    return k, c2, cycle


@settings(max_examples=30, deadline=None)
@given(normalized_odd_bundles())
def test_odd_invariant_matches_ideal_vanishing(params):
    k, c2, cycle = params
    bundle = ExtensionBundle(-k, k - 1, cycle)
    s = segre_invariant(bundle).s
    if h0_ideal(2 * k - 2, cycle) == 0:
        assert s == 2 * k - 1
    else:
        assert s <= 2 * k - 3


def test_bundle_json_round_trip():
    bundle = ExtensionBundle(-2, 2, random_cycle(6, FBIG, RngState(2)))
    blob = json.dumps(bundle.to_json())
    assert bundle_from_json(json.loads(blob)) == bundle
