import pytest

from segre import (
    ChernData,
    InvalidParameterError,
    admissible_invariants,
    is_admissible,
    max_admissible_k,
    moduli_dim,
    normalize_chern,
    open_stratum,
    stratum_dim,
    stratum_dim_branch,
)


def test_moduli_dim():
    assert moduli_dim(ChernData(0, 6)) == 21
    assert moduli_dim(ChernData(-1, 4)) == 12
    assert moduli_dim(ChernData(4, 6)) == 5


def test_normalization():
    assert normalize_chern(ChernData(0, 6)) == (True, 0, 6)
    assert normalize_chern(ChernData(4, 6)) == (True, 2, 2)
    assert normalize_chern(ChernData(-1, 4)) == (False, 0, 4)
    assert normalize_chern(ChernData(3, 11)) == (False, 2, 9)


def test_admissible_sets():
    assert [r.s for r in admissible_invariants(ChernData(0, 6))] == [2, 4]
    assert [r.s for r in admissible_invariants(ChernData(-1, 4))] == [1, 3]
    assert [r.s for r in admissible_invariants(ChernData(4, 6))] == [2]
    assert admissible_invariants(ChernData(0, 1)) == []
    assert admissible_invariants(ChernData(0, -2)) == []


def test_stratum_dim_pinned_values():
    assert stratum_dim(ChernData(0, 6), 2) == 20
    assert stratum_dim(ChernData(0, 6), 4) == 21 == moduli_dim(ChernData(0, 6))
    assert stratum_dim(ChernData(-1, 4), 3) == 12 == moduli_dim(ChernData(-1, 4))


def test_stratum_dim_rejects_bad_invariants():
    with pytest.raises(InvalidParameterError):
        stratum_dim(ChernData(0, 6), 6)  # k=3 needs c2 >= 12
    with pytest.raises(InvalidParameterError):
        stratum_dim(ChernData(0, 6), 3)  # wrong parity
    with pytest.raises(InvalidParameterError):
        stratum_dim(ChernData(0, 6), 0)  # k must be positive
    with pytest.raises(InvalidParameterError):
        stratum_dim(ChernData(0, 6), -2)


def test_open_stratum():
    top = open_stratum(ChernData(0, 6))
    assert (top.s, top.dim, top.is_open) == (4, 21, True)
    top = open_stratum(ChernData(-1, 4))
    assert (top.s, top.dim) == (3, 12)
    top = open_stratum(ChernData(4, 16))
    assert (top.s, top.k, top.dim) == (6, 3, 45)
    with pytest.raises(InvalidParameterError):
        open_stratum(ChernData(0, 1))


def test_exactly_one_open_stratum_attains_moduli_dim():
    for c1 in range(-9, 10):
        for c2 in range(-2, 41):
            c = ChernData(c1, c2)
            reports = admissible_invariants(c)
            if not reports:
                continue
            full = [r for r in reports if r.dim == moduli_dim(c)]
            assert len(full) == 1
            assert full[0] is reports[-1]  # the one with maximal k
            assert full[0].is_open
            assert max_admissible_k(c) == full[0].k


def test_dims_strictly_increase_up_to_open_stratum():
    for c1 in range(-9, 10):
        for c2 in range(-2, 41):
            dims = [r.dim for r in admissible_invariants(ChernData(c1, c2))]
            for a, b in zip(dims, dims[1:]):
                assert a < b


def test_branch_boundary_continuity():
    # at the branch boundary both closed forms must agree exactly
    for r in range(-3, 4):
        for k in range(1, 5):
            c2 = r * r + k * k + 3 * k + 1  # even boundary
            c = ChernData(2 * r, c2)
            assert 3 * c2 - 3 * r * r + k * k + 3 * k - 2 == 4 * c2 - 4 * r * r - 3
            if is_admissible(c, 2 * k):
                assert stratum_dim(c, 2 * k) == 4 * c2 - 4 * r * r - 3
            c2 = r * r - r + k * k + 2 * k  # odd boundary
            assert (
                3 * c2 + 3 * r - 3 * r * r + k * k + 2 * k - 4
                == 4 * c2 + 4 * r - 4 * r * r - 4
            )


def test_twist_invariance_of_stratum_dim():
    for r in range(-4, 5):
        for k in (1, 2, 3):
            for c2n in range(k * k + k, 25):
                shifted = ChernData(2 * r, c2n + r * r)
                assert stratum_dim(shifted, 2 * k) == stratum_dim(ChernData(0, c2n), 2 * k)


def test_branch_labels():
    assert stratum_dim_branch(ChernData(0, 6), 2) == "c2 > 5"
    assert stratum_dim_branch(ChernData(0, 6), 4) == "c2 <= 11"
