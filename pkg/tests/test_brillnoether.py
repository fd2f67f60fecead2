from fractions import Fraction

import pytest

from segre import (
    BNReport,
    ChernData,
    InvalidParameterError,
    bn_dim_lower_bound,
    bn_nonempty_t,
    bn_report,
    certified_section_count,
    moduli_dim,
    rho,
    rho_crossover_c2,
    stratum_dim,
    stratum_min_sections,
    weak_bn_check,
)


def test_rho_pinned_values():
    assert rho(ChernData(4, 6), 3) == 26
    assert rho(ChernData(2, 4), 1) == 11


def test_rho_at_zero_is_moduli_dim():
    for c1 in range(-9, 10):
        for c2 in range(0, 41):
            c = ChernData(c1, c2)
            assert rho(c, 0) == moduli_dim(c)


def test_rho_integrality_grid():
    # recompute with exact fractions: the halved c1 term must cancel
    for c1 in range(-9, 10):
        for c2 in range(0, 41):
            for t in range(0, 7):
                expected = (
                    4 * c2
                    - c1 * c1
                    - 3
                    - t * (t - Fraction(c1 * c1, 2) - Fraction(3 * c1, 2) + c2 - 2)
                )
                assert expected.denominator == 1
                assert rho(ChernData(c1, c2), t) == expected


def test_rho_rejects_negative_t():
    with pytest.raises(InvalidParameterError):
        rho(ChernData(0, 4), -1)


def test_stratum_min_sections():
    assert stratum_min_sections(2, 1, "even") == 3
    assert stratum_min_sections(3, 3, "odd") == 1
    assert stratum_min_sections(1, 2, "even") == 0
    with pytest.raises(InvalidParameterError):
        stratum_min_sections(2, 0, "even")
    with pytest.raises(InvalidParameterError):
        stratum_min_sections(2, 1, "both")


def test_bn_nonempty_t_values():
    assert bn_nonempty_t(2, 1, "even") == 8
    assert bn_nonempty_t(2, 1, "odd") == 5
    assert bn_nonempty_t(3, 2, "odd") == 8
    with pytest.raises(InvalidParameterError):
        bn_nonempty_t(1, 1, "even")  # k < r fails
    with pytest.raises(InvalidParameterError):
        bn_nonempty_t(2, 1, "even", c2=5)  # below the even gate r^2+2
    with pytest.raises(InvalidParameterError):
        bn_nonempty_t(3, 1, "odd", c2=6)  # below the odd gate r^2-r+1


def test_bn_dim_lower_bound_values():
    assert bn_dim_lower_bound(2, 1, 10, "even") == 16
    assert bn_dim_lower_bound(2, 1, 8, "even") == 19
    # odd k=1 branch evaluated literally: 3*7 - 3*4 + 3*2 + 1
    assert bn_dim_lower_bound(2, 1, 7, "odd") == 16
    # odd k!=1 first branch
    assert bn_dim_lower_bound(3, 2, 20, "odd") == 36


def test_bn_dim_lower_bound_hypotheses():
    with pytest.raises(InvalidParameterError):
        bn_dim_lower_bound(1, 1, 10, "even")  # r >= 2 fails
    with pytest.raises(InvalidParameterError):
        bn_dim_lower_bound(2, 2, 10, "even")  # k < r fails
    with pytest.raises(InvalidParameterError):
        bn_dim_lower_bound(2, 1, 5, "even")  # c2 gate fails
    with pytest.raises(InvalidParameterError):
        bn_dim_lower_bound(2, 1, 3, "odd")


def test_weak_bn_check_values():
    assert weak_bn_check(4) == (16, 3)
    assert weak_bn_check(3) == (11, 3)
    assert weak_bn_check(2) == (7, 2)
    with pytest.raises(InvalidParameterError):
        weak_bn_check(0)
    with pytest.raises(InvalidParameterError):
        weak_bn_check(-2)


def test_weak_bn_chi_really_vanishes():
    # chi(E) = 2 + c1(c1+3)/2 - c2 must be zero at the returned c2
    for c1 in range(1, 10):
        c2, _ = weak_bn_check(c1)
        assert 2 + (c1 * (c1 + 3)) // 2 - c2 == 0


def test_certified_section_count():
    assert certified_section_count(ChernData(0, 1)) is None
    assert certified_section_count(ChernData(0, 6)) == 0  # r=0: no sections certified
    # (4, 6): stratum guarantee 3, curve construction reaches 8
    assert certified_section_count(ChernData(4, 6)) == 8


def test_bn_report():
    rep = bn_report(ChernData(4, 6), 3)
    assert isinstance(rep, BNReport)
    assert rep.rho == 26 and rep.nonempty_certified
    rep8 = bn_report(ChernData(4, 6), 8)
    assert rep8.nonempty_certified
    assert rep8.lower_bound is not None  # threshold t of the k=1 stratum
    rep9 = bn_report(ChernData(4, 6), 9)
    assert not rep9.nonempty_certified


def test_rho_crossover():
    with pytest.raises(InvalidParameterError):
        rho_crossover_c2(2, 2, "even")  # needs r > k
    for r, k, parity in ((2, 1, "even"), (3, 1, "even"), (3, 2, "odd"), (4, 2, "even")):
        c_star = rho_crossover_c2(r, k, parity)
        t = stratum_min_sections(r, k, parity)
        c1 = 2 * r if parity == "even" else 2 * r - 1
        s = 2 * k if parity == "even" else 2 * k - 1
        # permanent from the crossover on: check a spread of larger c2
        for c2 in range(c_star, c_star + 6):
            assert rho(ChernData(c1, c2), t) < stratum_dim(ChernData(c1, c2), s)
        if c_star > k * k + k + (r * r if parity == "even" else r * r - r):
            prev = ChernData(c1, c_star - 1)
            assert rho(prev, t) >= stratum_dim(prev, s)
