from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings

from chowlab import errors
from chowlab.chern import (
    boolean_chern_alpha,
    c1_cdminus1,
    c1_ck1_alpha,
    c_ks_coefficient,
    c_ks_expectation,
    chern_alpha,
    chern_report,
    coeff_f,
    coeff_g,
    deg_alpha_beta,
    f_recursive,
    g_recursive,
    h2_from_chern,
    h4_permutahedron,
    h4_permutahedron_check,
    h_from_moments,
    miyaoka_yau_alpha,
    perm_c1k,
    perm_ck,
    perm_ck_alternative,
    perm_ck_primary,
    perm_pk,
    t_ratio_scan,
    todd_alpha_check,
    todd_rhs,
    top_chern,
    verify_chern_inequality,
    weak_map_monotonicity_check,
)
from chowlab.chow import chow_via_flags, eulerian_numbers
from chowlab.flags import flag_table, jmask, jset
from chowlab.matroid import make_boolean, make_projective_geometry, make_uniform
from chowlab.moments import central_moment, distribution, eulerian_distribution, factorial_moment

from conftest import small_matroids


@pytest.mark.parametrize(
    "k, J, d, value", [(2, (), 2, 3), (2, (2,), 2, 1), (1, (), 3, 4), (3, (1, 3), 4, 0)]
)
def test_coeff_f_examples(k, J, d, value):
    assert coeff_f(k, J, d) == value


@pytest.mark.parametrize("k, J, d, value", [(2, (), 2, 9), (2, (2,), 2, -1)])
def test_coeff_g_examples(k, J, d, value):
    assert coeff_g(k, J, d) == value


@pytest.mark.parametrize("d", range(0, 9))
def test_closed_forms_match_recurrence(d):
    for k in range(d + 1):
        for mask in range(1 << d):
            J = jset(mask)
            assert coeff_f(k, J, d) == f_recursive(k, mask, d)
            assert coeff_g(k, J, d) == g_recursive(k, mask, d)


def test_recurrence_shape():
    for d in range(1, 7):
        for k in range(1, d):
            for mask in range(1 << k):
                assert f_recursive(k, mask, d + 1) == f_recursive(k, mask, d) + f_recursive(k - 1, mask, d)


def test_top_chern_examples(fano):
    assert top_chern(fano) == 10
    assert top_chern(make_boolean(3)) == 6
    assert top_chern(make_boolean(5)) == 120


def test_c1_cdminus1_examples(fano):
    assert c1_cdminus1(fano) == 2
    assert c1_cdminus1(make_boolean(3)) == 6
    # rank 2: c_1 c_0 = c_1 and the inequality is an equality
    assert verify_chern_inequality(make_uniform(2, 3))[2]


@pytest.mark.parametrize(
    "m, lhs, eq",
    [(make_projective_geometry(2, 2), -8, False), (make_boolean(3), 0, True), (make_uniform(3, 4), None, False)],
)
def test_chern_inequality_examples(m, lhs, eq):
    value, holds, equality = verify_chern_inequality(m)
    assert holds and equality == eq
    if lhs is not None:
        assert value == lhs


def test_chern_alpha_examples(fano):
    assert chern_alpha(make_boolean(3), 2) == 6
    # c_2 alpha^{d-2} = binom(d+1, 2) + N_2
    assert chern_alpha(fano, 2) == 3 + 7


def test_c1_squared_formula(fano):
    for m in (fano, make_projective_geometry(3, 2), make_uniform(3, 6)):
        n2 = flag_table(m)[jmask([2])]
        assert c1_ck1_alpha(m, 2) == (m.d + 1) ** 2 - n2


@pytest.mark.parametrize(
    "m, value",
    [(make_projective_geometry(2, 2), 32), (make_boolean(4), 0), (make_projective_geometry(3, 2), 319)],
)
def test_miyaoka_yau(m, value):
    assert miyaoka_yau_alpha(m) == (value, True)


def test_miyaoka_yau_needs_d2():
    with pytest.raises(errors.RankTooSmall):
        miyaoka_yau_alpha(make_uniform(2, 4))


def test_deg_alpha_beta_examples(fano):
    assert deg_alpha_beta(fano, 0) == 1
    assert deg_alpha_beta(make_boolean(3), 1) == 2
    assert deg_alpha_beta(fano, 2) == 8


def test_h_from_moments_examples(fano):
    assert h_from_moments(fano, 2) == 2 == h2_from_chern(fano)
    assert h_from_moments(fano, 0) == top_chern(fano)
    assert h_from_moments(fano, 3) == 0


@given(small_matroids)
@settings(max_examples=60, deadline=None)
def test_chern_properties(m):
    assert top_chern(m) == chow_via_flags(m)(1)
    assert h_from_moments(m, 2) == h2_from_chern(m)
    lhs, holds, eq = verify_chern_inequality(m)
    assert holds
    if m.d >= 1:
        var = central_moment(distribution(m), 2)
        assert eq == (var == Fraction(m.d + 2, 12))
    for k in range(m.d + 1):
        v = chern_alpha(m, k)
        assert v.denominator == 1 and v >= boolean_chern_alpha(m.d, k)


@given(small_matroids)
@settings(max_examples=40, deadline=None)
def test_todd(m):
    for k in range(min(3, m.d) + 1):
        assert todd_alpha_check(m, k)


@pytest.mark.parametrize("d", range(2, 9))
def test_todd_second_component_closed_form(d):
    assert todd_rhs(d, 2) == Fraction((d + 1) * (3 * d + 2), 24)


def test_todd_rejects_k4():
    with pytest.raises(errors.Unsupported):
        todd_alpha_check(make_boolean(6), 4)


def test_weak_map(fano):
    assert weak_map_monotonicity_check(make_uniform(3, 7), fano, 2)
    assert weak_map_monotonicity_check(fano, fano, 1)
    with pytest.raises(errors.NotAWeakMap):
        weak_map_monotonicity_check(fano, make_uniform(3, 7), 2)


def test_perm_examples():
    assert perm_ck(4, 2) == 130
    assert perm_c1k(4, 1) == 120
    assert perm_c1k(4, 2) == 100
    assert perm_c1k(2, 1) == 6
    assert perm_pk(4, 2) == -160
    assert perm_ck(4, 1) == 120


@pytest.mark.parametrize("d", range(2, 13))
def test_newton_identity_p1_and_p2(d):
    assert perm_pk(d, 1) == perm_c1k(d, 1)
    if d >= 4:
        # p_2 = c_1^2 - 2 c_2, checked against c_{d-2}
        assert perm_pk(d, 2) == perm_c1k(d, 2) - 2 * perm_ck(d, 2)


@pytest.mark.parametrize("d", range(1, 13))
def test_ck_formulas_agree(d):
    for k in range(0, d + 1):
        assert perm_ck_primary(d, k) == perm_ck_alternative(d, k)


@pytest.mark.parametrize("d", range(4, 9))
def test_h4_permutahedron(d):
    assert h4_permutahedron_check(d)
    assert h_from_moments(make_boolean(d + 1), 4) == h4_permutahedron(d)


def test_perm_matches_boolean_matroid():
    # the permutahedral variety is the wonderful model of the Boolean matroid
    for d in range(2, 8):
        b = make_boolean(d + 1)
        assert top_chern(b) == factorial(d + 1)
        assert c1_cdminus1(b) == perm_c1k(d, 1)


@pytest.mark.parametrize("k, s, value", [(0, 4, 24), (3, 3, 1), (2, 3, 7)])
def test_c_ks_examples(k, s, value):
    assert c_ks_coefficient(k, s) == value


@pytest.mark.parametrize("s", range(1, 9))
def test_c_ks_is_shifted_binomial_moment(s):
    # c_{k,s}/s! = E[binom(s - Y, k)] = E[binom(1 + Y, k)] for Y ~ A(s, .)/s!
    dist = eulerian_distribution(s - 1)
    for k in range(s + 1):
        c = c_ks_coefficient(k, s)
        assert c == c_ks_expectation(k, s)
        shifted = sum(w * comb(1 + y, k) for y, w in enumerate(dist.weights))
        assert Fraction(c, factorial(s)) == shifted


def test_c_ks_is_not_the_unshifted_moment():
    dist = eulerian_distribution(2)
    assert Fraction(c_ks_coefficient(2, 3), 6) != factorial_moment(dist, 2)


def test_report_and_scan(fano, corpus):
    r = chern_report(fano)
    assert r.c_d == 10 and r.c1_cd1 == 2 and r.h_values[0] == 10
    assert r.alpha_rows[2][0] == 10 and r.alpha_rows[2][2] == 6
    ratio = t_ratio_scan(corpus, 2)
    assert ratio is not None and ratio > 0


def test_eulerian_rows_sum():
    for n in range(1, 9):
        assert sum(eulerian_numbers(n)) == factorial(n)
