from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dpfib import models
from dpfib.errors import InvalidArgument, NotApplicable, NotRealizable, ProductCase
from dpfib.models import ANTI_K, FIBER, S0, F_CURVE, CurveClassV, DivisorClassV, Dp2Box


def struct_predicate(e, n1, n2, n3):
    if not 0 <= n1 <= n2 <= n3 or n1 + n2 + n3 == 0:
        return False
    if e == 0:
        return n1 % 2 == 0 and n3 % 2 == 0 and n1 + n3 == 2 * n2
    return e == n1 and n1 % 2 == 0 and n3 == 2 * n2 and n2 >= 3 * n1


@pytest.mark.parametrize("params, clause", [
    ((0, 0, 1, 3), "2*n2 = n1 + n3"),
    ((0, 1, 2, 3), "n1 even"),
    ((2, 2, 6, 13), "n3 = 2*n2"),
    ((2, 2, 5, 10), "n2 >= 3*n1"),
    ((4, 2, 6, 12), "epsilon = n1"),
])
def test_dp1_clauses(params, clause):
    with pytest.raises(NotRealizable) as info:
        models.build_dp1(*params)
    assert info.value.clause == clause


def test_dp1_product_and_order():
    with pytest.raises(ProductCase):
        models.build_dp1(0, 0, 0, 0)
    with pytest.raises(InvalidArgument):
        models.build_dp1(0, 2, 1, 0)
    with pytest.raises(InvalidArgument):
        models.build_dp1(0, 0, 1.5, 3)


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12), st.integers(0, 24))
def test_dp1_validation_matches_predicate(e, n1, n2, n3):
    try:
        models.build_dp1(e, n1, n2, n3)
        built = True
    except (NotRealizable, ProductCase, InvalidArgument):
        built = False
    assert built == struct_predicate(e, n1, n2, n3)


def test_dp1_enumeration_matches_brute_force():
    N = 24
    brute = sorted((e, n1, n2, n3) for n3 in range(N + 1) for n2 in range(n3 + 1)
                   for n1 in range(n2 + 1) for e in range(n3 + 1)
                   if struct_predicate(e, n1, n2, n3))
    assert [m.params for m in models.enumerate_models(1, N)] == brute


def test_dp1_derived_quantities():
    m = models.build_dp1(2, 2, 6, 12)
    assert m.b == 20 and m.a_prime == -6 and m.a == -12
    assert m.case_tag is models.CaseTag.EPS_POS
    m0 = models.build_dp1(0, 0, 1, 2)
    assert m0.a_prime == -1 and m0.case_tag is models.CaseTag.EPS_ZERO


def test_golden_lists():
    sum2 = [m.params for m in models.enumerate_models(2, 2)]
    sum1 = [m.params for m in models.enumerate_models(2, 1)]
    assert sorted(sum2) == sorted([(1, 0, 0), (0, 1, 1), (0, 0, 2), (-1, 2, 2),
                                   (-2, 2, 4), (-3, 2, 6), (-4, 2, 8)])
    assert sorted(sum1) == sorted([(0, 0, 1), (-1, 1, 2), (-2, 1, 4)])


def test_dp2_rejects_small_sum():
    for a in range(-6, 3):
        for n2 in range(8):
            for n1 in range(n2 + 1):
                if 2 * a + n1 + n2 <= 0:
                    with pytest.raises(NotRealizable):
                        models.build_dp2(a, n1, n2)


def test_dp2_existence_flag():
    assert models.build_dp2(0, 0, 1).existence_verified
    assert not models.build_dp2(0, 1, 2).existence_verified


def test_enumerate_bad_bounds():
    for degree, bound in [(1, -1), (2, 3), (2, Dp2Box(-1, 2)), (3, 5)]:
        with pytest.raises(InvalidArgument):
            models.enumerate_models(degree, bound)


def test_json_roundtrip():
    for m in models.enumerate_models(1, 8) + models.enumerate_models(2, Dp2Box(2, 3)):
        assert models.model_from_json(m.to_json()) == m


def test_table_values_0012():
    m = models.build_dp1(0, 0, 1, 2)
    t = models.intersection_table(m)
    assert t.anti_k_s0 == 1 and t.anti_k_f == 1 and t.F_s0 == 1 and t.F_f == 0
    assert t.anti_k_square == CurveClassV(1, 3)
    assert t.anti_k_cube == 4


def test_pairing_formulas():
    m = models.build_dp1(2, 2, 6, 12)
    assert models.pair(m, ANTI_K, S0) == 2 + 1 - 6
    assert models.pair(m, FIBER, F_CURVE) == 0
    m2 = models.build_dp2(-1, 2, 2)
    assert models.pair(m2, ANTI_K, S0) == 2 - (-1) - 4
    assert models.intersect(m2, ANTI_K, FIBER) == CurveClassV(0, 2)


ALL_MODELS = models.enumerate_models(1, 30) + models.enumerate_models(2, Dp2Box(8, 16))


@pytest.mark.parametrize("m", ALL_MODELS[::25], ids=str)
def test_table_matches_double_cover(m):
    t, c = models.intersection_table(m), models.table_via_double_cover(m)
    assert (t.anti_k_cube, t.anti_k_square, t.anti_k_s0, t.anti_k_f, t.F_s0, t.F_f) == (
        c.anti_k_cube, c.anti_k_square, c.anti_k_s0, c.anti_k_f, c.F_s0, c.F_f)


def test_dp2_cube_identity():
    for m in models.enumerate_models(2, Dp2Box(10, 20)):
        assert models.anti_k_cube(m) == 12 - 6 * m.a - 4 * m.b
        assert models.anti_k_cube_from_triple_products(m) == models.anti_k_cube(m)


def test_dp1_views():
    for m in models.enumerate_models(1, 20):
        G = models.g_divisor(m)
        # G_V is -K shifted by fibers and restricts to f with degree 1
        assert models.pair(m, G, F_CURVE) == 1
        x, y = models.to_view(m, -ANTI_K)
        assert models.from_view(m, x, y) == -ANTI_K
        H = models.h_divisor(m)
        # H = pull-back of M, so H.f = 2 (double cover of the quadric fiber line)
        assert models.pair(m, H, F_CURVE) == 2


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(models.enumerate_models(1, 20)), st.integers(0, 6), st.integers(-10, 10))
def test_restrict_to_G_matches_intersection(m, n, f):
    D = DivisorClassV(n, f)
    r = models.restrict_to_G(m, D)
    cls = models.intersect(m, D, models.g_divisor(m))
    assert (r.section, r.fiber) == (cls.s0, cls.f)
    assert r.surface_type == m.n1


def test_restrict_to_G_degree_two():
    with pytest.raises(NotApplicable):
        models.restrict_to_G(models.build_dp2(0, 0, 1), ANTI_K)


def test_construction_identities():
    for m in models.enumerate_models(1, 20):
        for beta_h in (1, 2, 5):
            rep = models.construction_identities_dp1(m, beta_h)
            assert all(rep.checks.values())
            assert rep.N == beta_h + m.epsilon


def test_flop_map():
    T = models.flop_transform_222()
    assert T.compose(T).matrix == ((1, 0), (0, 1))
    assert T.apply(FIBER) == ANTI_K - FIBER
    for n in range(30):
        for l in range(n + 1):  # noqa: E741
            assert T.apply(DivisorClassV(n, -l)) == DivisorClassV(n - l, l)
    with pytest.raises(NotApplicable):
        models.flop_transform_222(models.build_dp1(0, 0, 1, 2))


def test_special_section_eps_pos():
    m = models.build_dp1(2, 2, 6, 12)
    assert models.special_section(m) == CurveClassV(1, 1)
    assert models.pair(m, models.g_divisor(m), CurveClassV(1, Fraction(1))) == models.pair(
        m, models.g_divisor(m), S0) + 1
