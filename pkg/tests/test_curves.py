import itertools

import numpy as np
import pytest

from agtrellis.bounds import cor3_4_profile
from agtrellis.code import (
    dual,
    is_mds,
    min_distance_bruteforce,
    min_state_complexity_exhaustive,
    permute,
    state_profile,
)
from agtrellis.curves import (
    INFINITY,
    EllipticCurve,
    ell1_ell2,
    ell_one_point,
    elliptic_create,
    elliptic_one_point_code,
    elliptic_predicted_s_T,
    elliptic_profile_from_divisors,
    find_curves,
    find_selfdual_elliptic,
    hermitian_code,
    hermitian_points,
    idempotent_count,
    ordering_search,
    reed_solomon,
)
from agtrellis.gf import field_create, field_of_order

CURVES = [
    (5, (0, 0, 0, 1, 1)),
    (5, (0, 0, 0, 4, 1)),
    (5, (0, 0, 0, 4, 0)),
    (8, (0, 0, 1, 1, 1)),
    (9, (0, 1, 0, 0, 1)),
]


def curve(q, coeffs):
    return elliptic_create(field_of_order(q), *coeffs)


def test_reed_solomon():
    F = field_of_order(5)
    C = reed_solomon(F, 4, 2)
    assert C.generator.tolist() == [[1, 0, 4, 3], [0, 1, 2, 3]]
    assert C.contains([1, 1, 1, 1]) and C.contains([1, 2, 3, 4])
    assert min_distance_bruteforce(C) == 3
    assert min_distance_bruteforce(reed_solomon(F, 3, 3)) == 1
    for q in (5, 7, 8):
        Fq = field_of_order(q)
        for n in range(2, q):
            for k in range(1, n + 1):
                assert is_mds(reed_solomon(Fq, n, k))
    with pytest.raises(ValueError):
        reed_solomon(F, 5, 2)


def test_hermitian_small():
    pts = hermitian_points(2)
    assert len(pts) == 8
    F = field_create(2, 2)
    for x, y in pts:
        assert F.add(F.pow(y, 2), y) == F.pow(x, 3)
    C = hermitian_code(2, 4)
    assert (C.n, C.k) == (8, 4)


def test_hermitian_q5_dimension():
    C = hermitian_code(5, 62)
    assert (C.n, C.k) == (125, 53)
    assert C.field.q == 25


@pytest.mark.parametrize("q,coeffs", CURVES)
def test_group_law(q, coeffs):
    E = curve(q, coeffs)
    pts = E.points
    for P in pts:
        assert E.on_curve(P)
        assert E.add(P, INFINITY) == P
        assert E.add(P, E.neg(P)) is INFINITY
    rng = np.random.default_rng(q)
    idx = rng.integers(0, len(pts), size=(10_000, 3))
    T = E._add_table
    left = T[T[idx[:, 0], idx[:, 1]], idx[:, 2]]
    right = T[idx[:, 0], T[idx[:, 1], idx[:, 2]]]
    assert np.array_equal(left, right)
    assert np.array_equal(T, T.T)
    assert idempotent_count(E) in (1, 2, 4)


def test_group_law_matches_direct_formula():
    E = curve(7, (0, 0, 0, 1, 4))
    for P, Q in itertools.product(E.points, repeat=2):
        assert E.add(P, Q) == E._add(P, Q)


def test_order_and_delta():
    E = curve(5, (0, 0, 0, 1, 1))
    assert E.order == 9 and idempotent_count(E) == 1
    for F in (field_of_order(5), field_of_order(4)):
        for E in itertools.islice(find_curves(F), 0, None, 37):
            delta = idempotent_count(E)
            assert delta in (1, 2, 4)
            if E.order % 2 == 0:
                assert delta in (2, 4)


def test_singular_rejected():
    with pytest.raises(ValueError):
        EllipticCurve(field_of_order(5), 0, 0, 0, 0, 0)


def test_ell_one_point():
    E = curve(5, (0, 0, 0, 1, 1))
    P, Q = E.affine_points[0], E.affine_points[2]
    assert ell_one_point(E, 3, [P, Q]) == 1
    assert ell_one_point(E, 2, [P, E.neg(P)]) == 1
    if E.add(P, Q) is not INFINITY:
        assert ell_one_point(E, 2, [P, Q]) == 0
    assert ell_one_point(E, 1, [P, Q]) == 0


@pytest.mark.parametrize("q,coeffs", CURVES)
def test_elliptic_profiles(q, coeffs):
    E = curve(q, coeffs)
    n = len(E.affine_points)
    rng = np.random.default_rng(n)
    for m in range(2, n - 1):
        C = elliptic_one_point_code(E, m)
        assert C.k == m
        for _ in range(20):
            order = tuple(int(i) for i in rng.permutation(n))
            prof = state_profile(permute(C, order)).values
            assert prof == elliptic_profile_from_divisors(E, m, order)
            l1, l2 = ell1_ell2(E, m, order)
            assert max(prof) == elliptic_predicted_s_T(n, m, l1, l2)


def test_elliptic_code_range():
    E = curve(5, (0, 0, 0, 1, 1))
    with pytest.raises(ValueError):
        elliptic_one_point_code(E, 1)
    with pytest.raises(ValueError):
        elliptic_one_point_code(E, 3, ordering=[0, 0, 1, 2, 3, 4, 5, 6])


def test_ordering_search_claims():
    E = curve(5, (0, 0, 0, 1, 1))         # n = 8, delta = 1
    order = ordering_search(E, 3, 2)      # n > 2m + 1
    assert order is not None and sum(ell1_ell2(E, 3, order)) == 2
    order = ordering_search(E, 4, 1, at_least=True)
    assert order is not None
    assert state_profile(permute(elliptic_one_point_code(E, 4), order)).s_T == 3
    E4 = curve(5, (0, 0, 0, 4, 0))        # n = 7, delta = 4
    assert idempotent_count(E4) == 4
    assert ordering_search(E4, 3, 2) is None
    random_hit = ordering_search(E, 3, 2, mode="random", budget=500, seed=3)
    assert random_hit is not None
    with pytest.raises(ValueError):
        ordering_search(E, 3, 2, mode="sideways")


@pytest.mark.parametrize("q,coeffs", [(5, (0, 0, 0, 1, 1)), (8, (0, 0, 1, 1, 1)), (7, (0, 0, 0, 0, 3))])
def test_half_length_sum_is_never_one(q, coeffs):
    # n even means the group order n + 1 is odd, so the affine points sum
    # to O and the first and last halves are principal together or not at all
    E = curve(q, coeffs)
    n = len(E.affine_points)
    assert n % 2 == 0 and E.sum(E.affine_points) is INFINITY
    assert ordering_search(E, n // 2, 1) is None
    assert ordering_search(E, n // 2, 2) is not None


def test_selfdual_elliptic_instance():
    F = field_of_order(4)
    E = elliptic_create(F, 0, 0, 1, 0, 0)   # y^2 + y = x^3
    n = len(E.affine_points)
    assert n == 8
    C = elliptic_one_point_code(E, 4)
    assert dual(C) == C
    found = list(find_selfdual_elliptic(F, limit=200))
    assert any(e.a1 == 0 and e.a2 == 0 and e.a3 == 1 and e.a4 == 0 and e.a6 == 0 for e, _ in found)
    rng = np.random.default_rng(4)
    for _ in range(30):
        order = [int(i) for i in rng.permutation(n)]
        prof = state_profile(permute(C, order)).values
        pts = [E.affine_points[i] for i in order]
        ell_half = ell_one_point(E, 4, pts[:4])
        assert prof == tuple(cor3_4_profile(n, i, ell_half) for i in range(n + 1))
    s, _ = min_state_complexity_exhaustive(C)
    has_principal_half = any(E.sum(S) is INFINITY for S in itertools.combinations(E.affine_points, 4))
    assert has_principal_half and s == 4 - 1
