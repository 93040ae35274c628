import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agtrellis.gf import (
    GF,
    FieldError,
    field_create,
    field_of_order,
    is_irreducible,
    parse_field,
)

PRIME_POWERS = [q for q in range(2, 257)
                if len({p for p in range(2, q + 1) if q % p == 0 and all(p % r for r in range(2, p))}) == 1]


# independent oracle: schoolbook polynomials over GF(p), coefficient lists low->high

def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_rem(a, mod, p):
    a = list(a)
    d = len(mod) - 1
    for top in range(len(a) - 1, d - 1, -1):
        c = a[top]
        if c:
            for j in range(d + 1):
                a[top - d + j] = (a[top - d + j] - c * mod[j]) % p
    return (a + [0] * d)[:d]


def to_code(poly, p):
    return sum(c * p**j for j, c in enumerate(poly))


def to_poly(code, p, m):
    return [(code // p**j) % p for j in range(m)]


def oracle_mul(F, a, b):
    prod = poly_mul(to_poly(a, F.p, F.m), to_poly(b, F.p, F.m), F.p)
    return to_code(poly_rem(prod, list(F.modulus), F.p), F.p)


def test_prime_power_list():
    assert PRIME_POWERS[:10] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_gf2_trivial():
    F = field_create(2, 1)
    assert F.q == 2 and F.primitive == 1
    assert F.add(1, 1) == 0


def test_gf4_modulus_and_product():
    F = field_create(2, 2)
    # the only monic irreducible quadratic over GF(2)
    irreducible = [c for c in itertools.product(range(2), repeat=2)
                   if all((c[0] + c[1] * x + x * x) % 2 for x in range(2))]
    assert irreducible == [(1, 1)]
    assert F.modulus == (1, 1, 1)
    assert F.mul(2, 2) == 3


def test_gf25_modulus_is_smallest_irreducible():
    F = field_create(5, 2)
    candidates = []
    for code in range(25):
        c0, c1 = code % 5, code // 5
        if all((c0 + c1 * x + x * x) % 5 for x in range(5)):
            candidates.append((c0, c1, 1))
    assert len(candidates) == 10
    assert F.modulus == candidates[0] == (2, 0, 1)


@pytest.mark.parametrize("p,m", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 8)])
def test_modulus_irreducible_and_primitive(p, m):
    F = field_create(p, m)
    assert F.q == p**m
    assert is_irreducible(list(F.modulus), p)
    powers = {F.pow(F.primitive, e) for e in range(F.q - 1)}
    assert len(powers) == F.q - 1 and 0 not in powers


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 32, 49])
def test_mul_matches_polynomial_oracle(q):
    F = field_of_order(q)
    for a in range(q):
        for b in range(q):
            assert F.mul(a, b) == oracle_mul(F, a, b)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_field_axioms_sampled(q):
    F = field_of_order(q)
    rng = np.random.default_rng(q)
    a, b, c = rng.integers(0, q, size=(3, 10_000))
    assert np.array_equal(F.add(a, b), F.add(b, a))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.add(a, F.neg(a)), np.zeros_like(a))
    nz = np.arange(1, q)
    assert np.all(F.mul(nz, F.inv(nz)) == 1)


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS if q <= 64])
def test_frobenius(q):
    F = field_of_order(q)
    a, b = np.meshgrid(F.elements, F.elements)
    lhs = F.pow(F.add(a, b), F.p)
    rhs = F.add(F.pow(a, F.p), F.pow(b, F.p))
    assert np.array_equal(lhs, rhs)


def test_large_field_builds():
    F = field_create(2, 16)
    assert F.q == 65536
    assert F.mul(F.primitive, F.inv(F.primitive)) == 1


def test_errors():
    with pytest.raises(FieldError):
        GF(4, 1)
    with pytest.raises(FieldError):
        field_of_order(6)
    with pytest.raises(FieldError):
        parse_field("x^2")
    with pytest.raises(ZeroDivisionError):
        field_create(3, 2).inv(0)


def test_parse_field():
    assert parse_field("3^2") == field_create(3, 2)
    assert parse_field("7").q == 7
    assert str(field_create(2, 3)) == "2^3"


def test_field_element_operators():
    F = field_create(2, 2)
    x = F(2)
    assert x * x == 3
    assert x + x == 0
    assert (x / x) == 1
    assert x**3 == 1
    assert x.inverse() * x == 1
    with pytest.raises(FieldError):
        x + field_create(3, 1)(1)
    with pytest.raises(FieldError):
        F(4)


def test_sum_and_matmul():
    F = field_create(3, 2)
    v = np.array([1, 2, 5, 7])
    acc = 0
    for x in v:
        acc = F.add(acc, x)
    assert F.sum(v) == acc
    M = np.array([[1, 0], [0, 1], [3, 4], [0, 0]])
    expected = [F.add(F.add(F.mul(1, 1), F.mul(5, 3)), 0), F.add(F.mul(2, 1), F.mul(5, 4))]
    assert list(F.matmul(v, M)) == expected


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 25]), st.integers(0, 10**6), st.integers(-5, 30))
def test_pow_matches_repeated_mul(q, a, e):
    F = field_of_order(q)
    a %= q
    if a == 0 and e < 0:
        return
    acc = 1
    base = a if e >= 0 else F.inv(a)
    for _ in range(abs(e)):
        acc = F.mul(acc, base)
    assert F.pow(a, e) == acc
