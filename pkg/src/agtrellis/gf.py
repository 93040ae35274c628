"""Finite fields GF(p^m) for small orders.

Elements are integer codes in ``[0, q)``: the coefficient vector
``(c_0, ..., c_{m-1})`` of a polynomial in ``x`` is stored as
``sum(c_j * p**j)``.  Every arithmetic method accepts Python ints or numpy
integer arrays and broadcasts like numpy.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_ORDER = 2**16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p), coefficient lists low degree first ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, mod, p)


def _monic_polys(p, deg):
    for t in range(p**deg):
        coeffs = [(t // p**j) % p for j in range(deg)]
        yield coeffs + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def _code_to_poly(code, p, m):
    return _trim([(code // p**j) % p for j in range(m)])


def _poly_to_code(poly, p):
    return sum(c * p**j for j, c in enumerate(poly))


class GF:
    """The field GF(p^m).

    The modulus is the monic irreducible of degree ``m`` whose lower
    coefficients, read as a base-``p`` integer with ``c_{m-1}`` most
    significant, are smallest.  The primitive element is the smallest code
    of multiplicative order ``q - 1``.
    """

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"degree must be positive, got {m}")
        if p**m > MAX_ORDER:
            raise FieldError(f"order {p}^{m} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = p**m

        for coeffs in _monic_polys(p, m):
            if is_irreducible(coeffs, p):
                self.modulus = tuple(coeffs)
                break
        self.primitive = self._find_primitive()
        self._build_tables()

    # -- construction helpers --

    def _slow_mul(self, a, b):
        pa = _code_to_poly(a, self.p, self.m)
        pb = _code_to_poly(b, self.p, self.m)
        return _poly_to_code(_poly_mulmod(pa, pb, self.modulus, self.p), self.p)

    def _slow_pow(self, a, e):
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _find_primitive(self):
        if self.q == 2:
            return 1
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(1, self.q):
            if all(self._slow_pow(g, order // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    def _build_tables(self):
        q, p, m = self.q, self.p, self.m
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, self.primitive)
        exp[q - 1:] = exp[: q - 1]
        self._exp = exp
        self._log = log

        codes = np.arange(q, dtype=np.int64)
        self._powers = p ** np.arange(m, dtype=np.int64)
        self._digits = (codes[:, None] // self._powers) % p
        self._neg = ((-self._digits) % p) @ self._powers
        self._add_table = None
        if p != 2 and m > 1 and q <= 1024:
            self._add_table = self._digit_add(codes[:, None], codes[None, :])

    def _digit_add(self, a, b):
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._powers

    # -- element API --

    def __call__(self, code: int) -> FieldElement:
        return FieldElement(self, code)

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    def __str__(self):
        return f"{self.p}^{self.m}"

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (np.add(a, b)) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._digit_add(a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        return self._neg[a] if self.m > 1 else np.negative(a) % self.p

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            out = (a * b) % self.p
        else:
            out = self._exp[self._log[a] + self._log[b]]
            out = np.where((a == 0) | (b == 0), 0, out)
        return out if out.ndim else int(out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        out = self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return out if out.ndim else int(out)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            out = np.ones_like(a)
        elif e < 0:
            return self.pow(self.inv(a), -e)
        else:
            out = self._exp[(self._log[a] * e) % (self.q - 1)]
            out = np.where(a == 0, 0, out)
        return out if out.ndim else int(out)

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return int(self._log[a])

    def dot(self, a, b):
        """Field inner product of two 1-D code vectors."""
        prod = self.mul(a, b)
        return self.sum(prod)

    def sum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if axis is None:
            a = a.ravel()
            axis = 0
        a = np.moveaxis(a, axis, 0)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=0) if len(a) else np.zeros(a.shape[1:], np.int64)
        if self.m == 1:
            return a.sum(axis=0) % self.p
        digits = self._digits[a].sum(axis=0) % self.p
        return digits @ self._powers

    def matmul(self, V, M):
        """``V @ M`` over the field; ``V`` may be a single row or a batch."""
        M = np.asarray(M, dtype=np.int64)
        V = np.asarray(V, dtype=np.int64)
        single = V.ndim == 1
        V = np.atleast_2d(V)
        out = np.zeros((V.shape[0], M.shape[1]), dtype=np.int64)
        for j in range(M.shape[0]):
            out = self.add(out, self.mul(V[:, j:j + 1], M[j][None, :]))
        return out[0] if single else out


@lru_cache(maxsize=None)
def field_create(p: int, m: int = 1) -> GF:
    """Cached constructor; fields are immutable so sharing is safe."""
    return GF(p, m)


def parse_field(text: str) -> GF:
    """Parse the ``"p^m"`` notation (a bare prime means ``m = 1``)."""
    text = text.strip()
    try:
        if "^" in text:
            p, m = text.split("^")
            return field_create(int(p), int(m))
        return field_create(int(text), 1)
    except ValueError as exc:
        raise FieldError(f"bad field designator {text!r}: {exc}") from None


def field_of_order(q: int) -> GF:
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return field_create(p, m)
    raise FieldError(f"{q} is not a prime power")


class FieldElement:
    """Scalar wrapper with operator overloads; arithmetic checks the field."""

    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        code = int(code)
        if not 0 <= code < field.q:
            raise FieldError(f"code {code} out of range for {field!r}")
        self.field = field
        self.code = code

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
            return other.code
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, other).code
        return NotImplemented

    def _wrap(self, code):
        return FieldElement(self.field, int(code))

    def __add__(self, other):
        return self._wrap(self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.code))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.code, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"{self.field.p}^{self.field.m}({self.code})"
