"""Concrete AG codes: Reed-Solomon, Hermitian one-point, elliptic one-point.

Elliptic points are ``(x, y)`` tuples of element codes; the point at
infinity ``O`` is ``None``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .code import LinearCode, code_from_matrix
from .gf import GF, field_create

INFINITY = None


def reed_solomon(F: GF, n: int, k: int) -> LinearCode:
    """Evaluations of ``1, x, ..., x^(k-1)`` at the element codes ``1..n``."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if n > F.q - 1:
        raise ValueError(f"at most {F.q - 1} nonzero evaluation points in GF({F})")
    points = np.arange(1, n + 1)
    rows = [F.pow(points, i) for i in range(k)]
    return code_from_matrix(F, rows)


# --- Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2) ---

def _prime_power(q0):
    for p in range(2, q0 + 1):
        if q0 % p == 0:
            m, r = 0, q0
            while r % p == 0:
                r //= p
                m += 1
            if r == 1:
                return p, m
            break
    raise ValueError(f"{q0} is not a prime power")


def hermitian_field(q0: int) -> GF:
    p, e = _prime_power(q0)
    return field_create(p, 2 * e)


def hermitian_points(q0: int) -> list[tuple[int, int]]:
    F = hermitian_field(q0)
    pts = []
    for x in range(F.q):
        rhs = F.pow(x, q0 + 1)
        for y in range(F.q):
            if F.add(F.pow(y, q0), y) == rhs:
                pts.append((x, y))
    if len(pts) != q0**3:
        raise AssertionError(f"expected {q0**3} affine points, found {len(pts)}")
    return pts


def hermitian_monomials(q0: int, m: int) -> list[tuple[int, int]]:
    """Exponents ``(a, b)`` of ``x^a y^b`` spanning L(mQ), by pole order."""
    mons = [(a, b) for b in range(q0) for a in range(m // q0 + 1) if q0 * a + (q0 + 1) * b <= m]
    return sorted(mons, key=lambda ab: q0 * ab[0] + (q0 + 1) * ab[1])


def hermitian_code(q0: int, m: int) -> LinearCode:
    n = q0**3
    if m < 0:
        raise ValueError("m must be non-negative")
    if m >= n and q0 != 2:
        raise ValueError(f"m >= n = {n} (positive abundance) only supported for q0 = 2")
    F = hermitian_field(q0)
    pts = hermitian_points(q0)
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    rows = [F.mul(F.pow(xs, a), F.pow(ys, b)) for a, b in hermitian_monomials(q0, m)]
    return code_from_matrix(F, rows)


# --- elliptic curves in general Weierstrass form ---

@dataclass(frozen=True, eq=False)
class EllipticCurve:
    """``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`` over ``field``."""

    field: GF
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    affine_points: tuple[tuple[int, int], ...] = field(init=False, repr=False)
    _index: dict = field(init=False, repr=False)
    _add_table: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        F = self.field
        for c in (self.a1, self.a2, self.a3, self.a4, self.a6):
            if not 0 <= c < F.q:
                raise ValueError(f"coefficient {c} out of range for GF({F})")
        if self.discriminant() == 0:
            raise ValueError("singular curve (discriminant 0)")
        pts = tuple((x, y) for x in range(F.q) for y in range(F.q) if self.on_curve((x, y)))
        object.__setattr__(self, "affine_points", pts)
        points = (INFINITY,) + pts
        index = {P: i for i, P in enumerate(points)}
        object.__setattr__(self, "_index", index)
        table = np.array([[index[self._add(P, Q)] for Q in points] for P in points])
        object.__setattr__(self, "_add_table", table)

    def _c(self, k: int) -> int:
        return k % self.field.p

    def discriminant(self) -> int:
        F = self.field
        add, mul, c = F.add, F.mul, self._c
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = add(mul(a1, a1), mul(c(4), a2))
        b4 = add(mul(c(2), a4), mul(a1, a3))
        b6 = add(mul(a3, a3), mul(c(4), a6))
        b8 = F.sub(add(add(mul(mul(a1, a1), a6), mul(c(4), mul(a2, a6))),
                       F.sub(mul(a2, mul(a3, a3)), mul(a1, mul(a3, a4)))),
                   mul(a4, a4))
        terms = [
            F.neg(mul(mul(b2, b2), b8)),
            F.neg(mul(c(8), mul(b4, mul(b4, b4)))),
            F.neg(mul(c(27), mul(b6, b6))),
            mul(c(9), mul(b2, mul(b4, b6))),
        ]
        out = 0
        for t in terms:
            out = add(out, t)
        return int(out)

    def on_curve(self, P) -> bool:
        if P is INFINITY:
            return True
        F = self.field
        x, y = P
        lhs = F.add(F.add(F.mul(y, y), F.mul(self.a1, F.mul(x, y))), F.mul(self.a3, y))
        rhs = F.add(F.add(F.pow(x, 3), F.mul(self.a2, F.mul(x, x))), F.add(F.mul(self.a4, x), self.a6))
        return int(lhs) == int(rhs)

    @property
    def points(self) -> tuple:
        return (INFINITY,) + self.affine_points

    @property
    def order(self) -> int:
        return len(self.affine_points) + 1

    def neg(self, P):
        if P is INFINITY:
            return INFINITY
        F = self.field
        x, y = P
        return (x, int(F.sub(F.neg(y), F.add(F.mul(self.a1, x), self.a3))))

    def _add(self, P, Q):
        F = self.field
        if P is INFINITY:
            return Q
        if Q is INFINITY:
            return P
        x1, y1 = P
        x2, y2 = Q
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        if x1 == x2 and int(F.add(F.add(y1, y2), F.add(F.mul(a1, x2), a3))) == 0:
            return INFINITY
        if x1 != x2:
            dx = F.sub(x2, x1)
            lam = F.div(F.sub(y2, y1), dx)
            nu = F.div(F.sub(F.mul(y1, x2), F.mul(y2, x1)), dx)
        else:
            den = F.add(F.add(F.mul(self._c(2), y1), F.mul(a1, x1)), a3)
            num = F.add(F.add(F.mul(self._c(3), F.mul(x1, x1)), F.mul(self._c(2), F.mul(a2, x1))),
                        F.sub(a4, F.mul(a1, y1)))
            lam = F.div(num, den)
            nu_num = F.add(F.add(F.neg(F.pow(x1, 3)), F.mul(a4, x1)),
                           F.sub(F.mul(self._c(2), a6), F.mul(a3, y1)))
            nu = F.div(nu_num, den)
        x3 = F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), F.add(x1, x2))
        y3 = F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), nu), a3)
        return (int(x3), int(y3))

    def add(self, P, Q):
        return self.points[self._add_table[self._index[P], self._index[Q]]]

    def sum(self, pts):
        acc = 0
        for P in pts:
            acc = self._add_table[acc, self._index[P]]
        return self.points[acc]

    def index_of(self, P) -> int:
        return self._index[P]

    def sum_indices(self, idx) -> int:
        """Group sum of points given by index into :attr:`points`."""
        acc = 0
        for i in idx:
            acc = self._add_table[acc, i]
        return int(acc)


def elliptic_create(F: GF, a1=0, a2=0, a3=0, a4=0, a6=0) -> EllipticCurve:
    return EllipticCurve(F, a1, a2, a3, a4, a6)


def point_add(E: EllipticCurve, P, Q):
    return E.add(P, Q)


def sum_points(E: EllipticCurve, pts):
    return E.sum(pts)


def idempotent_count(E: EllipticCurve) -> int:
    return sum(1 for P in E.points if E.add(P, P) is INFINITY)


def ell_one_point(E: EllipticCurve, c: int, pts) -> int:
    """``l(cO - P_1 - ... - P_t)`` for affine points ``P_j``."""
    pts = list(pts)
    t = c - len(pts)
    if t < 0:
        return 0
    if t >= 1:
        return t
    return 1 if E.sum(pts) is INFINITY else 0


def elliptic_functions(m: int) -> list[tuple[int, int]]:
    """Basis ``x^i y^j`` (j in {0, 1}) of L(mO) ordered by pole order."""
    out = []
    for pole in range(m + 1):
        if pole == 1:
            continue
        out.append((pole // 2, 0) if pole % 2 == 0 else ((pole - 3) // 2, 1))
    return out


def _ordered(E, ordering):
    if ordering is None:
        return list(E.affine_points)
    ordering = list(ordering)
    if sorted(ordering) != list(range(len(E.affine_points))):
        raise ValueError("ordering must permute the affine point indices")
    return [E.affine_points[i] for i in ordering]


def elliptic_one_point_code(E: EllipticCurve, m: int, ordering=None, check_range: bool = True) -> LinearCode:
    """One-point code of ``G = mO`` on all affine points (in ``ordering``)."""
    n = len(E.affine_points)
    if check_range and not 1 < m < n - 1:
        raise ValueError(f"m = {m} outside 2..{n - 2}")
    F = E.field
    pts = _ordered(E, ordering)
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    rows = [F.mul(F.pow(xs, i), F.pow(ys, j)) for i, j in elliptic_functions(m)]
    return code_from_matrix(F, rows)


def ell1_ell2(E: EllipticCurve, m: int, ordering=None) -> tuple[int, int]:
    pts = _ordered(E, ordering)
    return ell_one_point(E, m, pts[len(pts) - m:]), ell_one_point(E, m, pts[:m])


def elliptic_profile_from_divisors(E: EllipticCurve, m: int, ordering=None) -> tuple[int, ...]:
    """``s_i = l(G) + a - l(A_i) - l(B_i)`` with ``G = mO`` (so ``a = 0``)."""
    pts = _ordered(E, ordering)
    n = len(pts)
    ell_G = ell_one_point(E, m, [])
    return tuple(ell_G - ell_one_point(E, m, pts[:i]) - ell_one_point(E, m, pts[i:])
                 for i in range(n + 1))


def elliptic_predicted_s_T(n: int, m: int, l1: int, l2: int) -> int:
    """Exact ``s_T`` of the one-point elliptic code from ``l1 + l2``."""
    k = m
    total = l1 + l2
    if n > 2 * m:
        return k - 1 if n == 2 * m + 1 and total == 2 else k
    if n == 2 * m:
        return k if total == 0 else k - 1
    return n - k - 1 if n == 2 * m - 1 and total == 2 else n - k


def _order_from_split(n, head, tail):
    middle = [i for i in range(n) if i not in set(head) and i not in set(tail)]
    return tuple(head) + tuple(middle) + tuple(tail)


def ordering_search(E: EllipticCurve, m: int, target: int, mode: str = "exhaustive",
                    budget: int = 10_000, seed: int = 0, at_least: bool = False):
    """Find an ordering of the affine points with ``l1 + l2 == target``
    (``>= target`` when ``at_least``).

    Only the first-``m`` and last-``m`` point sets matter, so the exhaustive
    mode walks disjoint (head, tail) subsets of size ``min(m, n - m)`` and is
    a decision procedure.  The random mode returns ``None`` when its budget
    runs out, which says nothing about existence.
    """
    n = len(E.affine_points)
    t = min(m, n - m)

    def hit(order):
        total = sum(ell1_ell2(E, m, order))
        return total >= target if at_least else total == target

    if mode == "exhaustive":
        if n > 12:
            raise ValueError("exhaustive ordering search needs n <= 12")
        for head in itertools.combinations(range(n), t):
            rest = [i for i in range(n) if i not in head]
            for tail in itertools.combinations(rest, t):
                order = _order_from_split(n, head, tail)
                if hit(order):
                    return order
        return None
    if mode == "random":
        rng = np.random.default_rng(seed)
        for _ in range(budget):
            order = tuple(int(i) for i in rng.permutation(n))
            if hit(order):
                return order
        return None
    raise ValueError(f"unknown mode {mode!r}")


def find_curves(F: GF):
    """Every nonsingular curve over ``F`` (all coefficient tuples)."""
    for coeffs in itertools.product(range(F.q), repeat=5):
        try:
            yield EllipticCurve(F, *coeffs)
        except ValueError:
            continue


def find_selfdual_elliptic(F: GF, limit: int | None = None):
    """Yield ``(E, m)`` whose one-point code ``C(D, mO)`` equals its dual.

    Only ``n`` even and ``m = n/2`` can work; the search stops after
    ``limit`` curves have been examined.
    """
    from .code import dual

    for count, E in enumerate(find_curves(F)):
        if limit is not None and count >= limit:
            return
        n = len(E.affine_points)
        if n % 2 or n < 4:
            continue
        C = elliptic_one_point_code(E, n // 2, check_range=False)
        if C == dual(C):
            yield E, n // 2
