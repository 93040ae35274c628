"""Lower bounds on trellis state complexity and distance bounds for AG codes.

Every bound is a pure function.  State-complexity bounds are clamped at 0;
distance bounds are returned unclamped.  A bound whose hypotheses are not
met raises :class:`NotApplicable`, which the report turns into a reason
string.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .semigroup import GonalitySequence, NumericalSemigroup, gonality_value, nongaps_up_to


class NotApplicable(Exception):
    pass


def _floor_half(x: int) -> int:
    return x // 2


def _ceil_half(x: int) -> int:
    return -(-x // 2)


@dataclass(frozen=True)
class AgDescriptor:
    """Numerical data of an AG code ``C(D, G)`` with ``deg D = n``."""

    n: int
    deg_G: int
    g: int
    a: int = 0
    k: int | None = None
    gonality: GonalitySequence | None = None
    semigroup: NumericalSemigroup | None = None
    ell_2G_minus_D: int | None = None

    def __post_init__(self):
        if not 0 <= self.a <= self.g:
            raise ValueError(f"abundance {self.a} outside 0..g={self.g}")
        if self.gonality is not None and self.gonality.genus != self.g:
            raise ValueError("gonality sequence genus differs from g")
        H = self.semigroup
        if H is not None:
            if self.deg_G - self.n < 0 and self.a != 0:
                raise ValueError("deg(G - D) < 0 forces abundance 0")
            if self.k is None:
                object.__setattr__(self, "k", nongaps_up_to(H, self.deg_G) - self.a)
            if self.ell_2G_minus_D is None:
                object.__setattr__(self, "ell_2G_minus_D", nongaps_up_to(H, 2 * self.deg_G - self.n))
        if self.k is None:
            raise ValueError("dimension k must be supplied without a semigroup")

    @classmethod
    def one_point(cls, n: int, m: int, semigroup: NumericalSemigroup,
                  gonality: GonalitySequence | None = None) -> AgDescriptor:
        """``G = mQ`` with ``D`` linearly equivalent to ``nQ``."""
        a = nongaps_up_to(semigroup, m - n)
        return cls(n=n, deg_G=m, g=semigroup.genus, a=a, gonality=gonality, semigroup=semigroup)

    @property
    def wolf(self) -> int:
        return min(self.k, self.n - self.k)

    def gamma(self, i: int) -> int:
        if self.gonality is not None:
            return gonality_value(self.gonality, i)
        if i == 1:
            return 0
        raise NotApplicable("no gonality sequence")

    def dual(self, a_dual: int | None = None) -> AgDescriptor:
        """Descriptor of the dual code, ``deg G' = n - deg G + 2g - 2``.

        In the one-point case the canonical class is taken as ``(2g-2)Q``,
        which needs a symmetric semigroup; otherwise pass ``a_dual``.
        """
        deg = self.n - self.deg_G + 2 * self.g - 2
        H = self.semigroup
        if H is not None and a_dual is None:
            if H.conductor != 2 * H.genus:
                raise NotApplicable("semigroup is not symmetric; supply a_dual")
            a_dual = nongaps_up_to(H, deg - self.n)
            return replace(self, deg_G=deg, a=a_dual, k=self.n - self.k, ell_2G_minus_D=None)
        if a_dual is None:
            raise NotApplicable("dual abundance unknown")
        return replace(self, deg_G=deg, a=a_dual, k=self.n - self.k, semigroup=None,
                       ell_2G_minus_D=None)


# --- general linear codes ---

def prop2_1(n: int, k: int, d: int, d_dual: int) -> int:
    t = max(0, n + 2 - 2 * max(d, d_dual))
    return max(0, min(k, n - k) - t)


def prop2_2_index(n: int, ghw: list[int], d: int, ghw_dual: list[int] | None, d_dual: int | None):
    """Smallest ``i`` meeting either generalized-weight condition, else None."""
    hits = [i for i, di in enumerate(ghw, start=1) if di >= n + 2 - d]
    if ghw_dual is not None and d_dual is not None:
        hits += [i for i, di in enumerate(ghw_dual, start=1) if di >= n + 2 - d_dual]
    return min(hits) if hits else None


def prop2_2(n: int, k: int, ghw: list[int], d: int,
            ghw_dual: list[int] | None = None, d_dual: int | None = None) -> int:
    i = prop2_2_index(n, ghw, d, ghw_dual, d_dual)
    if i is None:
        return 0
    return max(0, min(k, n - k) - i + 1)


# --- distance bounds ---

def goppa_d(desc: AgDescriptor) -> int:
    return desc.n - desc.deg_G


def improved_goppa_d(desc: AgDescriptor) -> int:
    return desc.n - desc.deg_G + desc.gamma(desc.a + 1)


def cor3_1_d(desc: AgDescriptor) -> int:
    return (desc.n - desc.k + 1) - (desc.g - desc.a)


def ghw_lower(desc: AgDescriptor, i: int) -> int:
    return desc.n - desc.deg_G + desc.gamma(desc.a + i)


# --- state complexity of AG codes ---

def prop3_1_attains_wolf(desc: AgDescriptor) -> bool:
    n, deg, g = desc.n, desc.deg_G, desc.g
    gam = desc.gamma(desc.a + 1)
    return deg < _floor_half(n) + gam or deg > _ceil_half(n) + 2 * g - 2 - gam


def _first_index(desc: AgDescriptor, threshold: int) -> int:
    i = 1
    while desc.gamma(desc.a + i) < threshold:
        i += 1
    return i


def prop3_2_index(desc: AgDescriptor) -> int:
    """Smallest ``i`` satisfying either gonality condition."""
    n, deg, g = desc.n, desc.deg_G, desc.g
    gam = desc.gamma(desc.a + 1)
    first = 2 * deg - n - gam + 2
    second = n + 2 * (2 * g - 2) - 2 * deg - gam + 2
    return min(_first_index(desc, first), _first_index(desc, second))


def prop3_2(desc: AgDescriptor) -> int:
    return max(0, desc.wolf - prop3_2_index(desc) + 1)


def thm3_1(desc: AgDescriptor) -> int:
    return max(0, desc.wolf - (desc.g - desc.a))


def remark3_2(desc: AgDescriptor) -> int:
    if 2 * desc.a > desc.g:
        raise NotApplicable("abundance exceeds g/2")
    return max(0, desc.wolf - (desc.g - 2 * desc.a))


def eq3_2_holds(desc: AgDescriptor) -> bool:
    n, deg, g = desc.n, desc.deg_G, desc.g
    gam = desc.gamma(desc.a + 1)
    return _floor_half(n) + gam <= deg <= _ceil_half(n) + 2 * g - 2 - gam


def _require_window(desc):
    if not eq3_2_holds(desc):
        raise NotApplicable("deg G outside the middle window")


def cor3_2_terms(desc: AgDescriptor) -> tuple[int, int]:
    n, deg, g, a = desc.n, desc.deg_G, desc.g, desc.a
    gam = desc.gamma(a + 1)
    alpha = deg + 1 - a - _floor_half(n + gam)
    beta = 2 * g - 1 - deg - a + _ceil_half(n - gam)
    return alpha, beta


def cor3_2(desc: AgDescriptor) -> int:
    _require_window(desc)
    return max(0, desc.wolf - min(cor3_2_terms(desc)))


def cor3_3(desc: AgDescriptor) -> int:
    """The Clifford-type bound ``floor((n + gamma_{a+1}) / 2) - g``."""
    _require_window(desc)
    return max(0, _floor_half(desc.n + desc.gamma(desc.a + 1)) - desc.g)


def prop3_3(k: int, a: int, ell_2G_minus_D: int | None) -> int:
    if ell_2G_minus_D is None:
        raise NotApplicable("l(2G - D) unknown")
    return max(0, k + 2 * a - ell_2G_minus_D - 1)


def prop3_4_witness(desc: AgDescriptor) -> tuple[int, int]:
    """``(i, j)`` with ``i = floor(n/2)`` and the smallest admissible ``j``."""
    i = _floor_half(desc.n)
    width = min(i, desc.n - i)
    j = 1
    while desc.deg_G - desc.gamma(j) >= width:
        j += 1
    return i, j


def prop3_4(desc: AgDescriptor) -> int:
    _, j = prop3_4_witness(desc)
    return max(0, desc.k - 2 * (j - 1 - desc.a))


def prop3_5_profile_value(n: int, i: int, ell_Ai: int, a: int) -> int:
    """``s_i`` of a self-dual AG code."""
    return n - i - 2 * (ell_Ai - a)


def cor3_4_profile(n: int, i: int, ell_A_half: int) -> int:
    """``s_i`` of a self-dual elliptic code (n even)."""
    if n % 2:
        raise ValueError("self-dual elliptic profile needs even n")
    if not 0 <= i <= n:
        raise IndexError(i)
    if 2 * i < n:
        return i
    if 2 * i == n:
        return n // 2 - 2 * ell_A_half
    return n - i


# --- aggregation ---

REPORT_KEYS = (
    "wolf", "singleton", "goppa", "improved_goppa", "cor3_1", "prop2_1", "prop2_2",
    "prop3_1", "prop3_2", "thm3_1", "remark3_2", "cor3_2", "cor3_3", "prop3_3",
    "prop3_4", "best",
)
DISTANCE_KEYS = ("singleton", "goppa", "improved_goppa", "cor3_1")
LOWER_BOUND_KEYS = (
    "prop2_1", "prop2_2", "prop3_2", "thm3_1", "remark3_2", "cor3_2", "cor3_3", "prop3_3", "prop3_4",
)


@dataclass
class BoundReport:
    values: dict[str, object]
    best: int
    wolf: int
    attains_wolf: bool
    vacuous: list[str] = field(default_factory=list)
    witnesses: dict[str, object] = field(default_factory=dict)

    def applicable(self, key: str) -> bool:
        return isinstance(self.values.get(key), (int, bool))

    def to_dict(self) -> dict:
        out = {key: self.values[key] for key in REPORT_KEYS if key in self.values}
        out["best"] = self.best
        if self.vacuous:
            out["vacuous"] = list(self.vacuous)
        if self.witnesses:
            out["witnesses"] = dict(self.witnesses)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def _try(fn, *args):
    try:
        return fn(*args)
    except NotApplicable as exc:
        return f"not applicable ({exc})"


def best_lower_bound(desc: AgDescriptor, d: int | None = None, d_dual: int | None = None,
                     ghw: list[int] | None = None, ghw_dual: list[int] | None = None) -> BoundReport:
    n, k = desc.n, desc.k
    v: dict[str, object] = {"wolf": desc.wolf, "singleton": n - k + 1, "goppa": goppa_d(desc)}
    v["improved_goppa"] = _try(improved_goppa_d, desc)
    v["cor3_1"] = cor3_1_d(desc)
    if d is not None and d_dual is not None:
        v["prop2_1"] = prop2_1(n, k, d, d_dual)
    else:
        v["prop2_1"] = "not applicable (no distance data)"
    if ghw is not None and d is not None:
        v["prop2_2"] = prop2_2(n, k, ghw, d, ghw_dual, d_dual)
    else:
        v["prop2_2"] = "not applicable (no distance data)"
    v["prop3_1"] = _try(prop3_1_attains_wolf, desc)
    v["prop3_2"] = _try(prop3_2, desc)
    v["thm3_1"] = thm3_1(desc)
    v["remark3_2"] = _try(remark3_2, desc)
    v["cor3_2"] = _try(cor3_2, desc)
    v["cor3_3"] = _try(cor3_3, desc)
    v["prop3_3"] = _try(prop3_3, k, desc.a, desc.ell_2G_minus_D)
    v["prop3_4"] = _try(prop3_4, desc)

    witnesses = {}
    if isinstance(v["prop3_4"], int):
        witnesses["prop3_4"] = list(prop3_4_witness(desc))
    if isinstance(v["prop3_2"], int):
        witnesses["prop3_2"] = prop3_2_index(desc)

    vacuous = [key for key in DISTANCE_KEYS if isinstance(v[key], int) and v[key] <= 0]
    vacuous += [key for key in LOWER_BOUND_KEYS if isinstance(v[key], int) and v[key] == 0]
    lows = [v[key] for key in LOWER_BOUND_KEYS if isinstance(v[key], int)]
    best = max(lows, default=0)
    attains = v["prop3_1"] is True
    if attains:
        best = desc.wolf
    v["best"] = best
    return BoundReport(values=v, best=best, wolf=desc.wolf, attains_wolf=attains,
                       vacuous=vacuous, witnesses=witnesses)
