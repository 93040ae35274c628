"""Numerical semigroups and gonality sequences."""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import reduce
from math import gcd


class GonalityError(ValueError):
    """A gonality sequence violates one of the structural properties."""


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gaps: tuple[int, ...] = field(init=False)
    conductor: int = field(init=False)

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise ValueError(f"gcd of {gens} is not 1; the gap set would be infinite")
        object.__setattr__(self, "generators", gens)
        # a run of min(gens) consecutive members means everything after is in
        member = [True]
        run = 0
        x = 0
        while run < gens[0]:
            x += 1
            ok = any(x >= g and member[x - g] for g in gens)
            member.append(ok)
            run = run + 1 if ok else 0
        gaps = tuple(i for i, ok in enumerate(member) if not ok)
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "conductor", gaps[-1] + 1 if gaps else 0)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and (x >= self.conductor or x not in self.gaps)

    def elements_up_to(self, m: int) -> list[int]:
        return [x for x in range(m + 1) if x in self]

    def element(self, i: int) -> int:
        """The ``i``-th smallest member, 1-based (``element(1) == 0``)."""
        if i < 1:
            raise ValueError("index is 1-based")
        below = self.conductor - self.genus  # members in [0, conductor)
        if i <= below:
            return self.elements_up_to(self.conductor)[i - 1]
        return self.conductor + (i - below - 1)

    def __str__(self):
        return "⟨" + ",".join(map(str, self.generators)) + "⟩"


def semigroup_create(generators) -> NumericalSemigroup:
    return NumericalSemigroup(tuple(generators))


def nongaps_up_to(H: NumericalSemigroup, m: int) -> int:
    """``#{h in H : h <= m}``; for a one-point divisor this is ``l(mQ)``."""
    if m < 0:
        return 0
    return m + 1 - bisect.bisect_right(H.gaps, m)


@dataclass(frozen=True)
class GonalitySequence:
    """``gamma_1 .. gamma_{g+1}`` stored; ``gamma_i = g + i - 1`` afterwards."""

    genus: int
    values: tuple[int, ...]

    def __post_init__(self):
        validate_gonality(self)

    def __getitem__(self, i: int) -> int:
        return gonality_value(self, i)

    def prefix(self, count: int) -> tuple[int, ...]:
        return tuple(gonality_value(self, i) for i in range(1, count + 1))


def validate_gonality(gs: GonalitySequence) -> None:
    g, v = gs.genus, gs.values
    if len(v) != g + 1:
        raise GonalityError(f"need gamma_1..gamma_{g + 1}, got {len(v)} values")
    if v[0] != 0:
        raise GonalityError("gamma_1 must be 0")
    if any(b <= a for a, b in zip(v, v[1:])):
        raise GonalityError("sequence is not strictly increasing")
    if v[g] != 2 * g:
        raise GonalityError(f"gamma_{g + 1} must equal 2g = {2 * g}")
    if g >= 1 and v[g - 1] != 2 * g - 2:
        raise GonalityError(f"gamma_g = {v[g - 1]} differs from 2g - 2 = {2 * g - 2}")
    for i in range(1, g):
        if v[i - 1] < 2 * i - 2:
            raise GonalityError(f"gamma_{i} = {v[i - 1]} < 2i - 2")


def gonality_value(gs: GonalitySequence, i: int) -> int:
    if i < 1:
        raise ValueError("gonality index is 1-based")
    if i <= gs.genus + 1:
        return gs.values[i - 1]
    return gs.genus + i - 1


def gonality_from_semigroup(H: NumericalSemigroup) -> GonalitySequence:
    """Sorted members of ``H`` as a gonality sequence (validated)."""
    g = H.genus
    return GonalitySequence(g, tuple(H.element(i) for i in range(1, g + 2)))


def gonality_from_plane_degree(r: int) -> GonalitySequence:
    """Gonality sequence of a smooth plane curve of degree ``r``."""
    if r < 3:
        raise ValueError("plane degree must be at least 3")
    H = NumericalSemigroup((r - 1, r))
    gs = gonality_from_semigroup(H)
    assert gs.genus == (r - 1) * (r - 2) // 2
    return gs
