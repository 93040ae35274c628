"""Linear block codes and their minimal-trellis state profiles."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .gf import GF
from .matrix import as_matrix, kernel_basis, rank, rref, row_space_equal

DISTANCE_BUDGET = 2**24
GHW_MAX_LENGTH = 16
EXHAUSTIVE_MAX_LENGTH = 8


class BudgetExceeded(RuntimeError):
    """An exact enumeration would exceed its hard budget.

    ``budget`` names which limit was hit so callers can tell them apart.
    """

    def __init__(self, budget: str, message: str):
        super().__init__(message)
        self.budget = budget


class DegenerateCode(ValueError):
    """The requested code would be the zero code."""


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear ``[n, k]`` code, stored by its RREF generator matrix."""

    field: GF
    generator: np.ndarray

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field}))"

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and row_space_equal(self.field, self.generator, other.generator)
        )

    __hash__ = object.__hash__

    def encode(self, message) -> np.ndarray:
        return self.field.matmul(np.asarray(message, dtype=np.int64), self.generator)

    def codewords(self, budget: int = DISTANCE_BUDGET, chunk: int = 1 << 15):
        """Yield arrays of codewords (chunks of rows), in message order."""
        F, k = self.field, self.k
        total = F.q**k
        if total > budget:
            raise BudgetExceeded("distance", f"q^k = {total} exceeds enumeration budget {budget}")
        powers = F.q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            messages = (idx[:, None] // powers) % F.q
            yield F.matmul(messages, self.generator)

    def all_codewords(self, budget: int = DISTANCE_BUDGET) -> np.ndarray:
        return np.concatenate(list(self.codewords(budget)))

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        stacked = np.vstack([self.generator, word[None, :]])
        return rank(self.field, stacked) == self.k


@dataclass(frozen=True)
class StateProfile:
    values: tuple[int, ...]

    @property
    def s_T(self) -> int:
        return max(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def code_from_matrix(F: GF, M) -> LinearCode:
    M = as_matrix(F, M)
    R, pivots = rref(F, M)
    if not pivots:
        raise DegenerateCode("generator matrix is zero")
    G = R[: len(pivots)]
    G.setflags(write=False)
    return LinearCode(F, G)


def dual(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise DegenerateCode(f"dual of the whole space GF({C.field})^{C.n} is the zero code")
    return code_from_matrix(C.field, kernel_basis(C.field, C.generator))


def permute(C: LinearCode, order) -> LinearCode:
    """New code whose j-th coordinate is coordinate ``order[j]`` of ``C``."""
    order = list(order)
    if sorted(order) != list(range(C.n)):
        raise ValueError(f"{order} is not a permutation of range({C.n})")
    return code_from_matrix(C.field, C.generator[:, order])


def _check_index(C, i):
    if not 0 <= i <= C.n:
        raise IndexError(f"index {i} outside 0..{C.n}")


def past_subcode(C: LinearCode, i: int) -> LinearCode | None:
    """Codewords vanishing after position ``i``, truncated to the first ``i``.

    Returns ``None`` for the zero code.
    """
    _check_index(C, i)
    if i == 0:
        return None
    G = C.generator
    if i == C.n:
        return C
    U = kernel_basis(C.field, G[:, i:].T)
    if len(U) == 0:
        return None
    return code_from_matrix(C.field, C.field.matmul(U, G[:, :i]))


def future_subcode(C: LinearCode, i: int) -> LinearCode | None:
    """Codewords vanishing on the first ``i`` positions, truncated to the rest."""
    _check_index(C, i)
    if i == C.n:
        return None
    G = C.generator
    if i == 0:
        return C
    U = kernel_basis(C.field, G[:, :i].T)
    if len(U) == 0:
        return None
    return code_from_matrix(C.field, C.field.matmul(U, G[:, i:]))


def _dim(code):
    return 0 if code is None else code.k


def state_profile(C: LinearCode) -> StateProfile:
    """``s_i = k - dim(past_i) - dim(future_i)`` straight from the subcodes."""
    return StateProfile(
        tuple(C.k - _dim(past_subcode(C, i)) - _dim(future_subcode(C, i)) for i in range(C.n + 1))
    )


def state_profile_ranks(C: LinearCode) -> StateProfile:
    """Same as :func:`state_profile` via ``rank(G[:, :i]) + rank(G[:, i:]) - k``."""
    F, G, k = C.field, C.generator, C.k
    return StateProfile(tuple(rank(F, G[:, :i]) + rank(F, G[:, i:]) - k for i in range(C.n + 1)))


def _spans(G):
    nz = G != 0
    starts = nz.argmax(axis=1)
    ends = G.shape[1] - 1 - nz[:, ::-1].argmax(axis=1)
    return starts, ends


def minimal_span_generator(C: LinearCode) -> np.ndarray:
    """Greedy span reduction until row starts and row ends are all distinct.

    Each step takes the lowest-indexed pair of rows sharing a start (or an
    end) and cancels that entry in the row with the longer span; for equal
    spans the higher-indexed row is modified.  Total span strictly shrinks,
    so the loop terminates.
    """
    F = C.field
    G = np.array(C.generator, copy=True)
    while True:
        starts, ends = _spans(G)
        pair = _first_shared(starts)
        if pair is not None:
            i, j = pair
            # same start; modify the one reaching further right
            victim, other = (j, i) if ends[j] >= ends[i] else (i, j)
            col = starts[victim]
        else:
            pair = _first_shared(ends)
            if pair is None:
                return G
            i, j = pair
            victim, other = (j, i) if starts[j] <= starts[i] else (i, j)
            col = ends[victim]
        factor = F.div(int(G[victim, col]), int(G[other, col]))
        G[victim] = F.sub(G[victim], F.mul(factor, G[other]))


def _first_shared(values):
    seen = {}
    for idx, v in enumerate(values):
        if v in seen:
            return seen[v], idx
        seen[v] = idx
    return None


def active_rows(G, i) -> list[int]:
    """Rows of a minimal-span generator active across boundary ``i``."""
    starts, ends = _spans(G)
    return [r for r in range(len(G)) if starts[r] < i <= ends[r]]


def state_profile_msgm(C: LinearCode) -> StateProfile:
    G = minimal_span_generator(C)
    starts, ends = _spans(G)
    return StateProfile(
        tuple(int(np.sum((starts < i) & (i <= ends))) for i in range(C.n + 1))
    )


def min_distance_bruteforce(C: LinearCode, budget: int = DISTANCE_BUDGET) -> int:
    best = C.n
    first = True
    for words in C.codewords(budget):
        weights = np.count_nonzero(words, axis=1)
        if first:
            weights = weights[1:]  # message 0
            first = False
        if len(weights):
            best = min(best, int(weights.min()))
    return best


def ghw_hierarchy(C: LinearCode) -> list[int]:
    """All generalized Hamming weights ``[d_1, ..., d_k]`` by subset search.

    The subcode supported inside a coordinate set ``S`` has dimension
    ``k - rank(G restricted to the complement of S)``.
    """
    n, k = C.n, C.k
    if n > GHW_MAX_LENGTH:
        raise BudgetExceeded("ghw", f"length {n} exceeds generalized-weight budget {GHW_MAX_LENGTH}")
    F, G = C.field, C.generator
    found = [None] * (k + 1)
    best_dim = 0
    for size in range(n + 1):
        for S in itertools.combinations(range(n), size):
            rest = [c for c in range(n) if c not in S]
            dim = k - rank(F, G[:, rest]) if rest else k
            if dim > best_dim:
                for r in range(best_dim + 1, dim + 1):
                    found[r] = size
                best_dim = dim
                if best_dim == k:
                    return found[1:]
    return found[1:]


def ghw_bruteforce(C: LinearCode, r: int) -> int:
    if not 1 <= r <= C.k:
        raise ValueError(f"r must be in 1..{C.k}")
    return ghw_hierarchy(C)[r - 1]


def singleton(C: LinearCode) -> int:
    return C.n - C.k + 1


def wolf(C: LinearCode) -> int:
    return min(C.k, C.n - C.k)


def is_mds(C: LinearCode, d: int | None = None) -> bool:
    if d is None:
        d = min_distance_bruteforce(C)
    return d == singleton(C)


def subset_ranks(C: LinearCode) -> np.ndarray:
    """``rank(G[:, S])`` for every column subset ``S`` given as a bitmask."""
    F, G, n = C.field, C.generator, C.n
    out = np.zeros(1 << n, dtype=np.int64)
    for mask in range(1, 1 << n):
        cols = [c for c in range(n) if mask >> c & 1]
        out[mask] = rank(F, G[:, cols])
    return out


def profile_for_order(ranks, k: int, order) -> tuple[int, ...]:
    """State profile of the permuted code from a :func:`subset_ranks` table."""
    full = len(ranks) - 1
    values = [0]
    mask = 0
    for c in order:
        mask |= 1 << c
        values.append(int(ranks[mask] + ranks[full ^ mask] - k))
    return tuple(values)


def min_state_complexity_exhaustive(C: LinearCode) -> tuple[int, tuple[int, ...]]:
    """Exact ``s(C)`` over all ``n!`` orderings and the first minimizing one."""
    if C.n > EXHAUSTIVE_MAX_LENGTH:
        raise BudgetExceeded(
            "exhaustive", f"length {C.n} exceeds exhaustive-ordering budget {EXHAUSTIVE_MAX_LENGTH}"
        )
    ranks = subset_ranks(C)
    full = len(ranks) - 1
    k = C.k
    # s_T only depends on prefix sets, so precompute per-mask state dimension
    state = ranks + ranks[full ^ np.arange(full + 1)] - k
    state = state.tolist()
    best, best_order = None, None
    for order in itertools.permutations(range(C.n)):
        mask = 0
        worst = 0
        for c in order:
            mask |= 1 << c
            if state[mask] > worst:
                worst = state[mask]
                if best is not None and worst >= best:
                    break
        else:
            if best is None or worst < best:
                best, best_order = worst, order
                if best == 0:
                    break
    return best, best_order


def random_order_search(C: LinearCode, trials: int = 200, seed: int = 0) -> tuple[int, tuple[int, ...]]:
    """Best ``s_T`` over random orderings; an upper bound on ``s(C)`` only."""
    rng = np.random.default_rng(seed)
    best = (state_profile_ranks(C).s_T, tuple(range(C.n)))
    for _ in range(trials):
        order = tuple(int(c) for c in rng.permutation(C.n))
        s = state_profile_ranks(permute(C, order)).s_T
        if s < best[0]:
            best = (s, order)
    return best


def greedy_order(C: LinearCode) -> tuple[int, tuple[int, ...]]:
    """Append, one at a time, the column giving the smallest next state size."""
    F, G, n, k = C.field, C.generator, C.n, C.k
    chosen: list[int] = []
    remaining = list(range(n))
    while remaining:
        def cost(c):
            prefix = chosen + [c]
            rest = [x for x in remaining if x != c]
            r_rest = rank(F, G[:, rest]) if rest else 0
            return rank(F, G[:, prefix]) + r_rest - k

        c = min(remaining, key=lambda c: (cost(c), c))
        chosen.append(c)
        remaining.remove(c)
    order = tuple(chosen)
    return state_profile_ranks(permute(C, order)).s_T, order
