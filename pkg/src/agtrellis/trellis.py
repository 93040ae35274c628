"""Explicit minimal trellises and hard-decision Viterbi decoding.

States at boundary ``i`` are coefficient vectors of the minimal-span
generator rows active across that boundary, encoded as base-``q`` integers.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import BudgetExceeded, LinearCode, minimal_span_generator, _spans
from .gf import GF

LEVEL_BUDGET = 2**20


@dataclass(frozen=True)
class Trellis:
    field: GF
    n: int
    level_sizes: tuple[int, ...]
    # edges[i] is an (E, 3) array of (from_state, to_state, label) for
    # positions i -> i + 1
    edges: tuple[np.ndarray, ...]

    def state_profile(self) -> tuple[int, ...]:
        q = self.field.q
        out = []
        for size in self.level_sizes:
            s = 0
            while q**s < size:
                s += 1
            out.append(s)
        return tuple(out)

    def count_paths(self) -> int:
        counts = {0: 1}
        for E in self.edges:
            nxt: dict[int, int] = {}
            for u, v, _ in E.tolist():
                if u in counts:
                    nxt[v] = nxt.get(v, 0) + counts[u]
            counts = nxt
        return sum(counts.values())

    def paths(self):
        """Yield every source-to-sink label sequence (small trellises only)."""
        out_edges = [_adjacency(E) for E in self.edges]

        def walk(level, state, prefix):
            if level == self.n:
                yield tuple(prefix)
                return
            for v, label in out_edges[level].get(state, ()):
                prefix.append(label)
                yield from walk(level + 1, v, prefix)
                prefix.pop()

        yield from walk(0, 0, [])

    def dump(self) -> str:
        """Debug text: level sizes, then the edge list for short codes."""
        lines = [f"level {i}: {size}" for i, size in enumerate(self.level_sizes)]
        if self.n <= 12:
            for i, E in enumerate(self.edges):
                for u, v, label in sorted(E.tolist()):
                    lines.append(f"{i} {u} {v} {label}")
        return "\n".join(lines) + "\n"


def _adjacency(E):
    adj: dict[int, list[tuple[int, int]]] = {}
    for u, v, label in E.tolist():
        adj.setdefault(u, []).append((v, label))
    return adj


def build_minimal_trellis(C: LinearCode, budget: int = LEVEL_BUDGET) -> Trellis:
    F, q, n = C.field, C.field.q, C.n
    G = minimal_span_generator(C)
    starts, ends = _spans(G)
    active = [[r for r in range(len(G)) if starts[r] < i <= ends[r]] for i in range(n + 1)]
    sizes = tuple(q ** len(a) for a in active)
    if max(sizes) > budget:
        raise BudgetExceeded("trellis", f"level size {max(sizes)} exceeds trellis budget {budget}")

    edges = []
    for i in range(n):
        here = active[i]
        new = [r for r in range(len(G)) if starts[r] == i]
        involved = here + new
        nxt = active[i + 1]
        m = len(involved)
        combos = np.arange(q**m, dtype=np.int64)
        # column j of coeffs is the coefficient of involved[j]; the first
        # len(here) digits form the current state's base-q encoding
        weights = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
        coeffs = (combos[:, None] // weights) % q
        column = G[involved, i] if m else np.zeros(0, dtype=np.int64)
        labels = F.sum(F.mul(coeffs, column[None, :]), axis=1) if m else np.zeros(1, dtype=np.int64)
        src = _encode(coeffs[:, : len(here)], q)
        pos = {r: j for j, r in enumerate(involved)}
        dst = _encode(coeffs[:, [pos[r] for r in nxt]], q)
        edges.append(np.stack([src, dst, labels], axis=1))
    return Trellis(F, n, sizes, tuple(edges))


def _encode(digits, q):
    if digits.shape[1] == 0:
        return np.zeros(len(digits), dtype=np.int64)
    weights = q ** np.arange(digits.shape[1] - 1, -1, -1, dtype=np.int64)
    return digits @ weights


def viterbi_decode(T: Trellis, received) -> tuple[np.ndarray, int]:
    """Nearest codeword in Hamming distance and that distance.

    Among equally near codewords the lexicographically smallest (by element
    code, left to right) is returned.
    """
    received = np.asarray(received, dtype=np.int64)
    if received.shape != (T.n,):
        raise ValueError(f"received word must have length {T.n}")
    if received.min(initial=0) < 0 or received.max(initial=0) >= T.field.q:
        raise ValueError(f"received symbols out of range for GF({T.field})")

    # cost_to_go[i][state]: fewest symbol errors from boundary i to the sink
    INF = T.n + 1
    cost = [None] * (T.n + 1)
    cost[T.n] = np.zeros(T.level_sizes[T.n], dtype=np.int64)
    for i in range(T.n - 1, -1, -1):
        E = T.edges[i]
        edge_cost = (E[:, 2] != received[i]).astype(np.int64) + cost[i + 1][E[:, 1]]
        c = np.full(T.level_sizes[i], INF, dtype=np.int64)
        np.minimum.at(c, E[:, 0], edge_cost)
        cost[i] = c

    best = int(cost[0][0])
    states = np.array([0])
    remaining = best
    word = []
    for i in range(T.n):
        E = T.edges[i]
        E = E[np.isin(E[:, 0], states)]
        step = (E[:, 2] != received[i]).astype(np.int64)
        ok = E[step + cost[i + 1][E[:, 1]] == remaining]
        label = int(ok[:, 2].min())
        chosen = ok[ok[:, 2] == label]
        word.append(label)
        remaining -= int(label != received[i])
        states = np.unique(chosen[:, 1])
    return np.array(word, dtype=np.int64), best
