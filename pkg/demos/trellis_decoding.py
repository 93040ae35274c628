"""Build the minimal trellis of a small Reed-Solomon code and decode on it."""
import numpy as np

from agtrellis.code import min_state_complexity_exhaustive, permute, state_profile_msgm
from agtrellis.curves import reed_solomon
from agtrellis.gf import field_create
from agtrellis.trellis import build_minimal_trellis, viterbi_decode

F = field_create(2, 3)
C = reed_solomon(F, 7, 3)
print(C, "profile", state_profile_msgm(C).values)

s, order = min_state_complexity_exhaustive(C)
print("s(C) =", s, "via ordering", order)

T = build_minimal_trellis(permute(C, order))
print("vertices per level:", T.level_sizes, "paths:", T.count_paths())

rng = np.random.default_rng(7)
sent = permute(C, order).encode(rng.integers(0, F.q, size=C.k))
received = sent.copy()
received[2] = F.add(received[2], 5)
word, dist = viterbi_decode(T, received)
print("sent    ", sent.tolist())
print("received", received.tolist())
print("decoded ", word.tolist(), "distance", dist)
