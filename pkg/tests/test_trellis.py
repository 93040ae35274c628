import numpy as np
import pytest

from agtrellis.code import BudgetExceeded, code_from_matrix, state_profile
from agtrellis.gf import field_of_order
from agtrellis.trellis import build_minimal_trellis, viterbi_decode
from conftest import random_codes


def nearest_codeword(C, received):
    """Oracle: scan every codeword, ties broken lexicographically."""
    words = C.all_codewords()
    dist = np.count_nonzero(words != np.asarray(received), axis=1)
    best = words[dist == dist.min()]
    order = np.lexsort(best.T[::-1])
    return best[order[0]], int(dist.min())


def test_self_dual_trellis(self_dual_code):
    T = build_minimal_trellis(self_dual_code)
    assert T.level_sizes == (1, 2, 1, 2, 1)
    assert T.state_profile() == (0, 1, 0, 1, 0)
    assert T.count_paths() == 4
    assert set(T.paths()) == {(0, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1)}
    assert "level 1: 2" in T.dump()


def test_repetition_trellis():
    T = build_minimal_trellis(code_from_matrix(field_of_order(2), [[1, 1, 1]]))
    assert T.level_sizes == (1, 2, 2, 1)
    assert sorted(T.paths()) == [(0, 0, 0), (1, 1, 1)]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_trellis_matches_code(q, rng):
    for C in random_codes(q, 100, rng, max_n=8, max_k=4):
        T = build_minimal_trellis(C)
        assert T.state_profile() == state_profile(C).values
        assert T.count_paths() == q**C.k
        assert set(T.paths()) == {tuple(w) for w in C.all_codewords().tolist()}


def test_viterbi_examples(self_dual_code):
    T = build_minimal_trellis(self_dual_code)
    word, dist = viterbi_decode(T, [1, 0, 0, 0])
    assert word.tolist() == [0, 0, 0, 0] and dist == 1
    word, dist = viterbi_decode(T, [1, 1, 1, 1])
    assert word.tolist() == [1, 1, 1, 1] and dist == 0
    with pytest.raises(ValueError):
        viterbi_decode(T, [1, 0, 0])
    with pytest.raises(ValueError):
        viterbi_decode(T, [2, 0, 0, 0])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_viterbi_matches_bruteforce(q, rng):
    F = field_of_order(q)
    for C in random_codes(q, 40, rng, max_n=10, max_k=16):
        if q**C.k > 2**16:
            continue
        T = build_minimal_trellis(C)
        for _ in range(3):
            r = rng.integers(0, q, size=C.n)
            word, dist = viterbi_decode(T, r)
            expect, edist = nearest_codeword(C, r)
            assert dist == edist
            assert word.tolist() == expect.tolist()
            assert C.contains(word)


def test_trellis_budget():
    F = field_of_order(2)
    C = code_from_matrix(F, np.hstack([np.eye(6, dtype=int), np.eye(6, dtype=int)]))
    with pytest.raises(BudgetExceeded) as exc:
        build_minimal_trellis(C, budget=16)
    assert exc.value.budget == "trellis"
