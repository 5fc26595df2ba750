from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from lorenz_fiber.braid import LorenzBraid, build_braid, closure_components
from lorenz_fiber.diagram import enumerate_all, from_columns


def _cycles(perm):
    return sorted(tuple(c) for c in _cycle_list(perm))


def _cycle_list(perm):
    seen, out = set(), []
    for s in range(1, len(perm) + 1):
        if s in seen:
            continue
        cyc, i = [], s
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = perm[i - 1]
        out.append(cyc)
    return out


def test_hopf_braid():
    B = build_braid(from_columns([1]))
    assert B.n == 4 and B.word == (2, 1, 3, 2)
    assert _cycles(B.permutation) == [(1, 3), (2, 4)]
    assert closure_components(B) == 2


def test_trefoil_and_square():
    B = build_braid(from_columns([2]))
    assert B.n == 5 and len(B.word) == 6 and closure_components(B) == 1
    B = build_braid(from_columns([2, 2]))
    assert B.n == 6 and len(B.word) == 9 and closure_components(B) == 3


def test_identity_closure():
    assert closure_components(LorenzBraid(4, ())) == 4


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("c", range(1, 6))
def test_rectangles_are_torus_links(r, c):
    B = build_braid(from_columns([r] * c))
    assert B.n == r + c + 2
    assert len(B.word) == (r + 1) * (c + 1)
    assert closure_components(B) == gcd(r + 1, c + 1)


def test_corpus_invariants():
    for D in enumerate_all(10):
        B = build_braid(D)
        assert len(B.word) - B.n + 1 == D.size
        assert all(1 <= g < B.n for g in B.word)
        # every generator occurs, so the canonical surface is connected
        assert set(B.word) == set(range(1, B.n))
        assert closure_components(B) == closure_components(build_braid(D.transpose()))
        # permutation is the composite of the word's transpositions
        pos = list(range(1, B.n + 1))
        for g in B.word:
            pos[g - 1], pos[g] = pos[g], pos[g - 1]
        assert all(B.permutation[s - 1] == p + 1 for p, s in enumerate(pos))


@given(st.lists(st.integers(1, 5), max_size=30))
def test_permutation_is_a_bijection(word):
    B = LorenzBraid(6, tuple(word))
    assert sorted(B.permutation) == list(range(1, 7))
    assert closure_components(B) == len(_cycle_list(B.permutation))
