from __future__ import annotations

import math

import pytest

from lorenz_fiber.diagram import classify_cells, decompose, enumerate_all, enumerate_family, from_columns
from lorenz_fiber.dynamics import (BoundDegenerate, NotInFamilyRegime, blockwise_violations,
                                   default_steps, external_lemma_check, growth_rate,
                                   internal_lemma_check, orbit_trace, theorem_bound_check,
                                   transit_lengths)
from lorenz_fiber.matrix import matvec, order
from conftest import pipeline


def _family(b_max=3, k_max=4, l_min=2, l_max=6):
    for b in range(1, b_max + 1):
        yield from enumerate_family(b, k_max, l_min, l_max)


def test_hopf_orbit():
    D, _, S, M, _ = pipeline((1,))
    T = orbit_trace(M.H_inv, S.cells, (1, 1), 60)
    assert set(T.vectors) == {(1,)}
    assert set(T.l1_norms) == {1}
    assert growth_rate(T) == 0.0 and T.est_growth_rate == 0.0


def test_trefoil_orbit_returns():
    _, _, S, M, _ = pipeline((2,))
    T = orbit_trace(M.H_inv, S.cells, (2, 1), 6)
    assert T.vectors[6] == T.vectors[0] == (0, 1)
    assert all(T.vectors[n] != T.vectors[0] for n in range(1, 6))


def test_orbit_trace_definition():
    _, _, S, M, _ = pipeline((4, 3, 1))
    T = orbit_trace(M.H_inv, S.cells, (1, 2), 25)
    assert T.steps == 25
    for a, b in zip(T.vectors, T.vectors[1:]):
        assert b == matvec(M.H_inv, a)
    assert min(T.l1_norms) >= 1
    assert all(s == {c for c, x in zip(S.cells, v) if x} for s, v in zip(T.supports, T.vectors))
    with pytest.raises(ValueError):
        orbit_trace(M.H_inv, S.cells, (9, 9), 5)
    with pytest.raises(ValueError):
        orbit_trace(M.H_inv, S.cells, (1, 1), 0)


def test_growth_rate_requires_long_traces():
    _, _, S, M, _ = pipeline((2,))
    with pytest.raises(ValueError):
        growth_rate(orbit_trace(M.H_inv, S.cells, (1, 1), 10))


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("c", range(1, 6))
def test_rectangles_are_periodic(r, c):
    _, _, S, M, _ = pipeline((r,) * c)
    period = order(M.H_inv, limit=5000)
    assert period is not None
    N = max(default_steps(r), 2 * period + 2)
    for cell in S.cells:
        T = orbit_trace(M.H_inv, S.cells, cell, N)
        assert T.vectors[period] == T.vectors[0]
        assert abs(growth_rate(T)) <= 1e-6


def test_window_estimator_oscillates_on_rectangles():
    # the plain late-window ratio is not 0 on a periodic orbit whose norm oscillates
    _, _, S, M, _ = pipeline((2, 2, 2))
    rates = [growth_rate(orbit_trace(M.H_inv, S.cells, c, 200), "window") for c in S.cells]
    assert any(abs(x) > 1e-6 for x in rates)


def test_internal_lemma_examples():
    rep = internal_lemma_check(from_columns([1]))
    assert rep.ok and rep.checked == 0
    rep = internal_lemma_check(from_columns([2, 2]))
    assert rep.ok and rep.checked == 2


def test_internal_lemma_corpus():
    for D in enumerate_all(12):
        _, _, S, M, _ = pipeline(D.columns)
        rep = internal_lemma_check(D, S, M)
        assert rep.ok, rep.to_dict()
        assert rep.checked == len(classify_cells(D).internal)


def test_external_lemma_regime():
    with pytest.raises(NotInFamilyRegime):
        external_lemma_check(from_columns([3, 3]))
    with pytest.raises(NotInFamilyRegime):
        external_lemma_check(from_columns([2, 1]))
    with pytest.raises(ValueError):
        external_lemma_check(from_columns([4, 3]), zone="elsewhere")


def test_external_lemma_literal_counterexample():
    # H_inv^2 e_(1,1) = e_(3,1) + e_(3,2) on [4,3]: row 3 is still in the rectangle
    rep = external_lemma_check(from_columns([4, 3]))
    bad = {v.cell: v.got for v in rep.violations}
    _, _, S, _, _ = pipeline((4, 3))
    got = {c for c, x in zip(S.cells, bad[(1, 1)]) if x}
    assert got == {(3, 1), (3, 2)}


def test_external_lemma_widened_holds_on_family():
    for D in _family():
        if decompose(D).k == 0:
            continue
        _, _, S, M, _ = pipeline(D.columns)
        assert external_lemma_check(D, "widened", S, M).ok, D


def test_bound_examples():
    rep = theorem_bound_check(from_columns([7, 7, 2, 2]))
    assert (rep.b, rep.k, rep.l, rep.cells) == (4, 10, 2, 18)
    assert math.isclose(rep.bound, 4 * math.log(10) / 8)
    assert math.isclose(rep.bound_surface_chi, 4 * math.log(10) / 7)
    assert rep.holds and rep.margin >= 0
    with pytest.raises(BoundDegenerate):
        theorem_bound_check(from_columns([3, 2]))
    with pytest.raises(BoundDegenerate):
        theorem_bound_check(from_columns([2, 2]))


def test_bound_six_eleven():
    # width 6 with 11 extra cells: bound = 6 log 11 / (6 l)
    for l in (1, 2, 3):
        D = from_columns([l + 4, l + 3, l + 2, l + 1, l + 1, l])
        F = decompose(D)
        assert (F.b, F.k, F.l) == (6, 11, l)
        rep = theorem_bound_check(D)
        assert math.isclose(rep.bound, math.log(11) / l)


def test_bound_family():
    for D in _family():
        if decompose(D).k < 2:
            continue
        _, _, S, M, _ = pipeline(D.columns)
        rep = theorem_bound_check(D, S, M)
        assert rep.holds and rep.margin >= -1e-9, D


def test_transit_lengths():
    assert set(transit_lengths(from_columns([3, 3])).values()) == {None}
    D = from_columns([4, 3, 3])
    out = transit_lengths(D)
    assert all(out[c] == 0 for c in decompose(D).mixing_cells)
    # columns touching the mixing zone arrive after `row` steps, column 3 never does
    for (row, col), n in out.items():
        if row <= 3:
            assert n == (row if col <= 2 else None)
    out = transit_lengths(from_columns([4, 4, 3]))
    assert all(n == (0 if row == 4 else row) for (row, _), n in out.items())


def test_blockwise_helper():
    _, _, S, M, _ = pipeline((5, 3))
    T = orbit_trace(M.H_inv, S.cells, (1, 1), 40)
    norms = T.l1_norms
    assert blockwise_violations(T, 10 ** 6, 3) == []
    assert blockwise_violations(T, 0, 3) == list(range(len(norms) - 3))
