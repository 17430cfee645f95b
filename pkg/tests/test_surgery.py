from __future__ import annotations

from fractions import Fraction as F

import pytest

from model_complexes import staircase
from rhfk.errors import DichotomyViolation
from rhfk.grading import FramingData
from rhfk.homology import tau
from rhfk.surgery import (
    cobordism_map,
    dichotomy_bracket,
    f_value,
    large_surgery_homology,
    stable_range,
    surgery_row,
    surgery_rows,
    surgery_spinc_label,
)


def test_f_values():
    assert f_value(F(1, 2)) == 1 and f_value(0) == 0 and f_value(1) == 2


def test_piece_ranks(complexes):
    assert large_surgery_homology(complexes["unknot"], "s0", 0).rank == 1
    S = complexes["simple(4,1,2)"]
    for row in surgery_rows(S):
        assert row.rank == 1 and row.euler == 1
    for m in range(-2, 3):
        assert abs(surgery_row(complexes["trefoil"], "s0", m).euler) == 1
    assert surgery_row(complexes["trefoil"], "s0", 0).rank == 3


def test_row_format(complexes):
    assert surgery_row(complexes["trefoil"], "s0", 0).line() == "(s0, 0, 3, 1, -)"
    assert surgery_row(complexes["trefoil"], "s0", 5).line() == "(s0, 5, 1, 1, stable)"


def test_cobordism_examples(complexes):
    T, U = complexes["trefoil"], complexes["unknot"]
    assert cobordism_map(T, "s0", 0, tau=F(1)).survives
    assert not cobordism_map(T, "s0", 2, tau=F(1)).survives
    assert cobordism_map(U, "s0", -1, tau=F(0)).survives


def test_dichotomy_rederives_tau(complexes):
    for C in list(complexes.values()) + [staircase([1, 2]), staircase([1, 1, 1])]:
        for cls in C.classes:
            t = tau(C, cls)
            last, first = dichotomy_bracket(C, cls, t)
            assert first - last == 1 and t in (last, first)


def test_wrong_tau_is_a_violation(complexes):
    with pytest.raises(DichotomyViolation):
        # claiming tau = -1 for the trefoil puts level 0 above tau, where a preimage must die
        cobordism_map(complexes["trefoil"], "s0", 0, tau=F(-1))


def test_stabilisations(complexes):
    from rhfk.chain import subquotient
    from rhfk.homology import homology_f2

    for C in complexes.values():
        for cls in C.classes:
            lo, hi = stable_range(C, cls)
            hat = homology_f2(subquotient(C, cls, "i=0")).rank
            assert large_surgery_homology(C, cls, lo - 2).rank == hat
            vert = homology_f2(subquotient(C, cls, "j=m", m=hi + 2)).rank
            assert large_surgery_homology(C, cls, hi + 2).rank == vert


def test_spinc_labels():
    fr = FramingData(q=1, c=1, d=1, r=0)
    assert surgery_spinc_label(0, 0, fr, 5) == 5
    fr2 = FramingData(q=2, c=1, d=2, r=1)
    assert surgery_spinc_label(F(-1, 2), 1, fr2, 6) == 13
    assert surgery_spinc_label(F(-1, 2), 2, fr2, 6) - surgery_spinc_label(F(-1, 2), 1, fr2, 6) == 4
