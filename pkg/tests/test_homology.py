from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest

from model_complexes import staircase
from rhfk import gf2
from rhfk.chain import chain_map, subquotient
from rhfk.errors import UnstableWindow
from rhfk.homology import (
    TauEngine,
    class_tau,
    euler_characteristic,
    hfk_ranks,
    homology_f2,
    induced_map,
    tau,
    tau_minus,
    tau_report,
)


def test_ranks(complexes):
    assert homology_f2(subquotient(complexes["unknot"], "s0", "i=0")).rank == 1
    assert homology_f2(subquotient(complexes["trefoil"], "s0", "i=0")).rank == 1
    S = complexes["simple(4,1,2)"]
    assert sum(homology_f2(subquotient(S, c, "i=0")).rank for c in S.classes) == 4


def test_zero_differential_rank_is_dimension():
    D = np.zeros((5, 5), dtype=np.uint8)
    assert homology_f2(D).rank == 5


def test_identity_inclusion_induces_identity(complexes):
    C = complexes["trefoil"]
    hat = subquotient(C, "s0", "i=0")
    H = homology_f2(hat)
    M = induced_map(chain_map(hat, hat), H, H)
    assert (M == np.eye(H.rank, dtype=np.uint8)).all()


def test_functoriality_of_inclusions(complexes):
    C = complexes["trefoil"]
    F0 = subquotient(C, "s0", "F", m=0)
    F1 = subquotient(C, "s0", "F", m=1)
    hat = subquotient(C, "s0", "i=0")
    H0, H1, Hh = homology_f2(F0), homology_f2(F1), homology_f2(hat)
    a = induced_map(chain_map(F0, F1), H0, H1)
    b = induced_map(chain_map(F1, hat), H1, Hh)
    c = induced_map(chain_map(F0, hat), H0, Hh)
    assert (gf2.matmul(b, a) == c).all()


def test_filtration_below_range_maps_to_zero(complexes):
    E = TauEngine(complexes["trefoil"], "s0")
    assert E.I_m(-3).shape[1] == 0


def test_tau_examples(complexes):
    assert tau(complexes["unknot"], "s0") == 0
    assert tau_minus(complexes["unknot"], "s0") == -1
    S = complexes["simple(4,1,2)"]
    assert [tau(S, c) for c in S.classes] == [F(0), F(1, 2), F(0), F(-1, 2)]
    assert tau_minus(S, "s1") == F(-1, 2)
    assert tau(complexes["trefoil"], "s0") == 1
    assert tau_minus(complexes["trefoil"], "s0") == 0
    assert tau(complexes["trefoil-mirror"], "s0") == -1


def test_rho_hits_the_bottom_of_the_tower(complexes):
    E = TauEngine(complexes["trefoil"], "s0")
    cy = E.c_Y()
    assert cy.shape[1] == 1
    assert gf2.in_span(E.tower(), cy)
    # the bottom of the tower: U kills c_Y, but c_Y is U of a tower element
    U = induced_map(chain_map(E.plus, E.plus, shift=1), E.H_plus, E.H_plus)
    assert not gf2.matmul(U, cy).any()
    assert gf2.in_span(gf2.matmul(U, E.tower()), cy)


def test_slow_and_fast_tau_agree(complexes):
    for C in list(complexes.values()) + [staircase([1, 2]), staircase([1, 1, 1])]:
        for cls in C.classes:
            E = TauEngine(C, cls)
            assert E.tau() == E.tau_slow()


def test_tfae_and_tau_minus(complexes):
    for C in list(complexes.values()) + [staircase([2, 1])]:
        for cls in C.classes:
            t = class_tau(C, cls, with_tfae=True)
            assert t.tau_minus == t.tau - 1
            assert all(len(set(v)) == 1 for v in t.tfae.values())
            lo, hi = C.a_range(cls)
            assert lo <= t.tau <= hi and (t.tau - t.k).denominator == 1


def test_euler_characteristic_of_hat(complexes):
    for C in complexes.values():
        for cls in C.classes:
            assert abs(euler_characteristic(subquotient(C, cls, "i=0"))) == 1


def test_window_stability(complexes):
    for C in complexes.values():
        for cls in C.classes:
            N = C.default_window(cls)
            a, b = TauEngine(C, cls, N), TauEngine(C, cls, N + 2)
            assert (a.tau(), a.tau_minus(), a.profile()) == (b.tau(), b.tau_minus(), b.profile())


def test_too_small_window_is_reported(complexes):
    with pytest.raises(UnstableWindow):
        class_tau(complexes["trefoil"], "s0", N=0)


def test_report_lines_and_jobs(complexes):
    S = complexes["simple(4,1,2)"]
    rep = tau_report(S)
    assert rep.lines() == ["(s0, 0, 0, -1)", "(s1, -1/2, 1/2, -1/2)", "(s2, 0, 0, -1)", "(s3, -1/2, -1/2, -3/2)"]
    assert tau_report(S, jobs=2).lines() == rep.lines()


def test_hfk_ranks(complexes):
    assert hfk_ranks(complexes["trefoil"]) == {("s0", F(-1)): 1, ("s0", F(0)): 1, ("s0", F(1)): 1}
    assert hfk_ranks(staircase([1, 1]))[("s0", F(0))] == 1
