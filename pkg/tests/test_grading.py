from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhfk.diagram import Domain, euler_measure, simple_knot_diagram, surface_class
from rhfk.errors import InconsistentClass
from rhfk.grading import (
    alexander_grading,
    canonical_framing,
    centered_fraction,
    compute_gradings,
    compute_k_s,
    find_relative_periodic_domain,
    other_relative_periodic_domains,
    relative_maslov,
    spinc_partition,
)


def test_class_counts(unknot, simple412, trefoil):
    assert len(spinc_partition(unknot)) == 1
    assert [len(c.members) for c in spinc_partition(simple412)] == [1, 1, 1, 1]
    assert [len(c.members) for c in spinc_partition(trefoil)] == [3]


def test_periodic_domain_boundary_normal_form(unknot, simple412):
    for dia, q in ((unknot, 1), (simple412, 2)):
        P = find_relative_periodic_domain(dia)
        assert P.q == q
        bd = P.domain.boundary()
        for (c, s), coef in bd.items():
            want = q if c == "lambda" else (P.alpha_coeffs.get(c) if c in P.alpha_coeffs else P.beta_coeffs[c])
            assert coef == want


def test_unknot_framing_is_seifert(unknot):
    G = compute_gradings(unknot)
    fr = G.framing
    assert (fr.q, fr.c, fr.d, fr.r) == (1, 1, 1, 0)


def test_simple_knot_framing(simple412):
    fr = compute_gradings(simple412).framing
    assert fr.q == 2 and fr.c * fr.d == 2 and 0 <= fr.r < fr.d


def test_lambda_offset_only_changes_the_shift(unknot, simple412):
    for dia in (unknot, simple412):
        P = find_relative_periodic_domain(dia)
        a = canonical_framing(dia, P)
        b = canonical_framing(dia, P, lambda_offset=3)
        assert (a.q, a.c, a.d, a.r) == (b.q, b.c, b.d, b.r)
        assert b.shift - a.shift == 3


def test_euler_measure_examples(simple412, trefoil):
    # a square region of the simple knot, a coarse bigon of the trefoil, the whole torus
    sq = simple412.coarse_regions[0]
    mult = [0] * len(simple412.regions)
    for r in sq:
        mult[r] = 1
    assert euler_measure(Domain(simple412, tuple(mult))) == 0
    bigon = next(c for c in range(len(trefoil.coarse_regions)) if trefoil.coarse_corner_count(c) == 2)
    mult = [0] * len(trefoil.regions)
    for r in trefoil.coarse_regions[bigon]:
        mult[r] = 1
    assert euler_measure(Domain(trefoil, tuple(mult))) == F(1, 2)
    assert euler_measure(surface_class(trefoil)) == 0


def test_table_one_gradings(simple412):
    G = compute_gradings(simple412)
    assert [G.A[n] for n in "abcd"] == [F(0), F(1, 2), F(0), F(-1, 2)]


def test_unknot_and_trefoil_gradings(unknot, trefoil):
    assert list(compute_gradings(unknot).A.values()) == [0]
    G = compute_gradings(trefoil)
    assert sorted(G.A.values()) == [-1, 0, 1]


def test_k_s_examples():
    assert compute_k_s([F(1, 2)]) == F(-1, 2)
    assert compute_k_s([F(0)]) == 0
    assert compute_k_s([F(1), F(0), F(-1)]) == 0
    with pytest.raises(InconsistentClass):
        compute_k_s([F(0), F(1, 2)])


@given(st.fractions())
def test_centered_fraction_range(a):
    k = centered_fraction(a)
    assert F(-1, 2) <= k < F(1, 2) and (a - k).denominator == 1


def test_relative_drops_and_maslov(trefoil):
    G = compute_gradings(trefoil)
    S = surface_class(trefoil)
    for x in G.generators:
        assert relative_maslov(x, x, Domain(trefoil, (0,) * len(trefoil.regions))) == 0
        for y in G.generators:
            if x is y:
                continue
            D = G.solver.connecting(x, y)
            assert G.A[x.name] - G.A[y.name] == D.n_z - D.n_w
            assert G.gr[x.name] - G.gr[y.name] == relative_maslov(x, y, D)
            # adding the surface changes n_w by one and the index by two
            assert relative_maslov(x, y, D + S) == relative_maslov(x, y, D)


def test_bigon_indices(trefoil):
    G = compute_gradings(trefoil)
    S = surface_class(trefoil)
    seen = {}
    for x in G.generators:
        for y in G.generators:
            if x is y:
                continue
            D = G.solver.connecting(x, y)
            for k in range(-1, 2):
                E = D + S.scale(k)
                if E.is_positive() and max(E.mult) <= 1 and E.euler == F(1, 2):
                    seen[E.n_w] = relative_maslov(x, y, E)
    # both bigons have index one; the grading drop is 1 - 2 n_w
    assert seen == {0: 1, 1: -1}


def test_alexander_independent_of_the_periodic_domain(simple412, trefoil):
    for dia in (simple412, trefoil):
        G = compute_gradings(dia)
        for P in other_relative_periodic_domains(G.periodic):
            assert {g.name: alexander_grading(g, P) for g in G.generators} == G.A


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 9).flatmap(lambda p: st.tuples(
    st.just(p), st.sampled_from([q for q in range(1, p) if __import__("math").gcd(p, q) == 1]),
    st.integers(0, p - 1))))
def test_simple_knot_gradings_are_symmetric(params):
    G = compute_gradings(simple_knot_diagram(*params))
    vals = sorted(G.A.values())
    assert vals == sorted(-v for v in vals)
    for cl in G.classes:
        assert F(-1, 2) <= cl.k_s < F(1, 2)
        assert all((G.A[n] - cl.k_s).denominator == 1 for n in cl.members)
    # denominators divide 2q
    assert all((2 * G.periodic.q * a).denominator == 1 for a in vals)
