"""Acceptance criteria, one pytest case and one printed pass/fail line each.

Run directly (``python3 tests/test_acceptance.py``) to print only the summary.
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import sys
import time
from fractions import Fraction as F

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import oracle  # noqa: E402
from model_complexes import staircase  # noqa: E402
from rhfk.bounds import rational_ball_genus_bound, rational_genus  # noqa: E402
from rhfk.chain import complex_from_diagram, subquotient  # noqa: E402
from rhfk.cli import main  # noqa: E402
from rhfk.diagram import load, trefoil_diagram, unknot_diagram  # noqa: E402
from rhfk.errors import UnstableWindow  # noqa: E402
from rhfk.grading import (alexander_grading, centered_fraction, compute_gradings,  # noqa: E402
                          other_relative_periodic_domains)
from rhfk.homology import TauEngine, class_tau, hfk_ranks, homology_f2  # noqa: E402
from rhfk.surgery import dichotomy_bracket, large_surgery_homology, stable_range, surgery_row  # noqa: E402
from rhfk.symmetries import conjugate, dualize, tensor  # noqa: E402

HERE = os.path.dirname(os.path.abspath(__file__))
DIAGRAMS = os.path.join(os.path.dirname(HERE), "diagrams")
DIAGRAM_FILES = sorted(os.listdir(DIAGRAMS))


def _diagrams():
    return {name: load(os.path.join(DIAGRAMS, name)) for name in DIAGRAM_FILES}


def _example_complexes():
    """Every shipped diagram plus two model complexes with nonzero differential."""
    out = {name: complex_from_diagram(d) for name, d in _diagrams().items()}
    out["stair(1,2)"] = staircase([1, 2])
    out["stair(2,1,1)"] = staircase([2, 1, 1])
    return out


def _cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main([str(a) for a in argv])
    return code, buf.getvalue()


class Failed(Exception):
    pass


def expect(cond, msg):
    if not cond:
        raise Failed(msg)


# --- the criteria ---------------------------------------------------------


def simple_knot_oracle():
    f = os.path.join(DIAGRAMS, "simple_4_1_2.json")
    code, out = _cli("--format", "machine", "hfk", f)
    expect(code == 0, f"hfk exit {code}")
    data = json.loads(out)
    got = [F(g["A"]) for g in data["generators"]]
    expect(got == [F(0), F(1, 2), F(0), F(-1, 2)], f"A = {got}")
    classes = [g["class"] for g in data["generators"]]
    expect(len(set(classes)) == 4, "classes are not singletons")
    code, out = _cli("--format", "machine", "tau", f)
    expect(code == 0, f"tau exit {code}")
    taus = [F(r["tau"]) for r in json.loads(out)["rows"]]
    expect(taus == got, f"tau = {taus}")
    return "A = tau = {0, 1/2, 0, -1/2}"


def s3_sanity():
    for dia, want_tau, want_profile in ((unknot_diagram(), 0, {F(0): 1}),
                                        (trefoil_diagram(), 1, {F(1): 1, F(0): 1, F(-1): 1})):
        C = complex_from_diagram(dia)
        ref = oracle.run(dia, max_mult=3)
        hat = homology_f2(subquotient(C, "s0", "i=0")).rank
        profile = {A: r for (_, A), r in hfk_ranks(C).items() if r}
        t = class_tau(C, "s0").tau
        expect(hat == ref.hat_rank == 1, f"{dia.name}: HF-hat rank {hat}, oracle {ref.hat_rank}")
        expect(t == ref.tau == want_tau, f"{dia.name}: tau {t}, oracle {ref.tau}")
        expect(profile == ref.hfk == want_profile, f"{dia.name}: profile {profile}, oracle {ref.hfk}")
        expect({(a.src, a.tgt, a.nw, a.nz) for a in C.arrows} == ref.arrows, f"{dia.name}: arrows")
    return "unknot tau 0, trefoil tau 1, profile {1, 0, -1}, oracle agrees"


def tau_symmetry():
    n = 0
    for name, C in _example_complexes().items():
        D = dualize(C)
        cj = conjugate(C)
        expect(sorted(cj.J.values()) == sorted(C.classes), f"{name}: conjugation is not a bijection")
        for s in C.classes:
            t = class_tau(C, s)
            expect(class_tau(D, s).tau == -t.tau, f"{name} {s}: dual tau")
            expect(t.tau_minus == t.tau - 1, f"{name} {s}: tau^-")
            J = cj.J[s]
            expect(C.k[J] == centered_fraction(-C.k[s]), f"{name} {s}: k of the partner")
            expect(sorted(b.A for b in C.members(J)) == sorted(-b.A for b in C.members(s)),
                   f"{name} {s}: A data of the partner")
            n += 1
    return f"{n} classes"


def additivity():
    simple = complex_from_diagram(load(os.path.join(DIAGRAMS, "simple_4_1_2.json")))
    tref = complex_from_diagram(trefoil_diagram())
    half = next(c for c in simple.classes if class_tau(simple, c).tau == F(1, 2))
    got = {}
    for label, (A, B), cls, want in (("simple#trefoil", (simple, tref), f"{half}#s0", F(3, 2)),
                                     ("trefoil#trefoil", (tref, tref), "s0#s0", F(2))):
        T = tensor(A, B)
        got[label] = class_tau(T, cls).tau
        expect(got[label] == want, f"{label}: tau {got[label]}")
        A_of = {b.gen: b.A for b in T.basis}
        for x in A.basis:
            for y in B.basis:
                expect(A_of[f"{x.gen}*{y.gen}"] == x.A + y.A, f"{label}: A({x.gen}*{y.gen})")
    return ", ".join(f"{k} = {v}" for k, v in got.items())


def grading_consistency():
    domains = 0
    for name, dia in _diagrams().items():
        G = compute_gradings(dia)
        C = complex_from_diagram(dia)
        A = G.A
        for cl in G.classes:
            for x in cl.members:
                for y in cl.members:
                    if x == y:
                        continue
                    D = G.solver.connecting(G.gen(x), G.gen(y))
                    expect(A[x] - A[y] == D.n_z - D.n_w, f"{name}: pair ({x}, {y})")
                    domains += 1
        for a in C.arrows:
            expect(A[a.src] - A[a.tgt] == a.nz - a.nw, f"{name}: arrow {a.src} -> {a.tgt}")
            domains += 1
        for P in other_relative_periodic_domains(G.periodic):
            for g in G.generators:
                expect(alexander_grading(g, P) == A[g.name], f"{name}: {g.name} under another periodic domain")
        for cl in G.classes:
            expect(F(-1, 2) <= cl.k_s < F(1, 2), f"{name}: k_s = {cl.k_s}")
    for dia in (unknot_diagram(), trefoil_diagram(), trefoil_diagram(mirror=True)):
        ref = oracle.run(dia, max_mult=3)
        expect(ref.A == compute_gradings(dia).A, f"{dia.name}: oracle gradings from positive domains differ")
    return f"{domains} connecting domains, oracle gradings agree"


def large_surgery():
    pieces = 0
    for name, C in _example_complexes().items():
        for cls in C.classes:
            lo, hi = stable_range(C, cls)
            for m in range(lo - 2, hi + 3):
                row = surgery_row(C, cls, m)
                expect(abs(row.euler) == 1, f"{name} {cls} m={m}: chi {row.euler}")
                pieces += 1
            hat = homology_f2(subquotient(C, cls, "i=0")).rank
            expect(large_surgery_homology(C, cls, lo - 2).rank == hat, f"{name} {cls}: small-m stabilisation")
            top = homology_f2(subquotient(C, cls, "j=m", m=hi + 2)).rank
            expect(large_surgery_homology(C, cls, hi + 2).rank == top, f"{name} {cls}: large-m stabilisation")
            t = class_tau(C, cls).tau
            last, first = dichotomy_bracket(C, cls, t)
            expect(first - last == 1 and t in (last, first), f"{name} {cls}: bracket ({last}, {first})")
    return f"{pieces} pieces"


def bounds_oracle():
    code, out = _cli("bound", "--p", 1, "--tau", 1)
    expect(code == 0 and out.splitlines()[0].endswith("g >= 1"), out.splitlines()[0])
    for t in (F(-3), F(-1, 2), F(0), F(1), F(5, 2)):
        g = rational_ball_genus_bound(t)
        expect(g >= abs(t), f"rational ball: g {g} < |tau| {t}")
    rg = rational_genus({F(3, 2): 1, F(1, 2): 2}, q=2)
    expect(rg.chi_bound == 4, f"-chi(F) >= {rg.chi_bound}")
    return "g >= 1; |tau| <= g; -chi(F) >= 4"


def stability_gate():
    answers = 0
    for name, C in _example_complexes().items():
        for cls in C.classes:
            N = C.default_window(cls)
            seen = set()
            for d in (0, 2, 4):
                try:
                    s = TauEngine(C, cls, N + d).summary(with_tfae=True)
                except UnstableWindow as exc:
                    raise Failed(f"{name} {cls}: {exc}") from exc
                seen.add((s.tau, s.tau_minus, tuple(sorted(s.profile.items())), s.hat_rank, s.cy_rank,
                          tuple(sorted(s.tfae.items()))))
            expect(len(seen) == 1, f"{name} {cls}: answers move with the window")
            answers += 1
    return f"{answers} classes stable over N, N+2, N+4"


CRITERIA = [
    (1, "simple-knot oracle", simple_knot_oracle, 1.0),
    (2, "S^3 sanity against the brute-force oracle", s3_sanity, 5.0),
    (3, "tau symmetry suite", tau_symmetry, None),
    (4, "additivity suite", additivity, None),
    (5, "grading consistency suite", grading_consistency, None),
    (6, "large-surgery suite", large_surgery, 30.0),
    (7, "bounds oracle", bounds_oracle, None),
    (8, "stability gate", stability_gate, None),
]


def evaluate(fn, limit):
    t0 = time.perf_counter()
    try:
        detail, ok = fn(), True
    except Failed as exc:
        detail, ok = str(exc), False
    dt = time.perf_counter() - t0
    if ok and limit is not None and dt >= limit:
        ok, detail = False, f"{detail}; took {dt:.2f}s, limit {limit:g}s"
    return ok, detail, dt


def line(num, title, ok, detail, dt):
    return f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {title} ({detail}; {dt:.2f}s)"


@pytest.mark.parametrize("num,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, limit, capsys):
    ok, detail, dt = evaluate(fn, limit)
    with capsys.disabled():
        print("\n" + line(num, title, ok, detail, dt))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, title, fn, limit in CRITERIA:
        ok, detail, dt = evaluate(fn, limit)
        results.append(ok)
        print(line(num, title, ok, detail, dt))
    sys.exit(0 if all(results) else 1)
