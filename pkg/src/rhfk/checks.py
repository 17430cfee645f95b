"""The invariant suite behind ``rhfk check``.

Each check returns a pass/fail flag and a short detail string.  On failure the
suite keeps going, so a single run reports every broken property.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import gf2
from .bounds import BoundInput, corollary_bound, genus_bound
from .chain import FilteredComplex, PREDICATES, chain_map, complex_from_diagram, dump, subquotient
from .diagram import Domain, HeegaardDiagram, enumerate_generators, validate
from .errors import RhfkError
from .grading import (
    alexander_grading,
    compute_gradings,
    other_relative_periodic_domains,
)
from .homology import TauEngine, class_tau, euler_characteristic, homology_f2
from .surgery import dichotomy_bracket, large_surgery_homology, stable_range, surgery_row
from .symmetries import a_profile, conjugate, dualize, tensor


@dataclass
class Check:
    module: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'pass' if self.ok else 'FAIL'}] {self.module}: {self.name}" + (
            f" ({self.detail})" if self.detail else "")


@dataclass
class SuiteResult:
    checks: list[Check] = field(default_factory=list)
    reproducer: str = ""

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, module: str, name: str, fn) -> None:
        try:
            res = fn()
        except RhfkError as exc:
            self.checks.append(Check(module, name, False, f"{type(exc).__name__}: {exc}"))
            return
        if isinstance(res, tuple):
            ok, detail = res
        else:
            ok, detail = bool(res), ""
        self.checks.append(Check(module, name, ok, detail))


def permanent(M: list[list[int]]) -> int:
    n = len(M)
    return sum(np.prod([M[i][s[i]] for i in range(n)]) for s in itertools.permutations(range(n)))


def incidence_matrix(dia: HeegaardDiagram) -> list[list[int]]:
    out = []
    for a in dia.alpha_curves:
        pa = set(dia.alpha_curves[a])
        out.append([len(pa & set(dia.beta_curves[b])) for b in dia.beta_curves])
    return out


# ---------------------------------------------------------------------------
# per-module checks


def _diagram_checks(res: SuiteResult, dia: HeegaardDiagram, rng: random.Random) -> None:
    res.add("diagram", "validation", lambda: (validate(dia).ok, "; ".join(validate(dia).messages)))

    def dd():
        n = len(dia.regions)
        vecs = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        vecs += [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(20)]
        bad = [v for v in vecs if Domain(dia, v).boundary_of_boundary()]
        return not bad, f"{len(vecs)} domains"

    res.add("diagram", "boundary of boundary vanishes", dd)
    if dia.genus <= 2:
        res.add("diagram", "generator count equals the permanent",
                lambda: (len(enumerate_generators(dia)) == permanent(incidence_matrix(dia)),
                         f"{len(enumerate_generators(dia))} generators"))


def _grading_checks(res: SuiteResult, dia: HeegaardDiagram) -> None:
    G = compute_gradings(dia)

    def periodic_independence():
        for P in other_relative_periodic_domains(G.periodic):
            for g in G.generators:
                if alexander_grading(g, P) != G.A[g.name]:
                    return False, f"{g.name} changes under another periodic domain"
        return True, ""

    def relative_drops():
        n = 0
        for cl in G.classes:
            for xn, yn in itertools.permutations(cl.members, 2):
                D = G.solver.connecting(G.gen(xn), G.gen(yn))
                n += 1
                if G.A[xn] - G.A[yn] != D.n_z - D.n_w:
                    return False, f"pair ({xn}, {yn})"
        return True, f"{n} connecting domains"

    def k_range():
        for cl in G.classes:
            if not Fraction(-1, 2) <= cl.k_s < Fraction(1, 2):
                return False, f"class {cl.cid}"
            if any((G.A[n] - cl.k_s).denominator != 1 for n in cl.members):
                return False, f"class {cl.cid}"
        return True, ""

    def symmetric():
        vals = sorted(G.A.values())
        return vals == sorted(-v for v in vals), ""

    res.add("grading", "A independent of the periodic domain", periodic_independence)
    res.add("grading", "A(x) - A(y) = n_z - n_w", relative_drops)
    res.add("grading", "k_s in [-1/2, 1/2) and A - k_s integral", k_range)
    res.add("grading", "A multiset is symmetric", symmetric)


def _chain_checks(res: SuiteResult, C: FilteredComplex) -> None:
    res.add("chain", "arrows have n_w, n_z >= 0", lambda: all(a.nw >= 0 and a.nz >= 0 for a in C.arrows))

    def d2():
        n = 0
        for cls in C.classes:
            lo, hi = stable_range(C, cls)
            for pred in PREDICATES:
                for m in range(lo - 1, hi + 2):
                    n += 1
                    if not subquotient(C, cls, pred, m=m).check_d2():
                        return False, f"{cls} {pred} m={m}"
        return True, f"{n} subquotients"

    def ushift():
        for cls in C.classes:
            full = subquotient(C, cls, "all")
            chain_map(full, full, shift=1)
        return True, ""

    def z_filtration():
        # the i = 0 slice below level m is exactly the generators with A - k <= m
        for cls in C.classes:
            lo, hi = stable_range(C, cls)
            for m in range(lo - 1, hi + 2):
                sq = subquotient(C, cls, "F", m=m)
                want = sorted(b.gen for b in C.members(cls) if b.A - C.k[cls] <= m)
                if sorted(g for g, _, _ in sq.elems) != want:
                    return False, f"{cls} m={m}"
        return True, ""

    res.add("chain", "d^2 = 0 on every subquotient", d2)
    res.add("chain", "U commutes with d", ushift)
    res.add("chain", "i = 0 slice gives the Z-filtration", z_filtration)


def _homology_checks(res: SuiteResult, C: FilteredComplex) -> dict:
    taus = {}
    zero_d = not C.arrows

    def per_class(cls):
        def run():
            t = class_tau(C, cls, with_tfae=True)
            taus[cls] = t.tau
            lo, hi = C.a_range(cls)
            if t.tau_minus != t.tau - 1:
                return False, f"tau={t.tau} tau-={t.tau_minus}"
            if any(len(set(v)) != 1 for v in t.tfae.values()):
                return False, "TFAE conditions disagree"
            if not lo <= t.tau <= hi:
                return False, f"tau={t.tau} outside [{lo}, {hi}]"
            if zero_d and len(C.members(cls)) == 1 and t.tau != C.members(cls)[0].A:
                return False, "tau differs from the A-grading of the sole generator"
            chi = euler_characteristic(subquotient(C, cls, "i=0"))
            if abs(chi) != 1:
                return False, f"chi(HF-hat) = {chi}"
            E = TauEngine(C, cls, t.window + 2)
            if not gf2.in_span(E.tower(), E.c_Y()):
                return False, "c_Y outside the tower"
            return True, f"tau={t.tau}"
        return run

    for cls in C.classes:
        res.add("homology", f"class {cls}: tau^- = tau - 1, TFAE, range, chi, window", per_class(cls))
    return taus


def _symmetry_checks(res: SuiteResult, C: FilteredComplex, taus: dict) -> None:
    def dual():
        D = dualize(C)
        for cls in C.classes:
            if class_tau(D, cls).tau != -taus[cls]:
                return False, f"class {cls}"
        return True, ""

    def dual_dual():
        DD = dualize(dualize(C))
        return DD.basis == C.basis and sorted(DD.arrows, key=repr) == sorted(C.arrows, key=repr) and DD.k == C.k

    def conj():
        cj = conjugate(C)
        for s, t in cj.J.items():
            left = (cj.complex.k[s], sorted(b.A for b in cj.complex.members(s)))
            right = (C.k[t], sorted(b.A for b in C.members(t)))
            if left != right:
                return False, f"J({s}) = {t}"
        twice = conjugate(cj.complex).complex
        return a_profile(twice) == a_profile(C), "J = " + ", ".join(f"{s}->{t}" for s, t in cj.J.items())

    def additive():
        T = tensor(C, C)
        for s1, s2 in itertools.product(C.classes, repeat=2):
            cls = f"{s1}#{s2}"
            if class_tau(T, cls).tau != taus[s1] + taus[s2]:
                return False, cls
        by = C.by_gen
        for b in T.basis:
            x, y = b.gen.split("*")
            if b.A != by[x].A + by[y].A:
                return False, b.gen
        return True, f"{len(T.classes)} classes"

    res.add("symmetries", "tau of the dual is -tau", dual)
    res.add("symmetries", "dual of the dual is the identity", dual_dual)
    res.add("symmetries", "conjugation pairs classes with negated data", conj)
    if len(C.basis) <= 6:
        res.add("symmetries", "tau adds under the tensor product", additive)


def _surgery_checks(res: SuiteResult, C: FilteredComplex, taus: dict) -> None:
    def per_class(cls):
        def run():
            lo, hi = stable_range(C, cls)
            for m in range(lo - 2, hi + 3):
                row = surgery_row(C, cls, m)
                if abs(row.euler) != 1:
                    return False, f"m={m}: chi = {row.euler}"
            hat = homology_f2(subquotient(C, cls, "i=0")).rank
            # m below the A-range: the piece is the i = 0 slice; above it: the j = m slice
            if large_surgery_homology(C, cls, lo - 2).rank != hat:
                return False, "small-m piece differs from HF-hat"
            high = large_surgery_homology(C, cls, hi + 2).rank
            if high != homology_f2(subquotient(C, cls, "j=m", m=hi + 2)).rank:
                return False, "large-m piece differs from the j = m slice"
            last, first = dichotomy_bracket(C, cls, taus.get(cls))
            return True, f"bracket ({last}, {first})"
        return run

    for cls in C.classes:
        res.add("surgery", f"class {cls}: chi, stabilisations, dichotomy", per_class(cls))


def _bounds_checks(res: SuiteResult, taus: dict) -> None:
    def monotone():
        for t in taus.values():
            base = genus_bound(BoundInput(2, 1, 1, 0, 3, t)).value
            if genus_bound(BoundInput(2, 1, 1, 0, 3, t + 1)).value <= base:
                return False, "tau"
            if genus_bound(BoundInput(2, 1, 1, 0, 3, t, c1_pairing=1)).value <= base:
                return False, "c1"
        return True, ""

    def corollary():
        for t in taus.values():
            for c1, si in [(0, 0), (3, -5), (-2, 7)]:
                if genus_bound(BoundInput(1, 1, 1, 0, 4, t, c1, si)).value != corollary_bound(t, c1, si):
                    return False, f"tau={t}"
        return True, ""

    res.add("bounds", "monotone in tau and c1", monotone)
    res.add("bounds", "p = 1 reduces to the corollary form", corollary)


# ---------------------------------------------------------------------------


def run_suite(dia: HeegaardDiagram | None = None, C: FilteredComplex | None = None,
              seed: int = 0) -> SuiteResult:
    """Run every applicable check; provide a diagram, a complex, or both."""
    res = SuiteResult()
    rng = random.Random(seed)
    if dia is not None:
        _diagram_checks(res, dia, rng)
        _grading_checks(res, dia)
        if C is None:
            C = complex_from_diagram(dia)
    if C is None:
        raise ValueError("need a diagram or a complex")
    _chain_checks(res, C)
    taus = _homology_checks(res, C)
    _symmetry_checks(res, C, taus)
    _surgery_checks(res, C, taus)
    _bounds_checks(res, taus)
    if not res.ok:
        res.reproducer = minimal_reproducer(C, res)
    return res


def minimal_reproducer(C: FilteredComplex, res: SuiteResult) -> str:
    """Dump of the smallest failing class (the whole complex if none is named)."""
    for chk in res.checks:
        if not chk.ok and chk.name.startswith("class "):
            cls = chk.name.split()[1].rstrip(":")
            keep = {b.gen for b in C.members(cls)}
            sub = FilteredComplex([b for b in C.basis if b.gen in keep],
                                  [a for a in C.arrows if a.src in keep],
                                  {cls: C.k[cls]}, C.window, C.name)
            return dump(sub)
    return dump(C)
