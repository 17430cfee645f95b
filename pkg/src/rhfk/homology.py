"""Homology over GF(2), induced maps, the tower class c_Y, and tau / tau^-.

Windowed conventions (``N`` is the ``i``-window of the current run):

* ``HF^+``      is modelled by ``C{0 <= i <= N}``,
* ``HF^{<1}``   by ``C{-N <= i <= 0}``,
* ``HF^infty``  by ``C{-N <= i <= N}``,

and every answer is recomputed at ``N + 2`` before it is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import gf2
from .chain import FilteredComplex, Subquotient, chain_map, subquotient
from .errors import NoTau, UnstableWindow
from .fmt import frac


@dataclass
class HomologyBasis:
    rank: int
    reps: np.ndarray          # columns are cycles representing a basis
    boundaries: np.ndarray    # column basis of the image of d
    _solver: np.ndarray = field(repr=False, default=None)

    def coords(self, V: np.ndarray) -> np.ndarray:
        """Homology coordinates of a block of cycles (columns)."""
        M = np.concatenate([self.boundaries, self.reps], axis=1)
        X = gf2.solve(M, V)
        if X is None:
            raise ValueError("not a cycle")
        return X[self.boundaries.shape[1]:]


def homology_f2(sq: Subquotient | np.ndarray) -> HomologyBasis:
    D = sq.D if isinstance(sq, Subquotient) else sq
    n = D.shape[0]
    Z = gf2.nullspace(D)
    B = gf2.column_basis(D)
    stacked = np.concatenate([B, Z], axis=1)
    _, piv = gf2.rref(stacked)
    chosen = [p - B.shape[1] for p in piv if p >= B.shape[1]]
    reps = Z[:, chosen] if chosen else np.zeros((n, 0), dtype=np.uint8)
    return HomologyBasis(len(chosen), reps, B)


def induced_map(F: np.ndarray, H1: HomologyBasis, H2: HomologyBasis) -> np.ndarray:
    """Matrix of the map on homology in the two chosen bases."""
    if H1.rank == 0:
        return np.zeros((H2.rank, 0), dtype=np.uint8)
    return H2.coords(gf2.matmul(F, H1.reps))


def euler_characteristic(sq: Subquotient) -> int:
    return sum(-1 if sq.maslov(n) % 2 else 1 for n in range(sq.dim))


def image(M: np.ndarray) -> np.ndarray:
    return gf2.column_basis(M)


def hfk_ranks(C: FilteredComplex) -> dict[tuple[str, Fraction], int]:
    """Rank of the knot homology in each (class, Alexander grading)."""
    out = {}
    for cls in C.classes:
        k = C.k[cls]
        for A in sorted({b.A for b in C.members(cls)}):
            sq = subquotient(C, cls, "i=0,j=m", m=int(A - k), N=0)
            out[(cls, A)] = homology_f2(sq).rank
    return out


# ---------------------------------------------------------------------------


@dataclass
class ClassTau:
    cls: str
    k: Fraction
    tau: Fraction
    tau_minus: Fraction
    profile: dict[int, int]       # m -> rank of Im I_m
    hat_rank: int
    cy_rank: int
    window: int
    tfae: dict[int, tuple[bool, bool, bool]]


class TauEngine:
    """All homology data needed for tau of one spin^c class at one window."""

    def __init__(self, C: FilteredComplex, cls: str, N: int | None = None):
        self.C, self.cls = C, cls
        self.N = C.default_window(cls) if N is None else N
        N = self.N
        self.k = C.k[cls]
        lo, hi = C.a_range(cls)
        self.span = math.ceil(hi - lo)
        self.m_lo = math.floor(lo - self.k) - 1
        self.m_hi = math.ceil(hi - self.k) + 1

        self.hat = subquotient(C, cls, "i=0", N=N)
        self.plus = subquotient(C, cls, "i>=0", N=N)
        self.inf = subquotient(C, cls, "all", N=N)
        self.lt1 = subquotient(C, cls, "i<1", N=N)
        self.H_hat = homology_f2(self.hat)
        self.H_plus = homology_f2(self.plus)
        self.H_inf = homology_f2(self.inf)
        self.H_lt1 = homology_f2(self.lt1)
        self.rho = induced_map(chain_map(self.hat, self.plus), self.H_hat, self.H_plus)
        self.pi = induced_map(chain_map(self.inf, self.plus), self.H_inf, self.H_plus)
        self.psi = induced_map(chain_map(self.lt1, self.hat), self.H_lt1, self.H_hat)
        self._fm: dict[int, np.ndarray] = {}

    # -- tower ---------------------------------------------------------
    def tower(self) -> np.ndarray:
        """Image of U^K on the windowed HF^+, K large enough to kill the reduced part."""
        K = max(self.N - self.span - 1, 1)
        U = chain_map(self.plus, self.plus, shift=K)
        UK = induced_map(U, self.H_plus, self.H_plus)
        return image(UK)

    def c_Y(self) -> np.ndarray:
        T = self.tower()
        cy = gf2.intersect(image(self.rho), T)
        if cy.shape[1] != 1:
            raise UnstableWindow(
                f"class {self.cls}: Im(rho_*) meets the tower in dimension {cy.shape[1]} at window {self.N}")
        return cy

    # -- filtration ----------------------------------------------------
    def I_m(self, m: int) -> np.ndarray:
        """Image of H(F_m) in the hat homology."""
        if m not in self._fm:
            F = subquotient(self.C, self.cls, "F", m=m, N=self.N)
            HF = homology_f2(F)
            self._fm[m] = image(induced_map(chain_map(F, self.hat), HF, self.H_hat))
        return self._fm[m]

    def tau(self) -> Fraction:
        cy = self.c_Y()
        for m in range(self.m_lo, self.m_hi + 1):
            if gf2.in_span(gf2.matmul(self.rho, self.I_m(m)), cy):
                return self.k + m
        raise NoTau(f"class {self.cls}: c_Y not reached by any filtration level")

    def tau_slow(self) -> Fraction:
        """Full intersection test Im(rho_* I_m) ∩ Im(pi_*) != 0, no c_Y shortcut."""
        P = image(self.pi)
        for m in range(self.m_lo, self.m_hi + 1):
            if gf2.intersect(image(gf2.matmul(self.rho, self.I_m(m))), P).shape[1]:
                return self.k + m
        raise NoTau(f"class {self.cls}: no filtration level meets the tower")

    def torsion(self) -> np.ndarray:
        """Kernel of HF^{<1} -> HF^+ (through HF-hat)."""
        return gf2.nullspace(gf2.matmul(self.rho, self.psi))

    def L(self, m: int) -> np.ndarray:
        return gf2.preimage(self.psi, self.I_m(m))

    def tau_minus(self) -> Fraction:
        """Largest k + m with P_m psi_*(alpha) != 0 for some non-torsion alpha."""
        d = self.H_lt1.rank
        K0 = self.torsion()
        if K0.shape[1] == d:
            raise NoTau(f"class {self.cls}: HF^<1 has no non-torsion element")
        best = None
        for m in range(self.m_lo, self.m_hi + 1):
            # a non-torsion alpha outside L exists iff L is proper (K0 is already proper)
            if self.L(m).shape[1] < d:
                best = m
        if best is None:
            raise NoTau(f"class {self.cls}: P_m psi_* vanishes on every non-torsion class")
        return self.k + best

    def tfae(self, m: int) -> tuple[bool, bool, bool]:
        P = image(self.pi)
        c1 = gf2.intersect(image(gf2.matmul(self.rho, self.I_m(m))), P).shape[1] > 0
        L = self.L(m)
        K0 = self.torsion()
        kerpsi = gf2.nullspace(self.psi)

        def not_inside(S, T):
            return any(not gf2.in_span(T, S[:, [c]]) for c in range(S.shape[1]))

        c3 = not_inside(L, K0)
        c2 = c3 and not_inside(L, kerpsi)
        return c1, c2, c3

    def profile(self) -> dict[int, int]:
        return {m: self.I_m(m).shape[1] for m in range(self.m_lo, self.m_hi + 1)}

    def summary(self, with_tfae: bool = False) -> ClassTau:
        tau = self.tau()
        tm = self.tau_minus()
        tf = {m: self.tfae(m) for m in range(self.m_lo, self.m_hi + 1)} if with_tfae else {}
        return ClassTau(self.cls, self.k, tau, tm, self.profile(), self.H_hat.rank,
                        self.c_Y().shape[1], self.N, tf)


def class_tau(C: FilteredComplex, cls: str, N: int | None = None, with_tfae: bool = False) -> ClassTau:
    """tau data for one class, gated on agreement between windows N and N + 2."""
    N = C.default_window(cls) if N is None else N
    a = TauEngine(C, cls, N).summary(with_tfae)
    b = TauEngine(C, cls, N + 2).summary(with_tfae)
    if (a.tau, a.tau_minus, a.profile, a.hat_rank, a.tfae) != (b.tau, b.tau_minus, b.profile, b.hat_rank, b.tfae):
        raise UnstableWindow(f"class {cls}: answers differ between windows {N} and {N + 2}")
    return a


def tau(C: FilteredComplex, cls: str) -> Fraction:
    return class_tau(C, cls).tau


def tau_minus(C: FilteredComplex, cls: str) -> Fraction:
    return class_tau(C, cls).tau_minus


@dataclass
class TauReport:
    rows: list[ClassTau]

    def lines(self) -> list[str]:
        return [f"({r.cls}, {frac(r.k)}, {frac(r.tau)}, {frac(r.tau_minus)})" for r in self.rows]

    def by_class(self) -> dict[str, ClassTau]:
        return {r.cls: r for r in self.rows}


def _job(args):
    C, cls, N, with_tfae = args
    return class_tau(C, cls, N, with_tfae=with_tfae)


def tau_report(C: FilteredComplex, jobs: int = 1, with_tfae: bool = False, window: int | None = None
               ) -> TauReport:
    """Rows in class order; ``window`` overrides the per-class default window."""
    classes = C.classes
    work = [(C, c, window, with_tfae) for c in classes]
    if jobs > 1 and len(classes) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_job, work))
    else:
        rows = [_job(w) for w in work]
    return TauReport(rows)
