"""Large-surgery pieces C{min(i, j - m) = 0} and the cobordism-map dichotomy."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .chain import FilteredComplex, chain_map, subquotient
from .errors import DichotomyViolation
from .homology import HomologyBasis, TauEngine, euler_characteristic, homology_f2, induced_map


def f_value(A) -> Fraction:
    return 2 * Fraction(A)


@dataclass
class SurgeryRow:
    cls: str
    m: int
    rank: int
    euler: int
    stable: bool

    def line(self) -> str:
        return f"({self.cls}, {self.m}, {self.rank}, {self.euler}, {'stable' if self.stable else '-'})"


def stable_range(C: FilteredComplex, cls: str) -> tuple[int, int]:
    """m-interval outside of which the pieces have stabilised."""
    k = C.k[cls]
    lo, hi = C.a_range(cls)
    return math.floor(lo - k), math.ceil(hi - k)


def large_surgery_homology(C: FilteredComplex, cls: str, m: int) -> HomologyBasis:
    return homology_f2(subquotient(C, cls, "min=0", m=m))


def surgery_row(C: FilteredComplex, cls: str, m: int) -> SurgeryRow:
    sq = subquotient(C, cls, "min=0", m=m)
    H = homology_f2(sq)
    lo, hi = stable_range(C, cls)
    return SurgeryRow(cls, m, H.rank, euler_characteristic(sq), not lo <= m <= hi)


def surgery_rows(C: FilteredComplex, m_values=None, classes=None) -> list[SurgeryRow]:
    rows = []
    for cls in (C.classes if classes is None else classes):
        if m_values is None:
            lo, hi = stable_range(C, cls)
            ms = range(lo - 2, hi + 3)
        else:
            ms = m_values
        rows.extend(surgery_row(C, cls, m) for m in ms)
    return rows


@dataclass
class CobordismResult:
    cls: str
    m: int
    level: Fraction      # k_s + m
    survives: bool       # every hat class hitting c_Y maps to a nonzero class
    expected: str | None  # "survives", "dies" or None at the boundary level


def cobordism_map(C: FilteredComplex, cls: str, m: int, engine: TauEngine | None = None,
                  tau: Fraction | None = None) -> CobordismResult:
    """The map HF-hat(Y) -> H(C{min(i, j - m) = 0}) and its verdict on the c_Y preimages."""
    E = TauEngine(C, cls) if engine is None else engine
    cy = E.c_Y()
    beta0 = gf2.solve(E.rho, cy)
    kerrho = gf2.nullspace(E.rho)
    piece = subquotient(C, cls, "min=0", m=m)
    Hp = homology_f2(piece)
    f = induced_map(chain_map(E.hat, piece), E.H_hat, Hp)
    fb = gf2.matmul(f, beta0)
    fk = gf2.matmul(f, kerrho) if kerrho.shape[1] else np.zeros((Hp.rank, 0), dtype=np.uint8)
    dies = gf2.in_span(fk, fb) if fk.shape[1] else not fb.any()
    level = E.k + m
    expected = None
    if tau is not None:
        expected = "survives" if level < tau else "dies" if level > tau else None
        if expected == "survives" and dies:
            raise DichotomyViolation(f"class {cls}, m={m}: a c_Y preimage dies below tau={tau}")
        if expected == "dies" and not dies:
            raise DichotomyViolation(f"class {cls}, m={m}: every c_Y preimage survives above tau={tau}")
    return CobordismResult(cls, m, level, not dies, expected)


def dichotomy_bracket(C: FilteredComplex, cls: str, tau: Fraction | None = None) -> tuple[Fraction, Fraction]:
    """Levels (last surviving, first dying) of the cobordism map across the A-range.

    The transition is checked to be a single step; tau must be one of the two.
    """
    E = TauEngine(C, cls)
    lo, hi = stable_range(C, cls)
    res = [cobordism_map(C, cls, m, E, tau) for m in range(lo - 2, hi + 3)]
    flags = [r.survives for r in res]
    if flags != sorted(flags, reverse=True) or flags[0] is False or flags[-1] is True:
        raise DichotomyViolation(f"class {cls}: survival is not a single transition: {flags}")
    last = max(r.level for r in res if r.survives)
    first = min(r.level for r in res if not r.survives)
    if tau is not None and tau not in (last, first):
        raise DichotomyViolation(f"class {cls}: tau={tau} outside the bracket ({last}, {first})")
    return last, first


def surgery_spinc_label(k, m: int, framing, n: int) -> Fraction:
    """The c_1 pairing 2q(k_s + m) + nq - cr labelling the extension over the surgery cobordism.

    ``framing`` is anything with integer attributes ``q``, ``c`` and ``r``.
    """
    q, c, r = framing.q, framing.c, framing.r
    return 2 * q * (Fraction(k) + m) + n * q - c * r
