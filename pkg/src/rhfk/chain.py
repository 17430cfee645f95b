"""Filtered complexes: the combinatorial differential and the windowed CFK^infty model.

A :class:`FilteredComplex` lives at generator level (basis elements carry a
spin^c label, a rational Alexander grading and a relative Maslov grading;
arrows carry their basepoint drops).  The triples ``[x, i, j]`` of the
infinity complex are produced on demand inside a finite ``i``-window, and
every subquotient used downstream is a restriction of that triple basis.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

import numpy as np

from . import gf2
from .diagram import HeegaardDiagram, surface_class, validate
from .errors import NotChainMap, NotNice, UnknownPredicate
from .fmt import frac, parse_frac
from .grading import Gradings, compute_gradings, maslov_index, relative_maslov


@dataclass(frozen=True)
class BasisElem:
    gen: str
    cls: str
    A: Fraction
    gr: int


@dataclass(frozen=True)
class Arrow:
    src: str
    tgt: str
    nw: int
    nz: int


@dataclass(eq=False)
class FilteredComplex:
    basis: list[BasisElem]
    arrows: list[Arrow]
    k: dict[str, Fraction]
    window: int | None = None
    name: str = ""

    @cached_property
    def by_gen(self) -> dict[str, BasisElem]:
        return {b.gen: b for b in self.basis}

    @cached_property
    def out_arrows(self) -> dict[str, list[Arrow]]:
        out: dict[str, list[Arrow]] = {b.gen: [] for b in self.basis}
        for a in self.arrows:
            out[a.src].append(a)
        return out

    @property
    def classes(self) -> list[str]:
        seen: list[str] = []
        for b in self.basis:
            if b.cls not in seen:
                seen.append(b.cls)
        return seen

    def members(self, cls: str) -> list[BasisElem]:
        return [b for b in self.basis if b.cls == cls]

    def offset(self, gen: str) -> int:
        """A(x) - k_s, the integer j - i of every triple over x."""
        b = self.by_gen[gen]
        d = b.A - self.k[b.cls]
        if d.denominator != 1:
            raise ValueError(f"A({gen}) - k_s is not an integer")
        return int(d)

    def a_range(self, cls: str) -> tuple[Fraction, Fraction]:
        vals = [b.A for b in self.members(cls)]
        return min(vals), max(vals)

    def default_window(self, cls: str | None = None) -> int:
        if self.window is not None:
            return self.window
        classes = self.classes if cls is None else [cls]
        best = 0
        for c in classes:
            lo, hi = self.a_range(c)
            best = max(best, math.ceil(hi - lo) + len(self.members(c)) + 2)
        return best

    def with_window(self, N: int | None) -> FilteredComplex:
        return FilteredComplex(self.basis, self.arrows, self.k, N, self.name)

    def check_arrows(self) -> None:
        for a in self.arrows:
            s, t = self.by_gen[a.src], self.by_gen[a.tgt]
            if s.cls != t.cls:
                raise ValueError(f"arrow {a} changes spin^c class")
            if a.nw < 0 or a.nz < 0:
                raise ValueError(f"arrow {a} has a negative multiplicity")
            if t.A != s.A - a.nz + a.nw:
                raise ValueError(f"arrow {a} breaks the Alexander grading")
            if t.gr != s.gr - 1 + 2 * a.nw:
                raise ValueError(f"arrow {a} breaks the Maslov grading")


# ---------------------------------------------------------------------------
# subquotients

def _pred(name: str, m: int, lo: int, hi: int) -> Callable[[int, int], bool]:
    table: dict[str, Callable[[int, int], bool]] = {
        "all": lambda i, j: lo <= i <= hi,
        "i=0": lambda i, j: i == 0,
        "i<0": lambda i, j: lo <= i < 0,
        "i>=0": lambda i, j: 0 <= i <= hi,
        "i<1": lambda i, j: lo <= i <= 0,
        "j=m": lambda i, j: j == m,
        "F": lambda i, j: i == 0 and j <= m,
        "Q": lambda i, j: i == 0 and j > m,
        "min>=0": lambda i, j: min(i, j - m) >= 0 and i <= hi,
        "min=0": lambda i, j: min(i, j - m) == 0,
        "i=0,j>=m": lambda i, j: i == 0 and j >= m,
        "i=0,j=m": lambda i, j: i == 0 and j == m,
    }
    try:
        return table[name]
    except KeyError:
        raise UnknownPredicate(name) from None


PREDICATES = ("all", "i=0", "i<0", "i>=0", "i<1", "j=m", "F", "Q", "min>=0", "min=0", "i=0,j>=m", "i=0,j=m")


@dataclass(eq=False)
class Subquotient:
    parent: FilteredComplex
    cls: str
    predicate: str
    m: int
    window: int
    elems: list[tuple[str, int, int]]
    D: np.ndarray = field(repr=False)

    @cached_property
    def index(self) -> dict[tuple[str, int, int], int]:
        return {e: n for n, e in enumerate(self.elems)}

    @property
    def dim(self) -> int:
        return len(self.elems)

    def maslov(self, n: int) -> int:
        g, i, _ = self.elems[n]
        return self.parent.by_gen[g].gr + 2 * i

    def check_d2(self) -> bool:
        return not gf2.matmul(self.D, self.D).any()


def subquotient(C: FilteredComplex, cls: str, predicate: str, m: int = 0, N: int | None = None) -> Subquotient:
    """Restrict the triple basis of class ``cls`` (window ``|i| <= N``) to a predicate.

    For the finite pieces (``min=0``, ``j=m``, slices) the window is widened
    automatically so no basis element is lost.
    """
    N = C.default_window(cls) if N is None else N
    members = C.members(cls)
    offs = {b.gen: C.offset(b.gen) for b in members}
    if predicate in ("j=m", "min=0"):
        span = max(abs(o) for o in offs.values())
        N = max(N, abs(m) + span + 1)
    test = _pred(predicate, m, -N, N)
    elems = []
    for i in range(-N, N + 1):
        for b in members:
            j = i + offs[b.gen]
            if test(i, j):
                elems.append((b.gen, i, j))
    index = {e: n for n, e in enumerate(elems)}
    D = np.zeros((len(elems), len(elems)), dtype=np.uint8)
    out = C.out_arrows
    for s, (g, i, j) in enumerate(elems):
        for a in out[g]:
            t = index.get((a.tgt, i - a.nw, j - a.nz))
            if t is not None:
                D[t, s] ^= 1
    return Subquotient(C, cls, predicate, m, N, elems, D)


def chain_map(src: Subquotient, tgt: Subquotient, check: bool = True, shift: int = 0) -> np.ndarray:
    """Identity on shared triples (optionally after the U^shift action)."""
    F = np.zeros((tgt.dim, src.dim), dtype=np.uint8)
    tidx = tgt.index
    for s, (g, i, j) in enumerate(src.elems):
        t = tidx.get((g, i - shift, j - shift))
        if t is not None:
            F[t, s] = 1
    if check and (gf2.matmul(tgt.D, F) != gf2.matmul(F, src.D)).any():
        raise NotChainMap(f"{src.predicate} -> {tgt.predicate} is not a chain map")
    return F


# ---------------------------------------------------------------------------
# niceness and the differential


@dataclass
class NiceReport:
    nice: bool
    strict: bool
    offending: list[int]
    census: dict[str, int]


def check_nice(dia: HeegaardDiagram, genus_one_exempt: bool = True) -> NiceReport:
    """Every basepoint-free region is a bigon or square.

    In genus one the differential is computed exactly for any diagram, so by
    default genus-one diagrams count as nice; ``strict`` always reports the
    plain region condition.
    """
    bad = []
    wz = {dia.coarse_of(dia.w.region), dia.coarse_of(dia.z.region)}
    for cid in range(len(dia.coarse_regions)):
        if cid in wz:
            continue
        if dia.coarse_corner_count(cid) not in (2, 4):
            bad.append(cid)
    strict = not bad
    nice = strict or (dia.genus == 1 and genus_one_exempt)
    return NiceReport(nice, strict, bad, validate(dia).census)


def differential(dia: HeegaardDiagram, G: Gradings | None = None) -> list[Arrow]:
    G = compute_gradings(dia) if G is None else G
    rep = check_nice(dia)
    if not rep.nice:
        raise NotNice(f"regions {rep.offending} are neither bigons nor squares", rep.offending)
    S = surface_class(dia)
    arrows = []
    for cl in G.classes:
        gens = [G.gen(n) for n in cl.members]
        for x in gens:
            for y in gens:
                if x is y:
                    continue
                phi = G.solver.connecting(x, y)
                mu = maslov_index(x, y, phi)
                if (1 - mu) % 2:
                    continue
                phi = phi + S.scale((1 - mu) // 2)
                if not phi.is_positive():
                    continue
                if dia.genus == 1:
                    # in genus one the disks are the immersed bigons: Euler measure 1/2
                    if phi.euler != Fraction(1, 2):
                        continue
                elif not _embedded_polygon(phi, x, y):
                    continue
                if relative_maslov(x, y, phi) != 1 - 2 * phi.n_w:
                    raise AssertionError("index bookkeeping is inconsistent")
                arrows.append(Arrow(x.name, y.name, phi.n_w, phi.n_z))
    return arrows


def _embedded_polygon(phi, x, y) -> bool:
    if any(a > 1 for a in phi.mult):
        return False
    moved = sum(1 for p, q in zip(x.points, y.points) if p != q)
    corners = phi.n_gen(x) + phi.n_gen(y)
    return (moved == 1 and corners == Fraction(1, 2)) or (moved == 2 and corners == 1)


def complex_from_diagram(dia: HeegaardDiagram, G: Gradings | None = None) -> FilteredComplex:
    G = compute_gradings(dia) if G is None else G
    arrows = differential(dia, G)
    basis = [BasisElem(g.name, f"s{G.class_of[g.name]}", G.A[g.name], G.gr[g.name]) for g in G.generators]
    k = {f"s{c.cid}": c.k_s for c in G.classes}
    C = FilteredComplex(basis, arrows, k, None, dia.name)
    C.check_arrows()
    return C


def build_cfk(dia: HeegaardDiagram, G: Gradings | None = None, arrows=None, window: int | None = None
              ) -> FilteredComplex:
    G = compute_gradings(dia) if G is None else G
    C = complex_from_diagram(dia, G) if arrows is None else FilteredComplex(
        [BasisElem(g.name, f"s{G.class_of[g.name]}", G.A[g.name], G.gr[g.name]) for g in G.generators],
        list(arrows), {f"s{c.cid}": c.k_s for c in G.classes}, None, dia.name)
    return C.with_window(window)


# ---------------------------------------------------------------------------
# dump format

DUMP_HEADER = "rhfk-complex/1"
_BASIS_RE = re.compile(r"^\((\S+), (\S+), (\S+), (-?\d+), (-?\d+)\) gr=(-?\d+)$")
_ARROW_RE = re.compile(r"^arrow (\S+) -> (\S+) nw=(\d+) nz=(\d+)$")


def dump(C: FilteredComplex) -> str:
    lines = [DUMP_HEADER, f"name {C.name or '-'}", f"window {'-' if C.window is None else C.window}"]
    for c in C.classes:
        lines.append(f"class {c} k={frac(C.k[c])}")
    for b in C.basis:
        lines.append(f"({b.gen}, {b.cls}, {frac(b.A)}, 0, {C.offset(b.gen)}) gr={b.gr}")
    for a in C.arrows:
        lines.append(f"arrow {a.src} -> {a.tgt} nw={a.nw} nz={a.nz}")
    return "\n".join(lines) + "\n"


def parse_dump(text: str) -> FilteredComplex:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != DUMP_HEADER:
        raise ValueError("not a complex dump")
    name, window = "", None
    k: dict[str, Fraction] = {}
    basis, arrows = [], []
    for ln in lines[1:]:
        if ln.startswith("name "):
            name = "" if ln[5:] == "-" else ln[5:]
        elif ln.startswith("window "):
            window = None if ln[7:] == "-" else int(ln[7:])
        elif ln.startswith("class "):
            cls, kv = ln[6:].split(" k=")
            k[cls] = parse_frac(kv)
        elif ln.startswith("("):
            mt = _BASIS_RE.match(ln)
            if not mt:
                raise ValueError(f"bad basis line: {ln}")
            g, cls, A, i, j, gr = mt.groups()
            A = parse_frac(A)
            if int(j) - int(i) != A - k[cls]:
                raise ValueError(f"basis line {ln} has j - i != A - k")
            basis.append(BasisElem(g, cls, A, int(gr)))
        elif ln.startswith("arrow "):
            mt = _ARROW_RE.match(ln)
            if not mt:
                raise ValueError(f"bad arrow line: {ln}")
            s, t, nw, nz = mt.groups()
            arrows.append(Arrow(s, t, int(nw), int(nz)))
        else:
            raise ValueError(f"unrecognised line: {ln}")
    return FilteredComplex(basis, arrows, k, window, name)
