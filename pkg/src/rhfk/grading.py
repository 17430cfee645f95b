"""Spin^c classes, relative periodic domains and Alexander/Maslov gradings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import (
    LAMBDA,
    Domain,
    DomainSolver,
    Generator,
    HeegaardDiagram,
    _curve_rows,
    enumerate_generators,
    surface_class,
)
from .errors import InconsistentClass, NoSolution, NonIntegerIndex
from .intlinalg import IntegerSystem, combo_for_gcd, lattice_gcd


@dataclass
class SpincClass:
    cid: int
    members: list[str]
    k_s: Fraction | None = None


@dataclass(frozen=True)
class RelPeriodicDomain:
    domain: Domain
    q: int
    alpha_coeffs: dict[str, int]
    beta_coeffs: dict[str, int]


@dataclass(frozen=True)
class FramingData:
    q: int
    c: int
    d: int
    r: int
    shift: int = 0  # m with lambda = lambda_can + m * mu
    e: int = 0      # meridian coefficient of [dF] against the diagram's lambda


def centered_fraction(a: Fraction) -> Fraction:
    """The representative of a mod 1 in [-1/2, 1/2)."""
    return a - math.floor(a + Fraction(1, 2))


def spinc_partition(dia: HeegaardDiagram, gens: list[Generator] | None = None,
                    solver: DomainSolver | None = None) -> list[SpincClass]:
    gens = enumerate_generators(dia) if gens is None else gens
    solver = DomainSolver(dia) if solver is None else solver
    classes: list[list[Generator]] = []
    for x in gens:
        for grp in classes:
            if solver.connecting(grp[0], x) is not None:
                grp.append(x)
                break
        else:
            classes.append([x])
    return [SpincClass(i, [g.name for g in grp]) for i, grp in enumerate(classes)]


# ---------------------------------------------------------------------------
# relative periodic domains


def _lambda_arcs(dia: HeegaardDiagram) -> tuple[list[int], list[int]]:
    lam = dia.lambda_curve
    ws, zs = dia.w.lambda_segment, dia.z.lambda_segment
    n = len(lam)
    first, second = [], []
    k = (ws + 1) % n
    while k != (zs + 1) % n:
        first.append(lam[k])
        k = (k + 1) % n
    k = (zs + 1) % n
    while k != (ws + 1) % n:
        second.append(lam[k])
        k = (k + 1) % n
    return first, second


def _crossed_kinds(dia: HeegaardDiagram, verts: list[int]) -> set[str]:
    kinds = set()
    for v in verts:
        for c in dia.vertex_curves[v]:
            if c != LAMBDA:
                kinds.add(dia.kind(c))
    return kinds


def is_longitude(dia: HeegaardDiagram) -> bool:
    """Lambda runs w -> z avoiding alpha and z -> w avoiding beta (or the reverse).

    This is exactly the shape of a push-off of the knot determined by the
    two basepoints.
    """
    if dia.lambda_curve is None or dia.w.lambda_segment is None or dia.z.lambda_segment is None:
        return False
    a, b = _lambda_arcs(dia)
    ka, kb = _crossed_kinds(dia, a), _crossed_kinds(dia, b)
    return ("alpha" not in ka and "beta" not in kb) or ("beta" not in ka and "alpha" not in kb)


def find_relative_periodic_domain(dia: HeegaardDiagram, framing: FramingData | None = None
                                  ) -> RelPeriodicDomain:
    if not is_longitude(dia):
        raise NoSolution("lambda is not a longitude of the knot given by w and z")
    rows, _tags, ncols = _curve_rows(dia, lambda_unknown=True)
    system = IntegerSystem(rows, ncols)
    tvals = [k[-1] for k in system.kernel]
    qmin = lattice_gcd(tvals)
    if qmin == 0:
        raise NoSolution("no relative periodic domain: lambda is not rationally null-homologous")
    q = qmin
    if framing is not None:
        if framing.q % qmin:
            raise NoSolution(f"no relative periodic domain with lambda-coefficient {framing.q}")
        q = framing.q
    _, coeffs = combo_for_gcd(tvals)
    vec = [0] * ncols
    for cf, k in zip(coeffs, system.kernel):
        if cf:
            vec = [v + cf * x for v, x in zip(vec, k)]
    vec = [v * (q // qmin) for v in vec[:-1]]
    lo = min(vec)
    D = Domain(dia, tuple(v - lo for v in vec))
    bd = D.boundary()

    def coeff(curve):
        vals = {bd[(curve, s)] for s in range(len(dia.curves[curve]))}
        if len(vals) != 1:
            raise NoSolution(f"boundary of the solution is not a multiple of {curve}")
        return vals.pop()

    if coeff(LAMBDA) != q:
        raise NoSolution("solver returned the wrong lambda coefficient")
    return RelPeriodicDomain(
        domain=D, q=q,
        alpha_coeffs={a: coeff(a) for a in dia.alpha_curves},
        beta_coeffs={b: coeff(b) for b in dia.beta_curves},
    )


def other_relative_periodic_domains(P: RelPeriodicDomain) -> list[RelPeriodicDomain]:
    """A few alternative solutions (P plus surface multiples and lambda-free periodic domains)."""
    dia = P.domain.diagram
    S = surface_class(dia)
    out = [P.domain + S, P.domain - S.scale(2)]
    for k in DomainSolver(dia).periodic_basis():
        out.append(P.domain + k)
    res = []
    for D in out:
        res.append(RelPeriodicDomain(D, P.q, P.alpha_coeffs, P.beta_coeffs))
    return res


def averaged_basepoint(P: RelPeriodicDomain, label: str) -> Fraction:
    """Mean of the multiplicities on the two sides of lambda at a basepoint."""
    dia = P.domain.diagram
    bp = dia.basepoints[label]
    n = Fraction(P.domain.mult[bp.region])
    half = Fraction(P.q, 2)
    return n - half if bp.side == "left" else n + half


def alexander_grading(x: Generator, P: RelPeriodicDomain) -> Fraction:
    D = P.domain
    nbar = averaged_basepoint(P, "w") + averaged_basepoint(P, "z")
    return (D.euler + 2 * D.n_gen(x) - nbar) / (2 * P.q)


def compute_k_s(values) -> Fraction:
    vals = [Fraction(v) for v in values]
    if not vals:
        raise InconsistentClass("empty class")
    k = centered_fraction(vals[0])
    for v in vals[1:]:
        if (v - k).denominator != 1:
            raise InconsistentClass(f"gradings {vals[0]} and {v} differ by a non-integer")
    return k


def canonical_framing(dia: HeegaardDiagram, P: RelPeriodicDomain, lambda_offset: int = 0) -> FramingData:
    """Framing data of the rational Seifert surface represented by ``P``.

    ``lambda_offset`` reinterprets the diagram's lambda as lambda + offset*mu,
    which changes only the reported shift.
    """
    q = P.q
    e = averaged_basepoint(P, "w") - averaged_basepoint(P, "z")
    if e.denominator != 1:
        raise NoSolution("basepoint averages are not compatible")
    e = int(e) - lambda_offset * q
    c = math.gcd(q, e)
    d = q // c
    r = (e // c) % d
    shift = (r - e // c) // d
    return FramingData(q=q, c=c, d=d, r=r, shift=shift, e=e)


def relative_maslov(x: Generator, y: Generator, D: Domain) -> int:
    val = D.euler + D.n_gen(x) + D.n_gen(y) - 2 * D.n_w
    if val.denominator != 1:
        raise NonIntegerIndex(f"index {val} is not an integer")
    return int(val)


def maslov_index(x: Generator, y: Generator, D: Domain) -> int:
    val = D.euler + D.n_gen(x) + D.n_gen(y)
    if val.denominator != 1:
        raise NonIntegerIndex(f"index {val} is not an integer")
    return int(val)


# ---------------------------------------------------------------------------


@dataclass
class Gradings:
    diagram: HeegaardDiagram
    generators: list[Generator]
    classes: list[SpincClass]
    A: dict[str, Fraction]
    gr: dict[str, int]
    class_of: dict[str, int]
    periodic: RelPeriodicDomain
    framing: FramingData
    solver: DomainSolver = field(repr=False)

    def gen(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)


def compute_gradings(dia: HeegaardDiagram) -> Gradings:
    gens = enumerate_generators(dia)
    solver = DomainSolver(dia)
    classes = spinc_partition(dia, gens, solver)
    P = find_relative_periodic_domain(dia)
    A = {g.name: alexander_grading(g, P) for g in gens}
    by_name = {g.name: g for g in gens}
    gr: dict[str, int] = {}
    class_of: dict[str, int] = {}
    for cl in classes:
        cl.k_s = compute_k_s([A[n] for n in cl.members])
        x0 = by_name[cl.members[0]]
        for n in cl.members:
            class_of[n] = cl.cid
            D = solver.connecting(x0, by_name[n]) if n != x0.name else None
            gr[n] = 0 if D is None else -relative_maslov(x0, by_name[n], D)
    return Gradings(dia, gens, classes, A, gr, class_of, P, canonical_framing(dia, P), solver)
