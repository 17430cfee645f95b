"""Doubly pointed Heegaard diagrams stored as a region cell complex.

A diagram is a list of curves, each a cyclic list of vertex ids (segment
``k`` of a curve runs from its ``k``-th vertex to the next one), plus the
regions of the surface cut along every curve.  A region is described by
its boundary word: entries ``(curve, segment, sign)`` with ``sign = +1``
when the region lies to the left of the segment, and corner ``k`` is the
vertex between entries ``k`` and ``k + 1``.

The longitude curve is called ``"lambda"``.  Basepoints live in regions of
the complement of all curves (including lambda); each records the lambda
segment it sits next to and on which side, which is what the averaged
basepoint multiplicities need.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import (
    BadParameters,
    BasepointOnCurve,
    DiagramError,
    DuplicateSegment,
    NonClosedRegion,
)
from .intlinalg import IntegerSystem
from .torus import build_arrangement

FORMAT_VERSION = "rhfk-diagram/1"
LAMBDA = "lambda"


@dataclass(frozen=True)
class Region:
    boundary: tuple[tuple[str, int, int], ...]
    corners: tuple[int, ...]


@dataclass(frozen=True)
class Basepoint:
    region: int
    lambda_segment: int | None = None
    side: str | None = None  # "left" or "right" of lambda_segment


@dataclass(frozen=True)
class Generator:
    points: tuple[int, ...]  # one intersection point per alpha curve, in alpha order
    name: str = ""

    def __str__(self) -> str:
        return self.name or "x" + "_".join(map(str, self.points))


@dataclass(frozen=True, eq=False)
class HeegaardDiagram:
    genus: int
    alpha_curves: dict[str, tuple[int, ...]]
    beta_curves: dict[str, tuple[int, ...]]
    intersection_points: tuple[tuple[int, int, int], ...]
    regions: tuple[Region, ...]
    basepoints: dict[str, Basepoint]
    lambda_curve: tuple[int, ...] | None
    knot_order_q: int
    n_vertices: int
    name: str = ""
    meta: dict = field(default_factory=dict)

    # -- derived tables -------------------------------------------------
    @cached_property
    def curves(self) -> dict[str, tuple[int, ...]]:
        out = dict(self.alpha_curves)
        out.update(self.beta_curves)
        if self.lambda_curve is not None:
            out[LAMBDA] = self.lambda_curve
        return out

    def kind(self, curve: str) -> str:
        if curve in self.alpha_curves:
            return "alpha"
        if curve in self.beta_curves:
            return "beta"
        if curve == LAMBDA:
            return LAMBDA
        raise KeyError(curve)

    @cached_property
    def alpha_names(self) -> list[str]:
        return list(self.alpha_curves)

    @cached_property
    def beta_names(self) -> list[str]:
        return list(self.beta_curves)

    @cached_property
    def edge_regions(self) -> dict[tuple[str, int], tuple[int, int]]:
        """(curve, segment) -> (region on the left, region on the right)."""
        sides: dict[tuple[str, int], list] = {}
        for rid, reg in enumerate(self.regions):
            for c, s, sign in reg.boundary:
                sides.setdefault((c, s), [None, None])[0 if sign > 0 else 1] = rid
        return {k: (v[0], v[1]) for k, v in sides.items()}

    @cached_property
    def vertex_curves(self) -> dict[int, tuple[str, ...]]:
        vc: dict[int, list[str]] = {}
        for c, pts in self.curves.items():
            for v in pts:
                vc.setdefault(v, []).append(c)
        return {v: tuple(cs) for v, cs in vc.items()}

    @cached_property
    def quadrants(self) -> dict[int, list[int]]:
        """Vertex -> regions meeting it, one entry per corner occurrence."""
        q: dict[int, list[int]] = {}
        for rid, reg in enumerate(self.regions):
            for v in reg.corners:
                q.setdefault(v, []).append(rid)
        return q

    @cached_property
    def point_info(self) -> dict[int, tuple[int, int]]:
        return {pid: (a, b) for a, b, pid in self.intersection_points}

    @cached_property
    def coarse_regions(self) -> list[list[int]]:
        """Components of the surface cut along alpha and beta only."""
        parent = list(range(len(self.regions)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        if self.lambda_curve is not None:
            for s in range(len(self.lambda_curve)):
                left, right = self.edge_regions[(LAMBDA, s)]
                parent[find(left)] = find(right)
        groups: dict[int, list[int]] = {}
        for r in range(len(self.regions)):
            groups.setdefault(find(r), []).append(r)
        return sorted(groups.values())

    def coarse_of(self, region: int) -> int:
        for cid, grp in enumerate(self.coarse_regions):
            if region in grp:
                return cid
        raise KeyError(region)

    def coarse_corner_count(self, cid: int) -> int:
        pts = self.point_info
        return sum(1 for r in self.coarse_regions[cid] for v in self.regions[r].corners if v in pts)

    @property
    def w(self) -> Basepoint:
        return self.basepoints["w"]

    @property
    def z(self) -> Basepoint:
        return self.basepoints["z"]

    @cached_property
    def region_euler(self) -> list[Fraction]:
        """Euler measure of each region: 1 - (number of corners)/4."""
        return [1 - Fraction(len(r.corners), 4) for r in self.regions]

    def segment_ends(self, curve: str, seg: int) -> tuple[int, int]:
        pts = self.curves[curve]
        return pts[seg], pts[(seg + 1) % len(pts)]


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    checks: dict[str, bool]
    euler_characteristic: int
    census: dict[str, int]
    messages: list[str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _structural_checks(dia: HeegaardDiagram) -> None:
    curves = dia.curves
    seen: dict[tuple[str, int, int], int] = {}
    for rid, reg in enumerate(dia.regions):
        n = len(reg.boundary)
        if n == 0 or len(reg.corners) != n:
            raise NonClosedRegion(f"region {rid}: boundary word and corner list disagree")
        for k, (c, s, sign) in enumerate(reg.boundary):
            if c not in curves or not 0 <= s < len(curves[c]) or sign not in (1, -1):
                raise NonClosedRegion(f"region {rid}: unknown segment {(c, s, sign)}")
            key = (c, s, sign)
            if key in seen:
                raise DuplicateSegment(f"segment {c}[{s}] with sign {sign} used by regions {seen[key]} and {rid}")
            seen[key] = rid
            a, b = dia.segment_ends(c, s)
            head, tail = (b, a) if sign > 0 else (a, b)
            nc, ns, nsign = reg.boundary[(k + 1) % n]
            if nc in curves and 0 <= ns < len(curves[nc]):
                a2, b2 = dia.segment_ends(nc, ns)
                nxt_tail = a2 if nsign > 0 else b2
            else:
                nxt_tail = None
            if head != reg.corners[k] or nxt_tail != reg.corners[k]:
                raise NonClosedRegion(f"region {rid}: boundary word does not close at corner {k}")
    for c, pts in curves.items():
        for s in range(len(pts)):
            for sign in (1, -1):
                if (c, s, sign) not in seen:
                    raise NonClosedRegion(f"segment {c}[{s}] bounds a region on one side only")
    for label, bp in dia.basepoints.items():
        if not 0 <= bp.region < len(dia.regions):
            raise BasepointOnCurve(f"basepoint {label}: no region {bp.region}")
        if bp.lambda_segment is not None:
            if dia.lambda_curve is None or not 0 <= bp.lambda_segment < len(dia.lambda_curve):
                raise BasepointOnCurve(f"basepoint {label}: no lambda segment {bp.lambda_segment}")
            left, right = dia.edge_regions[(LAMBDA, bp.lambda_segment)]
            want = left if bp.side == "left" else right
            if bp.side not in ("left", "right") or want != bp.region:
                raise BasepointOnCurve(
                    f"basepoint {label}: region {bp.region} is not on the {bp.side} of lambda[{bp.lambda_segment}]")


def validate(dia: HeegaardDiagram) -> ValidationReport:
    """Check the cell structure; raises on malformed data, reports the rest."""
    _structural_checks(dia)
    msgs: list[str] = []
    V = len(dia.vertex_curves)
    E = sum(len(p) for p in dia.curves.values())
    F = len(dia.regions)
    chi = V - E + F
    checks = {"euler_characteristic": chi == 2 - 2 * dia.genus}
    if not checks["euler_characteristic"]:
        msgs.append(f"V - E + F = {chi}, expected {2 - 2 * dia.genus}")

    alternating = True
    for rid, reg in enumerate(dia.regions):
        n = len(reg.boundary)
        for k in range(n):
            v = reg.corners[k]
            here = sorted((dia.kind(reg.boundary[k][0]), dia.kind(reg.boundary[(k + 1) % n][0])))
            through = sorted(dia.kind(c) for c in dia.vertex_curves.get(v, ()))
            if here != through or (v in dia.point_info and here != ["alpha", "beta"]):
                alternating = False
                msgs.append(f"region {rid}: corner {k} at vertex {v} does not alternate")
    checks["corners_alternate"] = alternating
    checks["curve_counts"] = len(dia.alpha_curves) == dia.genus == len(dia.beta_curves)
    checks["basepoints_distinct"] = dia.w.region != dia.z.region
    if not checks["basepoints_distinct"]:
        msgs.append("w and z lie in the same region")
    checks["knot_order_positive"] = dia.knot_order_q >= 1

    census = {"bigons": 0, "squares": 0, "larger": 0, "other": 0}
    for cid in range(len(dia.coarse_regions)):
        k = dia.coarse_corner_count(cid)
        census["bigons" if k == 2 else "squares" if k == 4 else "larger" if k > 4 else "other"] += 1
    return ValidationReport(checks=checks, euler_characteristic=chi, census=census, messages=msgs)


# ---------------------------------------------------------------------------
# generators and domains


def enumerate_generators(dia: HeegaardDiagram) -> list[Generator]:
    g = dia.genus
    by_pair: dict[tuple[int, int], list[int]] = {}
    for a, b, pid in dia.intersection_points:
        by_pair.setdefault((a, b), []).append(pid)
    # order points along each alpha curve so that names are stable
    pos = {}
    for ai, name in enumerate(dia.alpha_names):
        for k, v in enumerate(dia.alpha_curves[name]):
            pos[v] = k
    tuples = []
    for perm in itertools.permutations(range(g)):
        choices = [sorted(by_pair.get((a, perm[a]), []), key=lambda p: pos.get(p, p)) for a in range(g)]
        tuples.extend(itertools.product(*choices))
    tuples.sort(key=lambda t: tuple(pos.get(p, p) for p in t))
    letters = "abcdefghijklmnopqrstuvwxyz"
    out = []
    for n, t in enumerate(tuples):
        label = letters[n] if len(tuples) <= len(letters) else f"x{n}"
        out.append(Generator(points=tuple(t), name=label))
    return out


@dataclass(frozen=True, eq=False)
class Domain:
    diagram: HeegaardDiagram
    mult: tuple[int, ...]

    def __add__(self, other: Domain) -> Domain:
        return Domain(self.diagram, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other: Domain) -> Domain:
        return Domain(self.diagram, tuple(a - b for a, b in zip(self.mult, other.mult)))

    def scale(self, k: int) -> Domain:
        return Domain(self.diagram, tuple(k * a for a in self.mult))

    def __eq__(self, other) -> bool:
        return isinstance(other, Domain) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    @property
    def n_w(self) -> int:
        return self.mult[self.diagram.w.region]

    @property
    def n_z(self) -> int:
        return self.mult[self.diagram.z.region]

    def n_point(self, v: int) -> Fraction:
        return Fraction(sum(self.mult[r] for r in self.diagram.quadrants[v]), 4)

    def n_gen(self, x: Generator) -> Fraction:
        return sum((self.n_point(v) for v in x.points), Fraction(0))

    @property
    def euler(self) -> Fraction:
        e = self.diagram.region_euler
        return sum((a * e[r] for r, a in enumerate(self.mult) if a), Fraction(0))

    def boundary(self) -> dict[tuple[str, int], int]:
        """Coefficient of each segment in the boundary 1-chain."""
        m = self.mult
        return {k: m[left] - m[right] for k, (left, right) in self.diagram.edge_regions.items()}

    def boundary_of_boundary(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (c, s), coef in self.boundary().items():
            a, b = self.diagram.segment_ends(c, s)
            out[b] = out.get(b, 0) + coef
            out[a] = out.get(a, 0) - coef
        return {v: x for v, x in out.items() if x}

    def is_positive(self) -> bool:
        return all(a >= 0 for a in self.mult)


def euler_measure(D: Domain) -> Fraction:
    return D.euler


def surface_class(dia: HeegaardDiagram) -> Domain:
    return Domain(dia, (1,) * len(dia.regions))


def _curve_rows(dia: HeegaardDiagram, lambda_unknown: bool):
    """Rows of the boundary system.

    One unknown per region, plus a trailing lambda coefficient ``t`` when
    ``lambda_unknown``.  Every row reads ``c_{k-1} - c_k`` at a curve vertex
    (``c`` the segment coefficient); lambda additionally gets ``c_0 = t``.
    Returns the rows and, for each row, the (curve kind, vertex) it tests.
    """
    nreg = len(dia.regions)
    ncols = nreg + (1 if lambda_unknown else 0)
    er = dia.edge_regions
    rows, tags = [], []

    def seg_vec(c, s, sgn, row):
        left, right = er[(c, s)]
        row[left] += sgn
        row[right] -= sgn

    for c, pts in dia.curves.items():
        n = len(pts)
        for k in range(n):
            row = [0] * ncols
            seg_vec(c, (k - 1) % n, 1, row)
            seg_vec(c, k, -1, row)
            rows.append(row)
            tags.append((dia.kind(c), pts[k]))
    if dia.lambda_curve is not None:
        row = [0] * ncols
        seg_vec(LAMBDA, 0, 1, row)
        if lambda_unknown:
            row[-1] = -1
        rows.append(row)
        tags.append((LAMBDA, None))
    return rows, tags, ncols


class DomainSolver:
    """Connecting domains between generators, by exact integer solving."""

    def __init__(self, dia: HeegaardDiagram):
        self.dia = dia
        self.rows, self.tags, n = _curve_rows(dia, lambda_unknown=False)
        self.system = IntegerSystem(self.rows, n)

    def rhs(self, x: Generator, y: Generator) -> list[int]:
        xs, ys = set(x.points), set(y.points)
        out = []
        for kind, v in self.tags:
            # boundary of the alpha part is x - y, of the beta part y - x
            if kind == "alpha":
                out.append((v in xs) - (v in ys))
            elif kind == "beta":
                out.append((v in ys) - (v in xs))
            else:
                out.append(0)
        return out

    def connecting(self, x: Generator, y: Generator) -> Domain | None:
        """Some domain in pi_2(x, y), or None when x and y are in different classes."""
        sol = self.system.solve(self.rhs(x, y))
        if sol is None:
            return None
        D = Domain(self.dia, tuple(sol))
        # normalise by a multiple of the surface so that n_w = 0
        return D - surface_class(self.dia).scale(D.n_w)

    def periodic_basis(self) -> list[Domain]:
        """Periodic domains with n_w = 0 (boundary on alpha and beta only)."""
        row = [0] * len(self.dia.regions)
        row[self.dia.w.region] = 1
        S = IntegerSystem(self.rows + [row], len(self.dia.regions))
        return [Domain(self.dia, tuple(k)) for k in S.kernel]


@dataclass
class DomainLattice:
    periodic_basis: list[Domain]
    connecting: dict[tuple[str, str], Domain | None]


def domain_lattice(dia: HeegaardDiagram, gens: list[Generator] | None = None) -> DomainLattice:
    gens = enumerate_generators(dia) if gens is None else gens
    solver = DomainSolver(dia)
    conn: dict[tuple[str, str], Domain | None] = {}
    for x in gens:
        for y in gens:
            if x is not y:
                conn[(x.name, y.name)] = solver.connecting(x, y)
    return DomainLattice(solver.periodic_basis(), conn)


# ---------------------------------------------------------------------------
# JSON


def to_json(dia: HeegaardDiagram) -> str:
    def bp(b: Basepoint):
        return {"region": b.region, "lambda_segment": b.lambda_segment, "side": b.side}

    doc = {
        "version": FORMAT_VERSION,
        "name": dia.name,
        "genus": dia.genus,
        "alpha_curves": {k: list(v) for k, v in dia.alpha_curves.items()},
        "beta_curves": {k: list(v) for k, v in dia.beta_curves.items()},
        "lambda": None if dia.lambda_curve is None else list(dia.lambda_curve),
        "n_vertices": dia.n_vertices,
        "intersection_points": [list(t) for t in dia.intersection_points],
        "regions": [
            {"boundary": [list(e) for e in r.boundary], "corners": list(r.corners)} for r in dia.regions
        ],
        "basepoints": {k: bp(v) for k, v in dia.basepoints.items()},
        "knot_order_q": dia.knot_order_q,
        "meta": dia.meta,
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def from_json(text: str) -> HeegaardDiagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("version") != FORMAT_VERSION:
        raise DiagramError(f"expected version {FORMAT_VERSION!r}")
    try:
        regions = tuple(
            Region(tuple((str(c), int(s), int(o)) for c, s, o in r["boundary"]), tuple(map(int, r["corners"])))
            for r in doc["regions"]
        )
        bps = {
            k: Basepoint(int(v["region"]), None if v.get("lambda_segment") is None else int(v["lambda_segment"]),
                         v.get("side"))
            for k, v in doc["basepoints"].items()
        }
        if set(bps) != {"w", "z"}:
            raise DiagramError("basepoints must be exactly w and z")
        lam = doc.get("lambda")
        return HeegaardDiagram(
            genus=int(doc["genus"]),
            alpha_curves={k: tuple(map(int, v)) for k, v in doc["alpha_curves"].items()},
            beta_curves={k: tuple(map(int, v)) for k, v in doc["beta_curves"].items()},
            intersection_points=tuple(tuple(map(int, t)) for t in doc["intersection_points"]),
            regions=regions,
            basepoints=bps,
            lambda_curve=None if lam is None else tuple(map(int, lam)),
            knot_order_q=int(doc["knot_order_q"]),
            n_vertices=int(doc.get("n_vertices", 0)),
            name=str(doc.get("name", "")),
            meta=dict(doc.get("meta", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram: {exc!r}") from exc


def load(path) -> HeegaardDiagram:
    with open(path, encoding="utf-8") as fh:
        return from_json(fh.read())


def save(dia: HeegaardDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(dia))


# ---------------------------------------------------------------------------
# constructors from torus geometry


def _left_normal(d):
    n = math.hypot(d[0], d[1])
    return (-d[1] / n, d[0] / n)


def from_torus_curves(alphas: dict, betas: dict, lam: list | None, w, z, knot_order_q: int,
                      name: str = "", eps: float = 1e-4) -> HeegaardDiagram:
    """Build a genus-1 diagram from polylines in the plane (lifts of torus curves).

    ``w`` and ``z`` are either an index into the lambda polyline (the
    basepoint sits at that polyline vertex; w is pushed off to the left of
    lambda and z to the right) or explicit coordinates.
    """
    curves = dict(alphas)
    curves.update(betas)
    if lam is not None:
        curves[LAMBDA] = lam
    arr = build_arrangement(curves)

    def place(spec, push):
        if isinstance(spec, int):
            poly = lam
            i = spec
            prev = poly[i - 1] if i > 0 else (poly[-2][0] - (poly[-1][0] - poly[0][0]),
                                              poly[-2][1] - (poly[-1][1] - poly[0][1]))
            here, nxt = poly[i], poly[i + 1]
            n1 = _left_normal((here[0] - prev[0], here[1] - prev[1]))
            n2 = _left_normal((nxt[0] - here[0], nxt[1] - here[1]))
            # the small tangential shift keeps the locating ray off the polyline vertex
            pt = (here[0] + push * eps * (n1[0] + n2[0]) + 0.37 * eps * n2[1],
                  here[1] + push * eps * (n1[1] + n2[1]) - 0.37 * eps * n2[0])
            seg, side = arr.side_of(LAMBDA, i + 1e-7, (push * n2[0], push * n2[1]))
            rid = arr.locate(pt)
            left, right = arr.edge_faces[(LAMBDA, seg)]
            if rid != (left if side == "left" else right):
                raise DiagramError("basepoint placement is ambiguous; perturb the geometry")
            return Basepoint(rid, seg, side)
        return Basepoint(arr.locate(tuple(spec)))

    a_names, b_names = list(alphas), list(betas)
    ips = []
    for vid, (c1, c2) in enumerate(arr.vertex_curves):
        if c1 in alphas and c2 in betas:
            ips.append((a_names.index(c1), b_names.index(c2), vid))
        elif c2 in alphas and c1 in betas:
            ips.append((a_names.index(c2), b_names.index(c1), vid))
    regions = tuple(Region(tuple(ent), tuple(cor)) for ent, cor in arr.faces)
    dia = HeegaardDiagram(
        genus=1,
        alpha_curves={n: tuple(arr.curve_points[n]) for n in a_names},
        beta_curves={n: tuple(arr.curve_points[n]) for n in b_names},
        intersection_points=tuple(sorted(ips, key=lambda t: t[2])),
        regions=regions,
        basepoints={"w": place(w, 1), "z": place(z, -1)},
        lambda_curve=None if lam is None else tuple(arr.curve_points[LAMBDA]),
        knot_order_q=knot_order_q,
        n_vertices=len(arr.vertex_curves),
        name=name,
    )
    return dia


def simple_knot_diagram(p: int, q: int, k: int) -> HeegaardDiagram:
    """The two-basepoint genus-1 diagram of L(p, q) with basepoint separation k."""
    if not (isinstance(p, int) and isinstance(q, int) and isinstance(k, int)):
        raise BadParameters("p, q, k must be integers")
    if p < 1 or not 0 <= q < max(p, 1) or not 0 <= k < p or gcd(p, q) != 1:
        raise BadParameters(f"need p >= 1, 0 <= q < p, gcd(p, q) = 1, 0 <= k < p; got {(p, q, k)}")
    b0 = 0.1 / p + 0.013
    ya = 0.0371
    # start alpha half a strand-spacing before its last crossing, which fixes generator names
    xs = sorted((b0 + q * (ya - 0.5) / p + j / p) % 1.0 for j in range(p))
    x0 = xs[-1] - 0.5 / p
    alpha = [(x0, ya), (x0 + 1.0, ya)]
    beta = [(b0, 0.5), (b0 + q, 0.5 + p)]
    # lift of z inside the convex band of w at height 0.5 + m needs q*m = k (mod p)
    m = next(mm for mm in range(1, p + 1) if (q * mm - k) % p == 0)
    n_shift = (q * m - k) // p
    xw = b0 + 0.3 / p
    xz = b0 + (k + 0.7) / p
    # lambda starts at z, runs left to w (crossing k beta strands), then climbs to z + (n, m)
    lam = [(xz, 0.5), (xw, 0.5), (xz + n_shift, 0.5 + m)]
    return from_torus_curves(
        {"a1": alpha}, {"b1": beta}, lam, w=1, z=0,
        knot_order_q=p // gcd(p, k), name=f"simple({p},{q},{k})",
    )


def unknot_diagram() -> HeegaardDiagram:
    return replace(simple_knot_diagram(1, 0, 0), name="unknot")


def trefoil_diagram(mirror: bool = False) -> HeegaardDiagram:
    """Genus-1 diagram of the trefoil in S^3 with three intersection points."""
    beta = [(0.17, 1.1), (0.83, -0.1), (0.7, -0.3), (0.6, -0.3), (0.47, 0.1),
            (0.4, 0.3), (0.3, 0.3), (0.17, 0.1)]
    alpha = [(0.0, 0.0), (1.0, 0.0)]
    lam = [
        # from w down through the top bigon wall, across the diagonal, into the bottom bigon
        (0.65, -0.15), (0.65, -0.5), (0.35, -0.5), (0.35, -0.85),
        # from z out through alpha, around the big region and back up into the top bigon
        (0.35, -1.05), (0.5, -1.45), (1.05, -1.45), (1.55, -1.65), (1.6, -1.95), (1.65, -2.15),
    ]
    if mirror:
        def refl(poly):
            return [(1.0 - x, y) for x, y in poly]
        alpha = [(0.0, 0.0), (1.0, 0.0)]
        beta, lam = refl(beta), refl(lam)
    return from_torus_curves(
        {"a1": alpha}, {"b1": beta}, lam, w=0, z=3, knot_order_q=1,
        name="trefoil-mirror" if mirror else "trefoil",
    )
