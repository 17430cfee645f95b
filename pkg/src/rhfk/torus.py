"""Cell structure of a curve arrangement on the flat torus R^2 / Z^2.

Curves are closed polylines given by a lift to the plane: the last vertex
equals the first plus an integer vector.  The builder finds every crossing,
cuts the curves into segments and traces the faces of the complement with
the counter-clockwise orientation (face on the left of its boundary).

Only transverse double points are supported; coordinates should be chosen
generically, and no polyline corner may lie on another curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

_EPS = 1e-12


@dataclass
class Arrangement:
    curve_names: list[str]
    # curve name -> cyclic list of vertex ids; segment k runs points[k] -> points[k+1]
    curve_points: dict[str, list[int]]
    vertex_curves: list[tuple[str, str]]
    # faces: list of (boundary entries [(curve, seg, sign)], corners [vertex])
    faces: list[tuple[list[tuple[str, int, int]], list[int]]]
    # (curve, seg) -> (left face, right face)
    edge_faces: dict[tuple[str, int], tuple[int, int]] = field(default_factory=dict)
    # per curve: sorted (polyline parameter, vertex id) of every crossing
    _events: dict[str, list[tuple[float, int]]] = field(default_factory=dict, repr=False)
    _polylines: dict[str, list[tuple[float, float]]] = field(default_factory=dict, repr=False)

    def locate(self, point: tuple[float, float]) -> int:
        """Face containing a point (cast a ray in the +x direction)."""
        px, py = point
        best = None
        for name in self.curve_names:
            poly = self._polylines[name]
            for k in range(len(poly) - 1):
                (ax, ay), (bx, by) = poly[k], poly[k + 1]
                lo, hi = min(ay, by), max(ay, by)
                for dy in range(math.floor(py - hi) - 1, math.ceil(py - lo) + 2):
                    y0, y1 = ay + dy, by + dy
                    if abs(y1 - y0) < _EPS or not (min(y0, y1) < py < max(y0, y1)):
                        continue
                    u = (py - y0) / (y1 - y0)
                    xh = ax + u * (bx - ax)
                    shift = math.ceil(px - xh + _EPS)  # smallest translate with hit > px
                    dist = xh + shift - px
                    if best is None or dist < best[0]:
                        best = (dist, name, k, u, (bx - ax, by - ay))
        if best is None:
            raise ValueError("ray hit no curve")
        _, name, k, u, (dx, dy) = best
        seg = self._segment_at(name, k + u)
        left, right = self.edge_faces[(name, seg)]
        # the point lies in direction -x from the hit: left side iff cross(d, -x) = dy > 0
        return left if dy > 0 else right

    def side_of(self, name: str, param: float, point_offset: tuple[float, float]) -> tuple[int, str]:
        """Segment of curve ``name`` at polyline parameter ``param`` and the side
        ("left"/"right") on which a small offset vector from that location falls."""
        poly = self._polylines[name]
        k = min(int(param), len(poly) - 2)
        (ax, ay), (bx, by) = poly[k], poly[k + 1]
        cross = (bx - ax) * point_offset[1] - (by - ay) * point_offset[0]
        return self._segment_at(name, param), ("left" if cross > 0 else "right")

    def _segment_at(self, name: str, t: float) -> int:
        ev = self._events[name]
        # segment k spans events k .. k+1; before the first event is the last segment
        idx = -1
        for n, (te, _) in enumerate(ev):
            if te <= t:
                idx = n
        return idx % len(ev)


def _seg_intersections(a0, a1, b0, b1):
    rx, ry = a1[0] - a0[0], a1[1] - a0[1]
    sx, sy = b1[0] - b0[0], b1[1] - b0[1]
    den = rx * sy - ry * sx
    if abs(den) < _EPS:
        return None
    qx, qy = b0[0] - a0[0], b0[1] - a0[1]
    u = (qx * sy - qy * sx) / den
    v = (qx * ry - qy * rx) / den
    # crossings must be interior to both pieces; shared polyline corners are not crossings
    if 1e-9 < u < 1.0 - 1e-9 and 1e-9 < v < 1.0 - 1e-9:
        return u, v
    return None


def build_arrangement(curves: dict[str, list[tuple[float, float]]]) -> Arrangement:
    names = list(curves)
    polys = {n: [tuple(map(float, p)) for p in curves[n]] for n in names}
    for n, p in polys.items():
        d = (p[-1][0] - p[0][0], p[-1][1] - p[0][1])
        if any(abs(c - round(c)) > 1e-9 for c in d):
            raise ValueError(f"curve {n} does not close up on the torus")

    events: dict[str, list[tuple[float, int]]] = {n: [] for n in names}
    vertex_curves: list[tuple[str, str]] = []
    seen: set = set()
    for ia, na in enumerate(names):
        pa = polys[na]
        for nb in names[ia:]:
            pb = polys[nb]
            for ka in range(len(pa) - 1):
                a0, a1 = pa[ka], pa[ka + 1]
                for kb in range(len(pb) - 1):
                    b0, b1 = pb[kb], pb[kb + 1]
                    xs = [a0[0], a1[0]]
                    ys = [a0[1], a1[1]]
                    bxs = [b0[0], b1[0]]
                    bys = [b0[1], b1[1]]
                    for dx in range(math.floor(min(xs) - max(bxs)) - 1, math.ceil(max(xs) - min(bxs)) + 2):
                        for dy in range(math.floor(min(ys) - max(bys)) - 1, math.ceil(max(ys) - min(bys)) + 2):
                            if na == nb and kb == ka and dx == 0 and dy == 0:
                                continue
                            hit = _seg_intersections(
                                a0, a1, (b0[0] + dx, b0[1] + dy), (b1[0] + dx, b1[1] + dy))
                            if hit is None:
                                continue
                            ta, tb = ka + hit[0], kb + hit[1]
                            key = (na, round(ta, 9), nb, round(tb, 9))
                            if na == nb:
                                key = (na,) + tuple(sorted((round(ta, 9), round(tb, 9))))
                            if key in seen:
                                continue
                            seen.add(key)
                            vid = len(vertex_curves)
                            vertex_curves.append((na, nb))
                            events[na].append((ta, vid))
                            events[nb].append((tb, vid))
    curve_points = {}
    for n in names:
        events[n].sort()
        if not events[n]:
            raise ValueError(f"curve {n} meets no other curve")
        curve_points[n] = [v for _, v in events[n]]

    # outgoing directions of every segment end at every vertex
    def direction(n, t, forward):
        poly = polys[n]
        k = int(math.floor(t))
        k = min(max(k, 0), len(poly) - 2)
        (ax, ay), (bx, by) = poly[k], poly[k + 1]
        d = (bx - ax, by - ay)
        return d if forward else (-d[0], -d[1])

    # half-edge (curve, seg, sign): sign +1 leaves points[seg], sign -1 leaves points[seg+1]
    out_at: dict[int, list[tuple[float, tuple[str, int, int]]]] = {}
    for n in names:
        ev = events[n]
        m = len(ev)
        for s in range(m):
            t0, v0 = ev[s]
            t1, v1 = ev[(s + 1) % m]
            d0 = direction(n, t0 + 1e-9, True)
            back = t1 - 1e-9 if t1 > 1e-9 else len(polys[n]) - 1 - 1e-9
            d1 = direction(n, back, False)
            out_at.setdefault(v0, []).append((math.atan2(d0[1], d0[0]), (n, s, +1)))
            out_at.setdefault(v1, []).append((math.atan2(d1[1], d1[0]), (n, s, -1)))
    for v, lst in out_at.items():
        lst.sort()
        if len(lst) != 4:
            raise ValueError(f"vertex {v} is not a transverse double point")

    def head(he):
        n, s, sign = he
        pts = curve_points[n]
        return pts[(s + 1) % len(pts)] if sign > 0 else pts[s]

    visited: set = set()
    faces = []
    edge_faces: dict[tuple[str, int], list[int]] = {}
    for v in sorted(out_at):
        for _, start in out_at[v]:
            if start in visited:
                continue
            entries, corners = [], []
            he = start
            while he not in visited:
                visited.add(he)
                entries.append(he)
                w = head(he)
                lst = out_at[w]
                idx = [h for _, h in lst].index((he[0], he[1], -he[2]))
                he = lst[idx - 1][1]  # next clockwise from the reversed direction
                corners.append(w)
            if he != start:
                raise AssertionError("face walk did not close")
            fid = len(faces)
            faces.append((entries, corners))
            for n, s, sign in entries:
                slot = edge_faces.setdefault((n, s), [None, None])
                slot[0 if sign > 0 else 1] = fid
    arr = Arrangement(
        curve_names=names,
        curve_points=curve_points,
        vertex_curves=vertex_curves,
        faces=faces,
        edge_faces={k: (a, b) for k, (a, b) in edge_faces.items()},
    )
    arr._events = events
    arr._polylines = polys
    return arr
