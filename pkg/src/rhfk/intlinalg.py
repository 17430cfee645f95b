"""Exact integer linear systems via column Hermite reduction.

Everything here works on plain Python ints so there is no overflow and no
rounding.  The systems that show up (one unknown per region, one row per
curve vertex) are small, so clarity wins over speed.
"""

from __future__ import annotations

from math import gcd


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        qt = a // b
        a, b = b, a - qt * b
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class IntegerSystem:
    """Column echelon form A U = H with U unimodular.

    After construction, ``solve(b)`` returns one integer solution of
    ``A x = b`` (or None) and ``kernel`` is a Z-basis of ``{x : A x = 0}``.
    """

    def __init__(self, rows: list[list[int]], ncols: int):
        self.ncols = ncols
        H = [list(map(int, r)) for r in rows]
        U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
        # U is stored column-major: U[j] is column j
        self._pivots: list[tuple[int, int]] = []  # (row, col)
        col = 0
        for r in range(len(H)):
            if col >= ncols:
                break
            row = H[r]
            for j in range(col + 1, ncols):
                if row[j] == 0:
                    continue
                a, b = row[col], row[j]
                g, s, t = _xgcd(a, b)
                ua, ub = a // g, b // g
                # new col  = s*c_col + t*c_j ; new j = -ub*c_col + ua*c_j
                for R in H:
                    x, y = R[col], R[j]
                    R[col], R[j] = s * x + t * y, -ub * x + ua * y
                cu, cj = U[col], U[j]
                U[col] = [s * x + t * y for x, y in zip(cu, cj)]
                U[j] = [-ub * x + ua * y for x, y in zip(cu, cj)]
            if row[col] != 0:
                if row[col] < 0:
                    for R in H:
                        R[col] = -R[col]
                    U[col] = [-x for x in U[col]]
                self._pivots.append((r, col))
                col += 1
        self._H = H
        self._U = U
        self.rank = col
        self.kernel = [list(U[j]) for j in range(col, ncols)]

    def solve(self, b: list[int]) -> list[int] | None:
        H = self._H
        y = [0] * self.ncols
        piv = dict(self._pivots)
        done = 0
        for r in range(len(H)):
            acc = int(b[r]) - sum(H[r][j] * y[j] for j in range(done))
            if r in piv:
                c = piv[r]
                qt, rem = divmod(acc, H[r][c])
                if rem:
                    return None
                y[c] = qt
                done = c + 1
            elif acc != 0:
                return None
        x = [0] * self.ncols
        for j in range(done):
            if y[j]:
                col = self._U[j]
                for i in range(self.ncols):
                    x[i] += y[j] * col[i]
        return x


def lattice_gcd(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g


def combo_for_gcd(values: list[int]) -> tuple[int, list[int]]:
    """Return (g, coeffs) with sum(coeffs[i] * values[i]) = g = gcd(values)."""
    g, coeffs = 0, [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        g2, s, t = _xgcd(g, int(v))
        coeffs = [s * c for c in coeffs]
        coeffs[i] = t
        g = g2
    return g, coeffs
