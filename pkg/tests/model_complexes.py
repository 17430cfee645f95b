"""Hand-built complexes used as independent test inputs."""

from __future__ import annotations

from fractions import Fraction

from rhfk.chain import Arrow, BasisElem, FilteredComplex


def staircase(steps: list[int], name: str = "") -> FilteredComplex:
    """The staircase complex with horizontal/vertical step lengths ``steps``.

    Generators x0, y1, x1, ..., yn, xn with arrows y_i -> x_{i-1} of
    length s_i in the z direction and y_i -> x_i of length s_{n+1-i} in the
    w direction, normalised so the A-gradings are symmetric.  This is the
    complex of a knot with an L-space surgery, whose tau is its genus
    sum(steps).
    """
    n = len(steps)
    t = steps[::-1]
    g = sum(steps)
    A = [Fraction(-g)]
    gr = [0]
    basis = [BasisElem("x0", "s0", A[0], 0)]
    arrows = []
    a, m = A[0], 0
    for i in range(1, n + 1):
        ay, my = a + steps[i - 1], m + 1
        basis.append(BasisElem(f"y{i}", "s0", ay, my))
        a, m = ay + t[i - 1], my - 1 + 2 * t[i - 1]
        basis.append(BasisElem(f"x{i}", "s0", a, m))
        arrows.append(Arrow(f"y{i}", f"x{i - 1}", 0, steps[i - 1]))
        arrows.append(Arrow(f"y{i}", f"x{i}", t[i - 1], 0))
    C = FilteredComplex(basis, arrows, {"s0": Fraction(0)}, None, name or f"stair{tuple(steps)}")
    C.check_arrows()
    return C
