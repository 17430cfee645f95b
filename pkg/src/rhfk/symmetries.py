"""Orientation reversal, knot reversal and connected sums at the complex level."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .chain import Arrow, BasisElem, FilteredComplex
from .errors import NoConjugatePartner
from .fmt import frac
from .grading import centered_fraction


def dualize(C: FilteredComplex) -> FilteredComplex:
    """The complex of the same knot in the orientation-reversed manifold."""
    basis = [BasisElem(b.gen, b.cls, -b.A, -b.gr) for b in C.basis]
    arrows = [Arrow(a.tgt, a.src, a.nw, a.nz) for a in C.arrows]
    k = {c: centered_fraction(-v) for c, v in C.k.items()}
    return FilteredComplex(basis, arrows, k, C.window, f"dual({C.name})" if C.name else "")


def _signature(C: FilteredComplex, cls: str):
    return C.k[cls], tuple(sorted(b.A for b in C.members(cls)))


@dataclass
class Conjugate:
    complex: FilteredComplex
    J: dict[str, str]  # class label s -> J s


def conjugate(C: FilteredComplex) -> Conjugate:
    """Swap the roles of the two basepoints.

    Generators keep their class labels; ``J`` sends a class ``s`` to the
    class of ``C`` whose (k, A-multiset) data agrees with the swapped data
    of ``s``.
    """
    k = {c: centered_fraction(-v) for c, v in C.k.items()}
    basis = []
    for b in C.basis:
        shift = b.A - C.k[b.cls]
        basis.append(BasisElem(b.gen, b.cls, -b.A, b.gr - 2 * int(shift)))
    arrows = [Arrow(a.src, a.tgt, a.nz, a.nw) for a in C.arrows]
    D = FilteredComplex(basis, arrows, k, C.window, f"conj({C.name})" if C.name else "")
    J: dict[str, str] = {}
    free = list(C.classes)
    for s in D.classes:
        sig = _signature(D, s)
        match = next((t for t in free if _signature(C, t) == sig), None)
        if match is None:
            k_s, A = sig
            raise NoConjugatePartner(
                f"class {s}: no class with k = {frac(k_s)} and A = {{{', '.join(frac(a) for a in A)}}}")
        J[s] = match
        free.remove(match)
    return Conjugate(D, J)


def _pair(x: str, y: str) -> str:
    return f"{x}*{y}"


def tensor(C1: FilteredComplex, C2: FilteredComplex) -> FilteredComplex:
    """Tensor product over the Laurent ring, written on generator pairs."""
    basis = []
    k = {}
    for c1 in C1.classes:
        for c2 in C2.classes:
            k[f"{c1}#{c2}"] = centered_fraction(C1.k[c1] + C2.k[c2])
    for b1 in C1.basis:
        for b2 in C2.basis:
            basis.append(BasisElem(_pair(b1.gen, b2.gen), f"{b1.cls}#{b2.cls}", b1.A + b2.A, b1.gr + b2.gr))
    arrows = []
    for a in C1.arrows:
        for b2 in C2.basis:
            arrows.append(Arrow(_pair(a.src, b2.gen), _pair(a.tgt, b2.gen), a.nw, a.nz))
    for b1 in C1.basis:
        for a in C2.arrows:
            arrows.append(Arrow(_pair(b1.gen, a.src), _pair(b1.gen, a.tgt), a.nw, a.nz))
    win = None if C1.window is None or C2.window is None else C1.window + C2.window
    name = f"{C1.name}#{C2.name}" if C1.name and C2.name else ""
    return FilteredComplex(basis, arrows, k, win, name)


def connected_sum_seifert_euler(chi1: int, chi2: int, q1: int, q2: int) -> int:
    if q1 < 1 or q2 < 1:
        raise ValueError("Seifert multiplicities must be positive")
    return q2 * chi1 + q1 * chi2 - q1 * q2


def a_profile(C: FilteredComplex) -> Counter:
    return Counter((C.k[b.cls], b.A) for b in C.basis)
