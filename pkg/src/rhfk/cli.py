"""Command-line front end.

Every subcommand that reads a knot takes either a diagram file
(``rhfk-diagram/1`` JSON) or a complex dump (``rhfk-complex/1``).  Output is plain text by default and JSON with ``--format machine``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bounds import (
    BoundInput,
    genus_bound,
    rational_ball_genus_bound,
    rational_genus,
    self_intersection,
)
from .chain import DUMP_HEADER, FilteredComplex, check_nice, complex_from_diagram, dump, parse_dump
from .checks import run_suite
from .diagram import (
    HeegaardDiagram,
    from_json,
    simple_knot_diagram,
    to_json,
    trefoil_diagram,
    unknot_diagram,
    validate,
)
from .errors import (
    BadFraming,
    BadParameters,
    DiagramError,
    InconsistentClass,
    NoSolution,
    NonIntegerIndex,
    NotNice,
    RhfkError,
    UnstableWindow,
)
from .fmt import frac, parse_frac
from .grading import compute_gradings
from .homology import hfk_ranks, tau_report
from .surgery import stable_range, surgery_rows
from .symmetries import dualize, tensor

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_NICE = 3
EXIT_UNSTABLE = 4
EXIT_SUITE = 5


class Input:
    """A loaded input file: a diagram (with its complex) or a bare complex."""

    def __init__(self, path: str, strict_nice: bool = False):
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DiagramError(f"cannot read {path}: {exc.strerror}") from exc
        self.path = path
        self.diagram: HeegaardDiagram | None = None
        self._complex: FilteredComplex | None = None
        self.strict_nice = strict_nice
        if text.lstrip().startswith(DUMP_HEADER):
            try:
                self._complex = parse_dump(text)
            except (ValueError, KeyError) as exc:
                raise DiagramError(f"bad complex dump: {exc}") from exc
        else:
            self.diagram = from_json(text)
            rep = validate(self.diagram)
            if not rep.ok:
                raise DiagramError("; ".join(rep.messages))

    def check_nice(self) -> None:
        if self.diagram is None:
            return
        rep = check_nice(self.diagram)
        bad = rep.offending if self.strict_nice else ([] if rep.nice else rep.offending)
        if bad:
            raise NotNice(f"regions {bad} are neither bigons nor squares", bad)

    @property
    def complex(self) -> FilteredComplex:
        if self._complex is None:
            self.check_nice()
            self._complex = complex_from_diagram(self.diagram)
        return self._complex


# ---------------------------------------------------------------------------
# output helpers


def _jsonable(x):
    if isinstance(x, Fraction):
        return frac(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def emit(args, text_lines: list[str], machine: dict) -> None:
    if args.format == "machine":
        sys.stdout.write(json.dumps(_jsonable(machine), sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_hfk(args) -> int:
    inp = Input(args.file, args.strict_nice)
    C = inp.complex
    lines = [f"knot {C.name or '-'}"]
    rows = []
    if inp.diagram is not None:
        G = compute_gradings(inp.diagram)
        fr = G.framing
        lines.append(f"order q={fr.q} framing c={fr.c} d={fr.d} r={fr.r} shift={fr.shift}")
    lines.append("generators (name, class, A, gr):")
    for b in sorted(C.basis, key=lambda b: (b.cls, b.A, b.gen)):
        lines.append(f"  ({b.gen}, {b.cls}, {frac(b.A)}, {b.gr})")
        rows.append({"gen": b.gen, "class": b.cls, "A": b.A, "gr": b.gr})
    lines.append("classes (class, k_s, size):")
    for cls in C.classes:
        lines.append(f"  ({cls}, {frac(C.k[cls])}, {len(C.members(cls))})")
    census = {"generators": len(C.basis), "classes": len(C.classes), "arrows": len(C.arrows),
              "arrows_nw0": sum(1 for a in C.arrows if a.nw == 0)}
    lines.append("differential: " + ", ".join(f"{k}={v}" for k, v in census.items()))
    for a in C.arrows:
        lines.append(f"  {a.src} -> {a.tgt} nw={a.nw} nz={a.nz}")
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(dump(C))
    ranks = hfk_ranks(C)
    lines.append("HFK-hat ranks (class, A, rank):")
    for (cls, A), rk in ranks.items():
        lines.append(f"  ({cls}, {frac(A)}, {rk})")
    emit(args, lines, {
        "name": C.name, "generators": rows, "k": C.k, "census": census,
        "arrows": [[a.src, a.tgt, a.nw, a.nz] for a in C.arrows],
        "hfk": [[cls, A, rk] for (cls, A), rk in ranks.items()],
    })
    return EXIT_OK


def _tau_output(args, C: FilteredComplex) -> None:
    rep = tau_report(C, jobs=args.jobs, window=getattr(args, "window", None))
    emit(args, ["(class, k_s, tau, tau_minus)"] + rep.lines(), {
        "name": C.name,
        "rows": [{"class": r.cls, "k": r.k, "tau": r.tau, "tau_minus": r.tau_minus} for r in rep.rows],
    })


def cmd_tau(args) -> int:
    C = Input(args.file, args.strict_nice).complex
    if args.reverse_y:
        C = dualize(C)
    _tau_output(args, C)
    return EXIT_OK


def cmd_check(args) -> int:
    inp = Input(args.file, args.strict_nice)
    C = inp.complex
    res = run_suite(inp.diagram, C, seed=args.seed)
    lines = [c.line() for c in res.checks]
    passed = sum(c.ok for c in res.checks)
    lines.append(f"{passed}/{len(res.checks)} checks passed")
    if not res.ok:
        lines += ["minimal reproducer:", res.reproducer.rstrip("\n")]
    emit(args, lines, {
        "ok": res.ok,
        "checks": [{"module": c.module, "name": c.name, "ok": c.ok, "detail": c.detail} for c in res.checks],
        "reproducer": res.reproducer,
    })
    return EXIT_OK if res.ok else EXIT_SUITE


def cmd_surgery(args) -> int:
    C = Input(args.file, args.strict_nice).complex
    if args.m is not None:
        ms = args.m
    elif args.range is not None:
        lo, hi = args.range
        ms = list(range(lo, hi + 1))
    else:
        ms = None
    classes = [args.cls] if args.cls else None
    rows = surgery_rows(C, ms, classes)
    lines = ["(class, m, rank, euler, stable?)"] + [r.line() for r in rows]
    emit(args, lines, {"rows": [{"class": r.cls, "m": r.m, "rank": r.rank, "euler": r.euler,
                                 "stable": r.stable} for r in rows],
                       "stable_range": {c: list(stable_range(C, c)) for c in C.classes}})
    return EXIT_OK


def cmd_sum(args) -> int:
    C1 = Input(args.file1, args.strict_nice).complex
    C2 = Input(args.file2, args.strict_nice).complex
    T = tensor(C1, C2)
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(dump(T))
    _tau_output(args, T)
    return EXIT_OK


def cmd_bound(args) -> int:
    tau = parse_frac(args.tau)
    if args.self_int is None:
        si = self_intersection(args.q, args.c, args.r, args.n)[0] if args.n is not None else Fraction(0)
    else:
        si = parse_frac(args.self_int)
    inp = BoundInput(args.p, args.q, args.c, args.r, 0 if args.n is None else args.n, tau,
                     parse_frac(args.c1), si, args.chi, args.components)
    res = genus_bound(inp)
    lines = [res.verdict()] + ["  " + t for t in res.trace]
    machine = {"bound": res.value, "genus": res.genus, "holds": res.holds, "trace": res.trace}
    if args.rational_ball:
        g = rational_ball_genus_bound(tau)
        lines.append(f"rational ball: |tau| = {frac(abs(tau))} <= g; g >= {g}")
        machine["rational_ball_genus"] = g
    if args.a_max is not None:
        rg = rational_genus([parse_frac(args.a_max)], args.q)
        lines.append(f"rational genus: ||K|| = {frac(rg.norm)}; -chi(F) >= {frac(rg.chi_bound)}")
        machine["rational_genus"] = {"norm": rg.norm, "chi_bound": rg.chi_bound}
    emit(args, lines, machine)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.knot:
        dia = {"unknot": unknot_diagram, "trefoil": trefoil_diagram,
               "trefoil-mirror": lambda: trefoil_diagram(mirror=True)}[args.knot]()
    else:
        if args.params is None or len(args.params) != 3:
            raise BadParameters("gen needs p q k or --knot")
        dia = simple_knot_diagram(*args.params)
    text = to_json(dia)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "machine"], default=argparse.SUPPRESS,
                        help="plain text (default) or JSON")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes over spin^c classes")
    common.add_argument("--strict-nice", action="store_true", default=argparse.SUPPRESS,
                        help="apply the bigon-or-square test in genus one too")

    p = argparse.ArgumentParser(prog="rhfk", parents=[common],
                                description="Knot Floer data and tau invariants from Heegaard diagrams.")
    p.add_argument("--version", action="version", version=f"rhfk {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hfk", parents=[common], help="generators, gradings and knot homology ranks")
    s.add_argument("file")
    s.add_argument("--dump", metavar="FILE", help="also write the complex")
    s.set_defaults(func=cmd_hfk)

    s = sub.add_parser("tau", parents=[common], help="tau and tau^- for every spin^c class")
    s.add_argument("file")
    s.add_argument("--reverse-y", action="store_true", help="report for the orientation-reversed manifold")
    s.add_argument("--window", type=int, default=None, help="i-window N (default: from the A-span)")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("check", parents=[common], help="run the invariant suite")
    s.add_argument("file")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("surgery", parents=[common], help="large-surgery pieces")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--m", type=int, action="append", help="level m (repeatable)")
    g.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    s.add_argument("--class", dest="cls", help="restrict to one class")
    s.set_defaults(func=cmd_surgery)

    s = sub.add_parser("sum", parents=[common], help="tau of the connected sum")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--dump", metavar="FILE", help="also write the tensor complex")
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("bound", parents=[common], help="evaluate the genus bound")
    s.add_argument("--p", type=int, default=1)
    s.add_argument("--q", type=int, default=1)
    s.add_argument("--c", type=int, default=1)
    s.add_argument("--r", type=int, default=0)
    s.add_argument("--n", type=int, default=None, help="surgery coefficient; fixes the self-intersection")
    s.add_argument("--tau", required=True)
    s.add_argument("--c1", default="0", help="c_1 pairing")
    s.add_argument("--self", dest="self_int", default=None, help="self-intersection (overrides --n)")
    s.add_argument("--chi", type=int, default=None, help="Euler characteristic of a candidate surface")
    s.add_argument("--components", type=int, default=1)
    s.add_argument("--rational-ball", action="store_true")
    s.add_argument("--a-max", default=None, help="top Alexander grading, for the rational genus")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("gen", parents=[common], help="write a diagram file")
    s.add_argument("params", type=int, nargs="*", metavar="p q k")
    s.add_argument("--knot", choices=["unknot", "trefoil", "trefoil-mirror"])
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("format", "text"), ("jobs", 1), ("strict_nice", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.command == "gen" and args.params == []:
        args.params = None
    try:
        return args.func(args)
    except NotNice as exc:
        print(f"error: not nice: {exc}", file=sys.stderr)
        return EXIT_NOT_NICE
    except UnstableWindow as exc:
        print(f"error: unstable window: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except (DiagramError, BadParameters, BadFraming, NoSolution, InconsistentClass, NonIntegerIndex) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except RhfkError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SUITE


if __name__ == "__main__":
    sys.exit(main())
