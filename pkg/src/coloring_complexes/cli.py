"""Command-line front end.

Exit status is 0 on success, 1 when a verification ledger contains a
mismatch, and 2 for bad input (unreadable or malformed files, bad
arguments, polynomials that violate a formula's preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import verification
from .arrangements import char_poly, load_arrangement
from .complexes import (
    build_bn_restriction,
    build_coloring_complex,
    build_unipolar_complex,
    double_cone_h,
    format_face,
    reduced_betti,
    summarize,
)
from .core import Polynomial
from .errors import ColoringComplexError
from .graphs import chromatic_polynomial, has_dominating_vertex, load_graph
from .hseries import extract_bn_h, extract_color_h, extract_matroid_h, extract_unipolar_h
from .macaulay import ced_conditions, is_m_vector

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _ints(xs) -> list[str]:
    return [str(x) for x in xs]


def _tuple(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")

    p = _Parser(prog="coloring-complexes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial of a graph file")
    s.add_argument("graph")

    s = sub.add_parser("hvector", parents=[common], help="h-vector from a polynomial formula")
    s.add_argument("kind", choices=("color", "unipolar", "bn", "matroid"))
    s.add_argument("file", nargs="?", help="graph file (color, unipolar) or arrangement file (bn)")
    s.add_argument("--chi", type=_int_list, help="matroid: coefficients, highest degree first")
    s.add_argument("--n", type=int, help="matroid: override n (default deg chi + 1)")

    s = sub.add_parser("complex", parents=[common], help="build a complex and summarize it")
    s.add_argument("kind", choices=("color", "unipolar", "bn"))
    s.add_argument("file")
    s.add_argument("--vertex", type=int, help="unipolar: vertex (default: a dominating vertex, else 1)")
    s.add_argument("--dump-faces", action="store_true")
    s.add_argument("--betti", action="store_true", help="reduced Betti numbers (color, unipolar)")

    s = sub.add_parser("check", parents=[common], help="M-vector or convex-ear checks")
    s.add_argument("what", choices=("mvector", "ced"))
    s.add_argument("values", type=_int_list)

    s = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial of an arrangement")
    s.add_argument("arrangement")

    sub.add_parser("verify-paper", parents=[common], help="recompute the worked examples")
    for name in ("verify-bridges", "verify-inequalities"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--max-n", type=int, default=6)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--full", action="store_true", help="table: list every entry")
    return p


def _emit(args, payload: dict, table: str, out) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(table.rstrip("\n") + "\n")


def _poly_payload(p: Polynomial) -> dict:
    return {"polynomial": p.render(), "coefficients_descending": _ints(reversed(p.coeffs))}


def _cmd_chromatic(args, out):
    G = load_graph(args.graph)
    P = chromatic_polynomial(G)
    _emit(args, {"graph": args.graph, "n": str(G.n), **_poly_payload(P)}, P.render(), out)
    return EXIT_OK


def _report_out(args, rep, out, extra=None):
    payload = {"kind": rep.kind, "n": str(rep.n), "d": str(rep.d), "h": _ints(rep.values)}
    lines = [f"kind: {rep.kind}", f"n: {rep.n}", f"d: {rep.d}", f"h: {_tuple(rep.values)}"]
    for key, value in (extra or {}).items():
        payload[key] = value
        lines.append(f"{key}: {value}")
    _emit(args, payload, "\n".join(lines), out)


def _cmd_hvector(args, out):
    if args.kind == "matroid":
        if not args.chi:
            raise _UsageError("hvector matroid: --chi is required")
        chi = Polynomial.from_descending(args.chi)
        _report_out(args, extract_matroid_h(chi, args.n), out, {"chi": chi.render()})
        return EXIT_OK
    if not args.file:
        raise _UsageError(f"hvector {args.kind}: an input file is required")
    if args.kind == "bn":
        A = load_arrangement(args.file)
        chi, r = char_poly(A)
        _report_out(args, extract_bn_h(chi, r, A.n), out, {"chi": chi.render(), "rank": str(r)})
        return EXIT_OK
    G = load_graph(args.file)
    P = chromatic_polynomial(G)
    fn = extract_color_h if args.kind == "color" else extract_unipolar_h
    _report_out(args, fn(P, G.n), out, {"chromatic": P.render()})
    return EXIT_OK


def _cmd_complex(args, out):
    extra = {}
    if args.kind == "bn":
        if args.betti:
            raise _UsageError("complex bn: --betti is supported for chain complexes only")
        faces = build_bn_restriction(load_arrangement(args.file))
    else:
        G = load_graph(args.file)
        if args.kind == "color":
            faces = build_coloring_complex(G)
        else:
            v = args.vertex or has_dominating_vertex(G) or 1
            extra["vertex"] = str(v)
            faces = build_unipolar_complex(G, v)
    summ = summarize(faces)
    payload = {
        "kind": args.kind,
        **extra,
        "dim": str(summ.dim),
        "f": _ints(summ.f),
        "h": _ints(summ.h),
        "pure": summ.pure,
    }
    lines = [f"{k}: {v}" for k, v in extra.items()]
    lines += [f"dim: {summ.dim}", f"f: {_tuple(summ.f)}", f"h: {_tuple(summ.h)}", f"pure: {summ.pure}"]
    if args.kind == "color":
        dc = double_cone_h(summ.h)
        payload["double_cone_h"] = _ints(dc)
        lines.append(f"double cone h: {_tuple(dc)}")
    if args.betti:
        b = reduced_betti(faces)
        payload["reduced_betti"] = {str(k): str(x) for k, x in b.items()}
        lines.append("reduced betti: " + ", ".join(f"b{k}={x}" for k, x in b.items()))
    if args.dump_faces:
        payload["faces"] = [format_face(F) for F in faces]
        lines.append("faces:")
        lines += [format_face(F) for F in faces]
    _emit(args, payload, "\n".join(lines), out)
    return EXIT_OK


def _cmd_check(args, out):
    seq = args.values
    if args.what == "mvector":
        v = is_m_vector(seq)
        payload = {"sequence": _ints(seq), "is_m_vector": v.ok,
                   "witness": None if v.witness is None else str(v.witness), "reason": v.reason}
        lines = [f"sequence: {_tuple(seq)}", f"M-vector: {v.ok}"]
        if not v.ok:
            lines += [f"witness: {v.witness}", f"reason: {v.reason}"]
        _emit(args, payload, "\n".join(lines), out)
        return EXIT_OK
    if not seq:
        raise _UsageError("check ced: need at least one value")
    rep = ced_conditions(seq)
    payload = {
        "h": _ints(seq),
        "monotone_ok": rep.monotone_ok,
        "symmetric_ineq_ok": rep.symmetric_ineq_ok,
        "g_is_m_vector": rep.g_is_m_vector,
        "g": _ints(rep.g),
        "first_failure": rep.first_failure,
    }
    lines = [
        f"h: {_tuple(seq)}",
        f"condition 1 (monotone first half): {rep.monotone_ok}",
        f"condition 2 (h_i <= h_(d-i)): {rep.symmetric_ineq_ok}",
        f"condition 3 (g is an M-vector): {rep.g_is_m_vector}",
        f"g: {_tuple(rep.g)}",
    ]
    if rep.first_failure:
        lines.append(f"first failure: {rep.first_failure}")
    _emit(args, payload, "\n".join(lines), out)
    return EXIT_OK


def _cmd_charpoly(args, out):
    A = load_arrangement(args.arrangement)
    chi, r = char_poly(A)
    payload = {"arrangement": args.arrangement, "n": str(A.n), "rank": str(r), **_poly_payload(chi)}
    _emit(args, payload, f"{chi.render()}\nrank: {r}", out)
    return EXIT_OK


def _cmd_ledger(args, out):
    if args.command == "verify-paper":
        led = verification.verify_paper_examples()
        table = led.to_table(full=True)
    else:
        fn = (verification.verify_bridges if args.command == "verify-bridges"
              else verification.verify_inequalities)
        led = fn(args.max_n, args.seed)
        table = led.to_table(full=args.full or None)
    _emit(args, led.to_dict(), table, out)
    return EXIT_OK if led.overall else EXIT_MISMATCH


COMMANDS = {
    "chromatic": _cmd_chromatic,
    "hvector": _cmd_hvector,
    "complex": _cmd_complex,
    "check": _cmd_check,
    "charpoly": _cmd_charpoly,
    "verify-paper": _cmd_ledger,
    "verify-bridges": _cmd_ledger,
    "verify-inequalities": _cmd_ledger,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv``, execute one command, return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
    except ColoringComplexError as exc:
        err.write(f"error: {exc}\n")
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())
