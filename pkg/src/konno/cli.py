"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 violated mathematical precondition,
4 depth cap reached.  ``--json`` prints exactly one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import staircase as st
from .blowup import (
    DEFAULT_DEPTH_CAP,
    ClusterNode,
    ClusterTree,
    hoskin_deligne_check,
    lech_check,
    multiplicity_from_cluster,
)
from .bounds import konno_bounds_hypersurface, konno_bounds_k3, k3_sweep
from .corpus import run_corpus
from .errors import InputError, KonnoError
from .pencil import Pencil, resolve_pencil

SCHEMA = "1"


def _node_text(n: ClusterNode) -> str:
    head = str(n.multiplicity) if n.chart == "root" else f"{n.chart}:{n.multiplicity}"
    if not n.children:
        return head
    return head + "[" + " ".join(_node_text(c) for c in n.children) + "]"


def cluster_text(t: ClusterTree) -> str:
    return " ".join(_node_text(r) for r in t.roots) or "(empty)"


def _table(rows) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _yes(b: bool) -> str:
    return "yes" if b else "no"


# -- ideal ---------------------------------------------------------------

def ideal_result(text: str, depth_cap: int) -> dict:
    I = st.MonomialIdeal.parse(text)
    base = st.report(I)
    hd = hoskin_deligne_check(I, depth_cap)
    lech = lech_check(I)
    e_cluster = multiplicity_from_cluster(I, depth_cap)
    return {
        "generators": base["generators"],
        "colength": base["colength"],
        "order": base["order"],
        "e": base["e"],
        "closed": base["integrally_closed"],
        "closure": base["closure_generators"],
        "cluster": hd.cluster.to_json(),
        "closure_cluster": hd.closure_cluster.to_json(),
        "e_from_cluster": e_cluster,
        "hoskin_deligne": {k: v for k, v in hd.to_json().items()
                           if k not in ("cluster", "closure_cluster")},
        "lech": lech.to_json(),
        "_trees": (hd.cluster, hd.closure_cluster),
    }


def ideal_text(r: dict) -> str:
    hd, lech = r["hoskin_deligne"], r["lech"]
    tree, closure_tree = r["_trees"]
    return _table([
        ("ideal", r["generators"]),
        ("colength", r["colength"]),
        ("order", r["order"]),
        ("e", r["e"]),
        ("integrally closed", _yes(r["closed"])),
        ("closure", r["closure"]),
        ("cluster", cluster_text(tree)),
        ("closure cluster", cluster_text(closure_tree)),
        ("sum m^2 (closure)", r["e_from_cluster"]),
        ("sum m(m+1)/2", hd["hd_sum"]),
        ("hoskin-deligne", hd["verdict"]),
        ("lech e+sqrt(e)<=2l", f"{_yes(lech['holds'])} (slack {lech['slack']})"),
    ])


# -- pencil --------------------------------------------------------------

def pencil_result(f: str, g: str, affine: bool, degree, depth_cap: int) -> dict:
    P = Pencil.parse(f, g, affine=affine, degree=degree)
    report = resolve_pencil(P, depth_cap)
    return {"pencil": {"f": str(P.f), "g": str(P.g)}, **report.to_json(),
            "_tree": report.cluster}


def pencil_text(r: dict) -> str:
    rows = [
        ("f", r["pencil"]["f"]),
        ("g", r["pencil"]["g"]),
        ("degree", r["d"]),
        ("base points", ", ".join(f"{b['point']} m={b['m']}" for b in r["base_points"])),
        ("cluster", cluster_text(r["_tree"])),
        ("sum m", r["sums"]["sum_m"]),
        ("sum m^2", r["sums"]["sum_m_sq"]),
        ("sum m(m-1)", r["sums"]["sum_m_m_minus_1"]),
        ("p_a", r["pa"]),
        ("genus", r["g"]),
    ]
    rows += [(f"check {k}", _yes(v)) for k, v in r["checks"].items()]
    return _table(rows)


def _public(r: dict) -> dict:
    return {k: v for k, v in r.items() if not k.startswith("_")}


# -- dispatch ------------------------------------------------------------

def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]


def _cmd_ideal(args):
    inputs = _read_lines(args.file) if args.file else [args.ideal]
    if inputs == [None]:
        raise InputError("give an ideal or --file")
    results = [ideal_result(t, args.depth_cap) for t in inputs]
    if args.json:
        if args.file:
            return {"command": "ideal", "results": [_public(r) for r in results]}
        return {"command": "ideal", **_public(results[0])}
    return "\n\n".join(ideal_text(r) for r in results)


def _cmd_pencil(args):
    if args.file:
        pairs = []
        for line in _read_lines(args.file):
            if ";" not in line:
                raise InputError(f"pencil file lines need 'f ; g', got {line!r}")
            f, g = line.split(";", 1)
            pairs.append((f, g))
    else:
        if args.f is None or args.g is None:
            raise InputError("give two polynomials or --file")
        pairs = [(args.f, args.g)]
    results = [pencil_result(f, g, args.affine, args.degree, args.depth_cap) for f, g in pairs]
    if args.json:
        if args.file:
            return {"command": "pencil", "results": [_public(r) for r in results]}
        return {"command": "pencil", **_public(results[0])}
    return "\n\n".join(pencil_text(r) for r in results)


def _cmd_hypersurface(args):
    b = konno_bounds_hypersurface(args.n, args.d)
    if args.json:
        return {"command": "hypersurface", **b.to_json()}
    return _table([
        ("n", b.n), ("d", b.d),
        ("h0(K)", b.h0_K), ("h0(K-H)", b.h0_K_minus_H), ("h0(K+H)", b.h0_K_plus_H),
        ("lower", b.lower), ("upper", b.upper),
    ] + ([("note", b.note)] if b.note else []))


def _cmd_k3(args):
    if args.sweep is not None:
        rows = k3_sweep(args.sweep)
        if args.json:
            return {"command": "k3", "rows": [{k: v for k, v in r.to_json().items()
                                               if k != "m_choice"} for r in rows]}
        lines = [f"{'d':>6} {'m':>4} {'g_min':>6} {'g_max':>6}"]
        lines += [f"{r.d:>6} {r.m:>4} {r.g_min:>6} {r.g_max:>6}" for r in rows]
        return "\n".join(lines)
    b = konno_bounds_k3(args.d)
    if args.json:
        return {"d": b.d, "m": b.m, "g_min": b.g_min, "g_max": b.g_max, "m_choice": b.m_choice}
    return _table([("d", b.d), ("m", f"{b.m} ({b.m_choice} valid)"),
                   ("g_min", b.g_min), ("g_max", b.g_max)])


def _cmd_corpus(args):
    if args.count < 1:
        raise InputError("--count must be at least 1")
    out = run_corpus(args.seed, args.count, mutate_index=args.mutate)
    if args.json:
        return {"command": "corpus", **out}
    rows = [(name, f"{s['passed']} passed, {s['failed']} failed")
            for name, s in out["suites"].items()]
    text = _table([("seed", out["seed"]), ("count", out["count"])] + rows)
    dumps = [f"FAIL {name}: {json.dumps(f)}" for name, s in out["suites"].items()
             for f in s["failures"]]
    return "\n".join([text] + dumps)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--depth-cap", type=int, default=DEFAULT_DEPTH_CAP,
                        help="maximum blow-up nesting (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="konno", description="Blow-up invariants of ideals and pencils; Konno bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common], help="monomial ideal invariants")
    p.add_argument("ideal", nargs="?", help='e.g. "x^3, y^2"')
    p.add_argument("--file", help="one ideal per line")
    p.set_defaults(handler=_cmd_ideal)

    p = sub.add_parser("pencil", parents=[common], help="resolve a pencil of plane curves")
    p.add_argument("f", nargs="?")
    p.add_argument("g", nargs="?")
    p.add_argument("--affine", action="store_true",
                   help="inputs are in x, y; homogenize with z")
    p.add_argument("--degree", type=int, help="homogenization degree for --affine")
    p.add_argument("--file", help="one pencil per line as 'f ; g'")
    p.set_defaults(handler=_cmd_pencil)

    p = sub.add_parser("hypersurface", parents=[common], help="bounds for X_d in P^(n+1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_hypersurface)

    p = sub.add_parser("k3", parents=[common], help="bounds for K3 surfaces of genus d")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=int)
    group.add_argument("--sweep", type=int, metavar="MAX")
    p.set_defaults(handler=_cmd_k3)

    p = sub.add_parser("corpus", parents=[common], help="seeded verification sweep")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--mutate", type=int, default=None, help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_corpus)
    return parser


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.handler(args)
    except KonnoError as exc:
        name = type(exc).__name__
        if args.json:
            print(json.dumps({"schema": SCHEMA, "error": {"type": name, "message": str(exc)}}),
                  file=stdout)
        print(f"error: {name}: {exc}", file=stderr)
        return exc.exit_code
    except ValueError as exc:
        if args.json:
            print(json.dumps({"schema": SCHEMA,
                              "error": {"type": "InputError", "message": str(exc)}}),
                  file=stdout)
        print(f"error: InputError: {exc}", file=stderr)
        return InputError.exit_code
    if args.json:
        print(json.dumps({"schema": SCHEMA, **out}), file=stdout)
    else:
        print(out, file=stdout)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
