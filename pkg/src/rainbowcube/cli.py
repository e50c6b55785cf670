"""Command-line front end.

Subcommands: construct, verify, exact, sets, genus. Machine-readable
documents go to files, human-readable summaries to stdout. Exit codes:
0 success or property verified, 1 violation or failed property (witness
printed), 2 usage or format error, 3 budget exceeded.

Coloring document (JSON): {"n", "k", "scheme", "params", "edges"}, where
edges is a list of {"b": "<hex bottom mask>", "dir": <1-based int>,
"color": [d, p]} covering every edge of Q_n exactly once. Equation files
hold {"equations": [[a1, ..., ak], ...]} with nonzero int coefficients.
Set files hold a sorted int array, bare or under an "elements" key.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import addsets, coloring, verifier
from .errors import BudgetError, UsageError
from .verifier import Violation

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def save_coloring(col: coloring.EdgeColoring, path: str) -> None:
    edges = [
        {"b": hex(e.bottom), "dir": e.dir, "color": list(c)}
        for e, c in col.items()
    ]
    doc = {
        "n": col.n,
        "k": col.k,
        "scheme": col.scheme,
        "params": {
            key: (list(val) if isinstance(val, tuple) else val)
            for key, val in col.params.items()
        },
        "edges": edges,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_coloring(path: str) -> coloring.EdgeColoring:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: top level must be an object")
    for field in ("n", "k", "scheme", "edges"):
        if field not in doc:
            raise UsageError(f"{path}: missing field {field!r}")
    n, k = doc["n"], doc["k"]
    if not isinstance(n, int) or not isinstance(k, int):
        raise UsageError(f"{path}: n and k must be ints")
    if doc["scheme"] not in coloring.SCHEMES:
        raise UsageError(f"{path}: unknown scheme {doc['scheme']!r}")
    table = {}
    expected = n << n - 1 if n >= 1 else 0
    records = doc["edges"]
    if not isinstance(records, list):
        raise UsageError(f"{path}: edges must be a list")
    for rec in records:
        try:
            bottom = int(rec["b"], 16)
            direction = rec["dir"]
            d, p = rec["color"]
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"{path}: malformed edge record {rec!r}") from exc
        if not isinstance(direction, int) or not 1 <= direction <= n:
            raise UsageError(f"{path}: direction {direction!r} out of range")
        if bottom >> n:
            raise UsageError(f"{path}: mask {rec['b']} has bits above position {n}")
        if bottom >> (direction - 1) & 1:
            raise UsageError(
                f"{path}: direction bit {direction} set in bottom {rec['b']}"
            )
        if not isinstance(d, int) or not isinstance(p, int):
            raise UsageError(f"{path}: color parts must be ints in {rec!r}")
        key = bottom << 5 | direction - 1
        if key in table:
            raise UsageError(f"{path}: duplicate edge {rec['b']} dir {direction}")
        table[key] = (d, p)
    if len(table) != expected:
        raise UsageError(
            f"{path}: expected {expected} edges for Q_{n}, found {len(table)}"
        )
    params = doc.get("params") or {}
    if "S" in params:
        params["S"] = tuple(params["S"])
    return coloring.EdgeColoring(n, k, "explicit", params, table)


def load_set(path: str) -> tuple[int, ...]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON: {exc}") from exc
    if isinstance(doc, dict):
        doc = doc.get("elements")
    if not isinstance(doc, list) or not all(isinstance(e, int) for e in doc):
        raise UsageError(f"{path}: expected an int array (or an 'elements' key)")
    return tuple(doc)


def load_equations(path: str) -> tuple[tuple[int, ...], ...]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "equations" not in doc:
        raise UsageError(f"{path}: expected an object with an 'equations' list")
    eqs = doc["equations"]
    if not isinstance(eqs, list) or not eqs:
        raise UsageError(f"{path}: 'equations' must be a nonempty list")
    for eq in eqs:
        if not isinstance(eq, list):
            raise UsageError(f"{path}: each equation must be a list, got {eq!r}")
    return tuple(tuple(eq) for eq in eqs)


def _print_violation(vio: Violation) -> None:
    cyc = " ".join(hex(v) for v in vio.cycle)
    print(f"violation: cycle {cyc}")
    print(
        f"  edges ({hex(vio.e1.bottom)}, dir {vio.e1.dir}) and "
        f"({hex(vio.e2.bottom)}, dir {vio.e2.dir}) share color {list(vio.color)}"
    )


def _cmd_construct(args) -> int:
    n, k = args.n, args.k
    if args.scheme == "c2":
        if k is None:
            k = 6
        if k != 6:
            raise UsageError("scheme c2 colors 6-cycles; use --k 6 or omit --k")
        if args.sidon is not None:
            raise UsageError("--sidon applies to scheme c1 only")
        if args.eps is None:
            raise UsageError("scheme c2 needs --eps")
        s, cap, _ = coloring.derive_c2_params(n, args.eps)
        col = coloring.construction2(n, s, cap)
        bound = 6 * cap
        print(f"colors used: {coloring.count_colors(col)} (at most 6N = {bound}, N = {cap})")
    else:
        if k is None:
            raise UsageError("scheme c1 needs --k")
        if k % 4 or k < 8:
            raise UsageError("scheme c1 needs k divisible by 4 and at least 8")
        if args.eps is not None:
            raise UsageError("--eps applies to scheme c2 only")
        t = k // 4 - 1
        source = args.sidon or "greedy"
        if source == "greedy":
            s = addsets.greedy_bt(t, n)
        else:
            if t < 2:
                raise UsageError(
                    "the finite-field generator needs t >= 2 (k >= 12); use --sidon greedy"
                )
            q = n
            while not addsets._is_prime(q):
                q += 1
            s = addsets.bose_chowla(t, q)
        col = coloring.construction1(n, k, s)
        used = col.params["S"]
        bound = k * k * (used[-1] // n**t + 1) * n ** (k // 4)
        print(f"colors used: {coloring.count_colors(col)} (scheme bound {bound})")
    save_coloring(col, args.out)
    print(f"wrote coloring to {args.out}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    col = load_coloring(args.coloring)
    k = args.k if args.k is not None else col.k
    vio = verifier.verify_rainbow(col, k)
    if vio is None:
        print(f"rainbow: every {k}-cycle of Q_{col.n} carries {k} distinct colors")
        return EXIT_OK
    _print_violation(vio)
    return EXIT_VIOLATION


def _cmd_exact(args) -> int:
    try:
        value, col = verifier.exact_min_colors(args.n, args.k, args.timeout)
    except BudgetError as exc:
        if exc.kind == "timeout":
            lo, hi = exc.bounds if exc.bounds else (1, args.n << args.n - 1)
            print(f"timed out; certified bounds [{lo}, {hi}]")
            return EXIT_BUDGET
        raise
    print(f"minimum colors for {args.k}-rainbow on Q_{args.n}: {value}")
    if args.out:
        save_coloring(col, args.out)
        print(f"wrote optimal coloring to {args.out}")
    return EXIT_OK


def _cmd_sets(args) -> int:
    if args.kind == "bt":
        if args.t is None:
            raise UsageError("--kind bt needs --t")
        if args.N is not None:
            raise UsageError("--N applies to --kind behrend")
        if args.verify_only:
            elems = load_set(args.verify_only)
            ok, witness = addsets.verify_bt(elems, args.t)
            print(f"elements: {sorted(elems)}")
            if ok:
                print(f"B_{args.t} sums distinct: true")
                return EXIT_OK
            print(f"B_{args.t} sums distinct: false; {witness[0]} vs {witness[1]}")
            return EXIT_VIOLATION
        if (args.q is None) == (args.size is None):
            raise UsageError("--kind bt needs exactly one of --q or --size")
        if args.q is not None:
            elems = addsets.bose_chowla(args.t, args.q)
        else:
            elems = addsets.greedy_bt(args.t, args.size)
        ok, witness = addsets.verify_bt(elems, args.t)
        print(f"elements: {list(elems)}")
        print(f"B_{args.t} sums distinct: {str(ok).lower()}")
        return EXIT_OK if ok else EXIT_VIOLATION

    if args.t is not None or args.q is not None or args.size is not None:
        raise UsageError("--t/--q/--size apply to --kind bt")
    if args.verify_only:
        elems = load_set(args.verify_only)
        ok, witness = addsets.verify_3ap_free(elems)
        print(f"elements: {sorted(elems)}")
        if ok:
            print("3-term progression free: true")
            return EXIT_OK
        print(f"3-term progression free: false; progression {witness}")
        return EXIT_VIOLATION
    if args.N is None:
        raise UsageError("--kind behrend needs --N")
    elems = addsets.behrend_set(args.N)
    ok, _ = addsets.verify_3ap_free(elems)
    print(f"elements: {list(elems)}")
    print(f"3-term progression free: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_genus(args) -> int:
    if (args.eqs is None) == (args.conjecture is None):
        raise UsageError("needs exactly one of --eqs or --conjecture")
    if args.conjecture is not None:
        system = addsets.conjecture_system(args.conjecture)
    else:
        system = load_equations(args.eqs)
    for idx, eq in enumerate(system, 1):
        g, parts = addsets.genus(eq)
        if parts is None:
            print(f"equation {idx}: {list(eq)} genus {g}")
        else:
            shown = " ".join("{" + ",".join(map(str, part)) + "}" for part in parts)
            print(f"equation {idx}: {list(eq)} genus {g} partition {shown}")
    if args.freeset is not None:
        elems, optimal = addsets.equation_free_subset(
            system, args.freeset, mode=args.mode
        )
        print(
            f"solution-free subset of [1, {args.freeset}]: {list(elems)} "
            f"(size {len(elems)}, optimal {str(optimal).lower()})"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowcube",
        description="Rainbow cycle colorings of hypercubes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a coloring and write it to a file")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--scheme", choices=("c1", "c2"), required=True)
    c.add_argument("--eps", help="exponent margin for scheme c2, e.g. 1.0 or 1/2")
    c.add_argument("--sidon", choices=("greedy", "bose-chowla"))
    c.add_argument("--out", required=True)
    c.set_defaults(fn=_cmd_construct)

    v = sub.add_parser("verify", help="check a coloring file for rainbow cycles")
    v.add_argument("--coloring", required=True)
    v.add_argument("--k", type=int)
    v.set_defaults(fn=_cmd_verify)

    e = sub.add_parser("exact", help="exact minimum color count")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--timeout", type=float)
    e.add_argument("--out")
    e.set_defaults(fn=_cmd_exact)

    s = sub.add_parser("sets", help="generate or verify integer sets")
    s.add_argument("--kind", choices=("bt", "behrend"), required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--size", type=int)
    s.add_argument("--N", type=int)
    s.add_argument("--verify-only", dest="verify_only")
    s.set_defaults(fn=_cmd_sets)

    g = sub.add_parser("genus", help="equation genus and solution-free subsets")
    g.add_argument("--eqs")
    g.add_argument("--conjecture", type=int)
    g.add_argument("--freeset", type=int)
    g.add_argument("--mode", choices=("greedy", "exhaustive"), default="greedy")
    g.set_defaults(fn=_cmd_genus)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE if exc.kind == "class" else EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
