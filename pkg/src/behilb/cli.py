"""Command-line interface: ``behilb VERB INPUT [options]``.

INPUT is a path to an edge-list file or a family expression such as
``wheel:5`` or ``join(path:3,complete:2)``. Exit codes: 0 ok, 1 usage or
parse error, 2 size guard refused, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formulas, graphs
from .families import FamilySyntaxError, family
from .graphs import Graph, GraphError, SizeGuardError
from .oracle import binomial_edge_groebner, make_order, oracle_series, verify
from .sweep import format_table, sweep

VERBS = ("series", "dim", "mult", "hdata", "primes", "decompose", "oracle", "verify", "sweep")

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_graph(source: str) -> Graph:
    if os.path.isfile(source):
        with open(source) as fh:
            return graphs.parse_edge_list(fh.read())
    return family(source)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="behilb", description=__doc__.splitlines()[0])
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("input", help="edge-list file, family expression, or n for sweep")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--taylor", type=int, metavar="N", help="also print Hilbert function values 0..N")
    ap.add_argument("--max-vars", type=int, metavar="K", help="oracle size guard (number of variables)")
    ap.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    ap.add_argument("--trace", action="store_true", help="print the rule trace")
    ap.add_argument("--dump-gb", action="store_true", help="oracle: print the reduced Groebner basis")
    ap.add_argument("--dedup", action="store_true", help="sweep: one graph per isomorphism class")
    ap.add_argument("--jobs", type=int, default=1, help="sweep: worker processes")
    return ap


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _series_block(args, s, extra: dict | None = None) -> tuple[list[str], dict]:
    data = s.hilbert_data()
    lines = [f"series: {s}", f"dim: {data.dim}", f"e: {data.multiplicity}"]
    payload = {"series": s.to_dict(), "dim": data.dim, "multiplicity": data.multiplicity}
    if args.taylor is not None:
        values = s.taylor(args.taylor)
        lines.append(f"hilbert function: {values}")
        payload["taylor"] = values
    payload.update(extra or {})
    return lines, payload


def run(args) -> int:
    if args.verb == "sweep":
        try:
            n = int(args.input)
        except ValueError:
            raise UsageError(f"sweep expects a vertex count, got {args.input!r}") from None
        rows = sweep(n, dedup=args.dedup, jobs=args.jobs)
        ok = all(r.ok for r in rows)
        _emit(
            args,
            format_table(rows) + ("\nOK" if ok else "\nMISMATCH"),
            {
                "ok": ok,
                "rows": [
                    {
                        "n": r.n,
                        "graphs": r.graphs,
                        "formula": r.formula,
                        "fallback": r.fallback,
                        "mismatches": [[list(e) for e in g.edges] for g in r.mismatches],
                        "dim_mismatches": [[list(e) for e in g.edges] for g in r.dim_mismatches],
                    }
                    for r in rows
                ],
            },
        )
        return EXIT_OK if ok else EXIT_MISMATCH

    g = load_graph(args.input)
    limit = args.max_vars

    if args.verb in ("series", "dim", "mult", "hdata"):
        d = formulas.analyze(g, oracle_limit=limit)
        s = d.result
        data = s.hilbert_data()
        if args.verb == "dim":
            _emit(args, str(data.dim), {"dim": data.dim})
        elif args.verb == "mult":
            _emit(args, str(data.multiplicity), {"multiplicity": data.multiplicity})
        elif args.verb == "series":
            lines, payload = _series_block(args, s, {"trace": d.to_dict()})
            lines.append("trace:")
            lines.append(d.render(1))
            _emit(args, "\n".join(lines), payload)
        else:
            shown = list(data.e)
            while len(shown) > 1 and shown[-1] == 0:
                shown.pop()
            terms = "".join(
                f"{'-' if c < 0 else '+'}{abs(c)}*C(X+{i},{i})"
                for i, c in enumerate(data.hilbert_polynomial)
                if c
            ).lstrip("+")
            lines = [
                f"series: {s}",
                f"dim: {data.dim}",
                f"e: {shown}",
                "hilbert polynomial: " + (terms or "0"),
            ]
            payload = data.to_dict()
            if args.taylor is not None:
                payload["taylor"] = s.taylor(args.taylor)
                lines.append(f"hilbert function: {payload['taylor']}")
            if args.trace:
                lines.append(d.render())
            _emit(args, "\n".join(lines), payload)
        return EXIT_OK

    if args.verb == "primes":
        sets = graphs.cut_point_sets(g)
        lines = []
        for cs in sets:
            comps = " ".join("{" + ",".join(map(str, c)) + "}" for c in cs.components)
            T = "{" + ",".join(map(str, cs.T)) + "}"
            lines.append(f"T={T} c={cs.c} dim={cs.dimension(g.n)} components: {comps}")
        _emit(
            args,
            "\n".join(lines),
            {"cutsets": [{"T": list(cs.T), "components": [list(c) for c in cs.components]} for cs in sets]},
        )
        return EXIT_OK

    if args.verb == "decompose":
        dec = graphs.decompose(g)
        lines = [f"G{k + 1}: {{{','.join(map(str, c))}}}" for k, c in enumerate(dec.components)]
        lines += [f"G{i + 1} & G{j + 1} share {v}" for i, j, v in dec.gluing]
        _emit(
            args,
            "\n".join(lines),
            {"components": [list(c) for c in dec.components], "gluing": [list(t) for t in dec.gluing]},
        )
        return EXIT_OK

    if args.verb == "oracle":
        s = oracle_series(g, order=args.order, limit=limit)
        lines, payload = _series_block(args, s)
        if args.dump_gb:
            order = make_order(g, args.order)
            gb = binomial_edge_groebner(g, order)
            dump = [f.render(order, g.n) for f in gb]
            lines.append("groebner basis:")
            lines.extend(dump)
            payload["groebner_basis"] = dump
        _emit(args, "\n".join(lines), payload)
        return EXIT_OK

    if args.verb == "verify":
        report = verify(g, order=args.order, limit=limit)
        status = "OK (formula == oracle)" if report.ok else "MISMATCH"
        data = report.formula.hilbert_data()
        lines = [
            status,
            f"formula: {report.formula}",
            f"oracle:  {report.oracle}",
            f"dim: {data.dim} (cut sets: {report.cutset_dim})",
            f"e: {data.multiplicity}",
        ]
        if report.used_fallback:
            lines.append("note: no structural rule covered some piece; oracle fallback used")
        if args.trace:
            lines.append(report.derivation.render())
        _emit(args, "\n".join(lines), report.to_dict())
        return EXIT_OK if report.ok else EXIT_MISMATCH

    raise UsageError(f"unknown verb {args.verb!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return run(args)
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (FamilySyntaxError, GraphError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
