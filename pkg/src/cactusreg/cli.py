"""cactusreg command line.

Exit status: 0 success, 2 bad input, 3 oracle cap exceeded, 4 a bound
violation or a failed repro row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .bounds import CSV_COLUMNS, find_peripheral_cycle, invariant_report
from .cm_cactus import (
    chain_graph,
    chain_structure,
    exact_reg_theorem44,
    is_cm_cactus_indecomposable,
    lemma41_family,
    lemma41_reg,
    lemma42_family,
    lemma42_reg,
    recognize_lemma41,
    recognize_lemma42,
    theorem44_check,
    theorem44_members,
)
from .edgelist import format_edgelist, read_edgelist
from .errors import CapExceeded, CactusRegError, GraphError, NoBigCycle, NotAChain
from .generators import enumerate_chains, random_graphs
from .oracle.dispatch import regularity
from .oracle.hochster import DEFAULT_VERTEX_CAP, HARD_VERTEX_CEILING
from .oracle.koszul import KOSZUL_VERTEX_CAP, koszul_betti
from .oracle.linalg import field_name, parse_field
from .specs import SPEC_HELP, build
from .verify import RECORD_COLUMNS, repro_rows, verify_many

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_VIOLATION = 0, 2, 3, 4


# --- input / output ----------------------------------------------------------

def load_graph(args):
    """(name, graph) from --input, --spec or the positional spec."""
    spec = args.spec or getattr(args, "graph", None)
    if args.input and spec:
        raise GraphError("give either --input or a spec, not both")
    if args.input:
        return args.input, read_edgelist(args.input)
    if spec:
        return spec, build(spec)
    raise GraphError("no graph given; use --input FILE or --spec SPEC")


def emit(args, payload: dict, text: str, csv_header=None, csv_rows=()):
    if args.format == "json":
        out = json.dumps(payload, indent=2)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if csv_header:
            w.writerow(csv_header)
        w.writerows(csv_rows)
        out = buf.getvalue().rstrip("\n")
    else:
        out = text
    print(out)


def _cap(args) -> int:
    if args.stretch:
        return HARD_VERTEX_CEILING
    return args.cap


# --- commands ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    name, G = load_graph(args)
    rep = invariant_report(G)
    payload = {"graph": name, "report": rep.to_dict(), "classes": {}}
    classes = payload["classes"]
    try:
        classes["chain"] = chain_structure(G).to_dict()
    except NotAChain:
        classes["chain"] = None
    t44 = theorem44_check(G)
    classes["theorem44"] = {"holds": t44.holds, "violated": t44.violated}
    if t44.holds:
        classes["theorem44"]["regularity"] = exact_reg_theorem44(G)
    classes["lemma41"] = recognize_lemma41(G)
    classes["lemma42"] = recognize_lemma42(G)
    if rep.is_cactus:
        cm = is_cm_cactus_indecomposable(G)
        classes["cm_cactus_indecomposable"] = {"holds": cm.holds, "violated": cm.violated}
    try:
        pc = find_peripheral_cycle(G)
        payload["peripheral_cycle"] = {"cycle": list(pc.cycle), "run": list(pc.run)}
    except NoBigCycle:
        payload["peripheral_cycle"] = None

    lines = [f"graph: {name}"]
    lines += [f"  {k}: {v}" for k, v in rep.to_dict().items()]
    for k, v in classes.items():
        lines.append(f"  {k}: {v}")
    lines.append(f"  peripheral_cycle: {payload['peripheral_cycle']}")
    emit(args, payload, "\n".join(lines), ("graph",) + CSV_COLUMNS, [[name] + rep.csv_row()])
    return EXIT_OK


def cmd_reg(args) -> int:
    name, G = load_graph(args)
    res = regularity(G, args.field, _cap(args), args.workers, use_formulas=not args.oracle_only)
    payload = {"graph": name, "field": field_name(args.field), **res.to_dict()}
    lines = [f"{name}: reg = {res.value} ({res.method}: {', '.join(res.methods)})"]
    if args.betti:
        if G.n > KOSZUL_VERTEX_CAP:
            raise CapExceeded(G.n, KOSZUL_VERTEX_CAP, "Koszul oracle")
        table = koszul_betti(G, args.field)
        payload["betti"] = json.loads(table.to_json())
        lines.append(str(table))
    rows = [[name, res.value, res.method, ";".join(res.methods)]]
    emit(args, payload, "\n".join(lines), ("graph", "regularity", "method", "pieces"), rows)
    return EXIT_OK


def _verify_stream(args):
    if args.gen == "chain-enum":
        return enumerate_chains(args.alphabet.split(","), args.max_length, args.max_vertices)
    if args.gen:
        lo, _, hi = args.blocks.partition(",")
        blocks = (int(lo), int(hi or lo))
        return random_graphs(args.gen, args.count, args.seed, args.dist, blocks, args.max_vertices)
    return [load_graph(args)]


def cmd_verify(args) -> int:
    kw = dict(field=args.field, vertex_cap=_cap(args), workers=args.workers)
    summary = verify_many(_verify_stream(args), **kw)
    bad = summary.violations
    lines = []
    for r in summary.records:
        flag = "ok" if r.ok else "VIOLATION"
        eq = " equality" if r.equality else ""
        cls = f" [{r.formula_class}={r.formula_value}]" if r.formula_class else ""
        lines.append(f"{flag:9} {r.graph}: reg {r.regularity} <= bound {r.report.paper_bound}"
                     f" <= c {r.report.smk_bound}{eq}{cls}")
    lines.append(f"{len(summary.records)} graphs, {len(bad)} violations, "
                 f"{summary.equalities} equalities "
                 f"({len(summary.unexplained_equalities)} outside recognized classes)")
    header = RECORD_COLUMNS + (("seconds",) if args.timings else ())
    emit(args, summary.to_dict(args.timings), "\n".join(lines), header,
         [r.csv_row(args.timings) for r in summary.records])
    for r in bad:
        print(f"VIOLATION: {r.graph} reg={r.regularity} report={r.report.to_dict()}"
              f" formula={r.formula_class}:{r.formula_value}", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "chain-enum":
        stream = enumerate_chains(args.alphabet.split(","), args.max_length, args.max_vertices,
                                  dedup=not args.no_dedup)
    else:
        lo, _, hi = args.blocks.partition(",")
        stream = random_graphs(args.kind, args.count, args.seed, args.dist,
                               (int(lo), int(hi or lo)), args.max_vertices)
    graphs = list(stream)
    payload = {"graphs": [{"id": gid, "n": G.n, "edges": [list(e) for e in G.sorted_edges()]}
                          for gid, G in graphs]}
    text = "\n".join(f"# {gid}\n{format_edgelist(G)}" for gid, G in graphs)
    rows = [[gid, G.n, " ".join(f"{u}-{v}" for u, v in G.sorted_edges())] for gid, G in graphs]
    emit(args, payload, text, ("id", "n", "edges"), rows)
    return EXIT_OK


def cmd_repro(args) -> int:
    rows = repro_rows(args.field, args.stretch, args.workers)
    failed = [r for r in rows if not r.passed]
    payload = {"field": field_name(args.field), "stretch": args.stretch,
               "rows": [r.to_dict(args.timings) for r in rows],
               "status": "FAIL" if failed else "PASS"}
    lines = [f"{'graph':24} {'quantity':12} {'expected':>8} {'got':>5}  status"]
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.label:24} {r.quantity:12} {r.expected:>8} {r.got:>5}  {status}")
    if not args.stretch:
        lines.append("(G1 regularity skipped; rerun with --stretch)")
    header = ("label", "quantity", "expected", "got", "status")
    emit(args, payload, "\n".join(lines), header,
         [[r.label, r.quantity, r.expected, r.got, "PASS" if r.passed else "FAIL"] for r in rows])
    return EXIT_VIOLATION if failed else EXIT_OK


def _family_member(args) -> int:
    if args.family == "theorem44" or len(args.params) != 3:
        raise GraphError("give exactly k m1 m2 for lemma41 / lemma42")
    build_fn, reg_fn = {"lemma41": (lemma41_family, lemma41_reg),
                        "lemma42": (lemma42_family, lemma42_reg)}[args.family]
    G, value = build_fn(*args.params), reg_fn(*args.params)
    name = f"{args.family}:{','.join(map(str, args.params))}"
    payload = {"graph": name, "n": G.n, "edges": [list(e) for e in G.sorted_edges()],
               "formula": value}
    text = f"# {name} formula reg {value}\n{format_edgelist(G)}".rstrip("\n")
    rows = [[name, G.n, " ".join(f"{u}-{v}" for u, v in G.sorted_edges()), value]]
    emit(args, payload, text, ("graph", "n", "edges", "formula"), rows)
    return EXIT_OK


def cmd_family(args) -> int:
    """One member as an edge list (``family lemma41 4 3 2``), or every
    member up to --max-vertices with its closed-form regularity."""
    if args.params:
        return _family_member(args)
    entries = []
    if args.family == "theorem44":
        for spec in theorem44_members(args.max_vertices):
            G = chain_graph(spec)
            entries.append((f"chain:{spec}", G, exact_reg_theorem44(G)))
    else:
        build_fn, reg_fn, m1_min, over = {
            "lemma41": (lemma41_family, lemma41_reg, 3, 3),
            "lemma42": (lemma42_family, lemma42_reg, 2, 2),
        }[args.family]
        k_min = 3 if args.family == "lemma41" else 4
        for k in range(k_min, args.max_vertices + 1):
            for m1 in range(m1_min, args.max_vertices + 1):
                for m2 in range(2, args.max_vertices + 1):
                    if args.family == "lemma42" and m2 < m1:
                        continue
                    if k + m1 + m2 - over > args.max_vertices:
                        continue
                    entries.append((f"{args.family}:{k},{m1},{m2}",
                                    build_fn(k, m1, m2), reg_fn(k, m1, m2)))
    items, failed = [], 0
    for name, G, value in entries:
        item = {"graph": name, "n": G.n, "formula": value}
        if args.check:
            got = regularity(G, args.field, _cap(args), args.workers, use_formulas=False).value
            item["oracle"] = got
            failed += got != value
        items.append(item)
    lines = [" ".join(f"{k}={v}" for k, v in it.items()) for it in items]
    header = ("graph", "n", "formula") + (("oracle",) if args.check else ())
    emit(args, {"family": args.family, "members": items}, "\n".join(lines), header,
         [list(it.values()) for it in items])
    return EXIT_VIOLATION if failed else EXIT_OK


# --- parser ------------------------------------------------------------------

def _field(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file")
    common.add_argument("--spec", help="builder spec, e.g. cycle:5 or paper:G1")
    common.add_argument("--seed", type=int, default=1, help="RNG seed (default 1)")
    common.add_argument("--field", type=_field, default=32003,
                        help="2, another prime, or Q (default 32003)")
    common.add_argument("--cap", type=_positive, default=DEFAULT_VERTEX_CAP,
                        help=f"oracle vertex cap (default {DEFAULT_VERTEX_CAP}, "
                             f"at most {HARD_VERTEX_CEILING})")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--stretch", action="store_true",
                        help=f"raise the oracle cap to {HARD_VERTEX_CEILING} (needed for G1)")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock seconds (makes output nondeterministic)")

    gen_opts = argparse.ArgumentParser(add_help=False)
    gen_opts.add_argument("--count", type=int, default=10)
    gen_opts.add_argument("--blocks", default="1,4", help="block count range lo,hi")
    gen_opts.add_argument("--dist", default="K2:1,K3:1,C4:1,C5:1",
                          help="weighted blocks, e.g. K2:1,C4:2")
    gen_opts.add_argument("--max-vertices", type=_positive, default=8)
    gen_opts.add_argument("--alphabet", default="K2,K3,C4", help="chain-enum blocks")
    gen_opts.add_argument("--max-length", type=_positive, default=4, help="chain-enum length")

    p = argparse.ArgumentParser(
        prog="cactusreg",
        description="Regularity of binomial edge ideals of cycle-clique graphs.",
        epilog="builder specs:\n" + SPEC_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="invariants, bounds and class tags")
    a.add_argument("graph", nargs="?", help="builder spec")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reg", parents=[common], help="regularity with method provenance")
    r.add_argument("graph", nargs="?", help="builder spec")
    r.add_argument("--oracle-only", action="store_true", help="skip closed formulas")
    r.add_argument("--betti", action="store_true",
                   help=f"print the Koszul Betti table (at most {KOSZUL_VERTEX_CAP} vertices)")
    r.set_defaults(func=cmd_reg)

    v = sub.add_parser("verify", parents=[common, gen_opts], help="oracle vs bounds")
    v.add_argument("graph", nargs="?", help="builder spec (when --gen is not given)")
    v.add_argument("--gen", choices=("random-cactus", "random-cycle-clique", "chain-enum"))
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", parents=[common, gen_opts], help="generate graphs")
    g.add_argument("kind", choices=("random-cactus", "random-cycle-clique", "chain-enum"))
    g.add_argument("--no-dedup", action="store_true", help="keep reversed chains")
    g.set_defaults(func=cmd_gen)

    rp = sub.add_parser("repro", parents=[common], help="recompute the reference table")
    rp.set_defaults(func=cmd_repro)

    f = sub.add_parser("family", parents=[common], help="list a family with its formula")
    f.add_argument("family", choices=("lemma41", "lemma42", "theorem44"))
    f.add_argument("params", nargs="*", type=int, help="k m1 m2 for a single member")
    f.add_argument("--max-vertices", type=_positive, default=7)
    f.add_argument("--check", action="store_true", help="compare with the oracle")
    f.set_defaults(func=cmd_family)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}; pass --cap N (at most {HARD_VERTEX_CEILING}) or --stretch",
              file=sys.stderr)
        return EXIT_CAP
    except (CactusRegError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
