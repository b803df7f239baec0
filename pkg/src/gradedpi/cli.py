"""Command-line front end.

Exit codes: 0 success (or verdict true), 1 verdict false, 2 usage error,
3 resource cap exceeded. Integers that can exceed 64 bits are emitted as
decimal strings in JSON; output shapes are documented in ``gradedpi.schemas``.

Caps may be overridden by environment variables ``GRADEDPI_ENUM_BUDGET``,
``GRADEDPI_ORACLE_VAR_CAP``, ``GRADEDPI_DEGREE_CAP``, ``GRADEDPI_MAX_ORDER``
and ``GRADEDPI_WORKERS``, or by a JSON config file (``--config``) using the
same keys as the long flags (``enum_budget``, ``oracle_var_cap``, ...).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import codimension as cod
from .asymptotics import ratio_report
from .errors import GroupAxiomError, ParseError, ResourceCapError
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, parse_group_spec
from .identities import (
    DEFAULT_ORACLE_VAR_CAP,
    ElementaryGrading,
    elementary_monomial_identity,
    evaluate_symbolic,
    is_identity_classes,
    verify_amitsur_levitsky,
)
from .monomials import build_graph, equivalent, export_dot, parse_monomial, parse_polynomial
from .paths import DEFAULT_DEGREE_CAP, ipp_permutations, swan_check

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FORMATS = ("json", "csv", "dot", "text")

_ENV = {
    "enum_budget": "GRADEDPI_ENUM_BUDGET",
    "oracle_var_cap": "GRADEDPI_ORACLE_VAR_CAP",
    "degree_cap": "GRADEDPI_DEGREE_CAP",
    "max_order": "GRADEDPI_MAX_ORDER",
    "workers": "GRADEDPI_WORKERS",
}


@dataclass
class RunConfig:
    group: str = "C2"
    enum_budget: int = cod.DEFAULT_ENUM_BUDGET
    oracle_var_cap: int = DEFAULT_ORACLE_VAR_CAP
    degree_cap: int = DEFAULT_DEGREE_CAP
    max_order: int = DEFAULT_MAX_ORDER
    format: str = "json"
    cache: str | None = None
    workers: int = 1

    def __post_init__(self):
        for name in ("enum_budget", "oracle_var_cap", "degree_cap", "max_order", "workers"):
            if int(getattr(self, name)) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")


def build_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if getattr(args, "config", None):
        values.update(json.loads(Path(args.config).read_text()))
    for key, env in _ENV.items():
        if env in os.environ:
            values[key] = int(os.environ[env])
    for key in ("group", "enum_budget", "oracle_var_cap", "degree_cap", "max_order", "format", "cache", "workers"):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    known = RunConfig.__dataclass_fields__
    unknown = set(values) - set(known)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return RunConfig(**values)


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _group(cfg: RunConfig) -> FiniteGroup:
    return parse_group_spec(cfg.group, max_order=cfg.max_order)


def _element_list(G: FiniteGroup, text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [G.index_of(tok) for tok in text.split(",")]


# -- subcommand handlers -------------------------------------------------

def cmd_group_show(args, cfg, out) -> int:
    G = _group(cfg)
    if cfg.format == "text":
        from .groups import format_cayley_table

        out.write(format_cayley_table(G))
        return EXIT_OK
    _emit(
        {
            "label": G.label,
            "order": G.order,
            "cayley": [list(r) for r in G.cayley],
            "names": {str(i): names for i, names in G.names.items()},
        },
        out,
    )
    return EXIT_OK


def cmd_graph(args, cfg, out) -> int:
    G = _group(cfg)
    m = parse_monomial(args.monomial, G)
    g = build_graph(m)
    if args.action == "dot" or cfg.format == "dot":
        text = export_dot(g)
        if args.out:
            Path(args.out).write_text(text)
        else:
            out.write(text)
        return EXIT_OK
    _emit(
        {
            "monomial": m.render(),
            "vertices": [G.name_of(i) for i in range(1, G.order + 1)],
            "edges": [
                {"label": lab, "src": G.name_of(s), "dst": G.name_of(d), "weight": G.name_of(g.weight(lab))}
                for lab, (s, d) in g.edges.items()
            ],
        },
        out,
    )
    return EXIT_OK


def cmd_equiv(args, cfg, out) -> int:
    G = _group(cfg)
    a = parse_monomial(args.m1, G)
    b = parse_monomial(args.m2, G)
    verdict = equivalent(a, b)
    _emit({"equivalent": verdict}, out)
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_ipp(args, cfg, out) -> int:
    G = _group(cfg)
    m = parse_monomial(args.monomial, G)
    rep = ipp_permutations(m, degree_cap=cfg.degree_cap, list_cap=args.list_cap if args.list else 0)
    obj = {"monomial": m.render(), "total": rep.total, "even": rep.even, "odd": rep.odd}
    if args.list:
        obj["permutations"] = [list(p.images) for p in rep.permutations]
        obj["truncated"] = rep.truncated
    _emit(obj, out)
    return EXIT_OK


def cmd_swan(args, cfg, out) -> int:
    G = _group(cfg)
    mode = "sample" if args.samples else "exhaustive"
    rep = swan_check(
        G, args.n, mode=mode, sample_size=args.samples or 0, seed=args.seed,
        keep_rows=bool(args.csv), degree_cap=cfg.degree_cap, workers=cfg.workers,
    )
    _emit(
        {
            "group": rep.group, "k": rep.k, "n": rep.n, "mode": rep.mode,
            "words": rep.words, "asserted": rep.asserted,
            "violations": [list(v.word) for v in rep.violations],
        },
        out,
    )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["word", "total", "even", "odd"])
            for row in rep.rows:
                w.writerow([" ".join(G.name_of(i) for i in row.word), row.total, row.even, row.odd])
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_identity(args, cfg, out) -> int:
    G = _group(cfg)
    f = parse_polynomial(args.poly, G)
    obj: dict = {}
    verdicts = []
    if args.method in ("classes", "both"):
        rep = is_identity_classes(f)
        obj.update(rep.to_dict())
        verdicts.append(rep.identity)
    if args.method in ("oracle", "both"):
        M = evaluate_symbolic(f, var_cap=cfg.oracle_var_cap)
        nz = M.nonzero_entries()
        obj["oracle_nonzero_entries"] = [list(e) for e in nz]
        verdicts.append(not nz)
        obj.setdefault("verdict", not nz)
        obj.setdefault("classes", [])
    if len(set(verdicts)) > 1:
        obj["methods_disagree"] = True
    obj["verdict"] = all(verdicts)
    _emit(obj, out)
    return EXIT_OK if obj["verdict"] else EXIT_FALSE


def cmd_al_verify(args, cfg, out) -> int:
    G = _group(cfg)
    mode = "sample" if args.samples else "exhaustive"
    rep = verify_amitsur_levitsky(
        G, args.n, mode=mode, samples=args.samples or 0, method=args.method,
        seed=args.seed, var_cap=cfg.oracle_var_cap,
    )
    _emit(
        {
            "group": rep.group, "k": rep.k, "n": rep.n, "mode": rep.mode, "method": rep.method,
            "words": rep.words, "expected_identity": rep.expected_identity,
            "all_identity": rep.all_identity,
            "non_identity_words": [[G.name_of(i) for i in w] for w in rep.non_identity_words[:50]],
            "disagreements": len(rep.disagreements),
        },
        out,
    )
    return EXIT_OK if rep.all_identity and not rep.disagreements else EXIT_FALSE


def cmd_elem_identity(args, cfg, out) -> int:
    G = _group(cfg)
    E = ElementaryGrading(G, tuple(_element_list(G, args.tuple)))
    weights = _element_list(G, args.weights)
    v = elementary_monomial_identity(E, weights)
    obj = {
        "identity": v.identity,
        "chain": [[G.name_of(i) for i in sorted(s)] for s in v.chain],
    }
    if v.identity:
        obj.update(
            witness=list(v.witness),
            reduced=v.reduced.render(),
            s=v.s.render(),
            t=v.t.render(),
        )
    _emit(obj, out)
    return EXIT_OK if v.identity else EXIT_FALSE


def _codim_value(k: int, n: int, method: str, cfg: RunConfig, G: FiniteGroup | None) -> int:
    if method == "enum":
        return cod.m_enum(k, n, G=G, budget=cfg.enum_budget)
    if method == "closed":
        if k != 2:
            raise ValueError("closed form is available for k = 2 only")
        return cod.c2_closed(n)
    return cod.m_formula(k, n)


def cmd_codim(args, cfg, out) -> int:
    if args.action == "table":
        return cmd_codim_table(args, cfg, out)
    if args.k is None or args.n is None:
        raise ValueError("codim needs --k and --n")
    G = parse_group_spec(args.group, cfg.max_order) if args.group else None
    if G is not None and G.order != args.k:
        raise ValueError(f"group {G.label} has order {G.order}, not k={args.k}")
    value = _codim_value(args.k, args.n, args.method, cfg, G)
    _emit({"k": args.k, "n": args.n, "value": str(value)}, out)
    return EXIT_OK


def cmd_codim_table(args, cfg, out) -> int:
    if args.k is None or args.n_max is None:
        raise ValueError("codim table needs --k and --n-max")
    k = args.k
    table = cod.CountTable.load(cfg.cache) if cfg.cache and Path(cfg.cache).exists() else cod.CountTable()
    table.fill(k, args.n_max, enum=args.enum, budget=cfg.enum_budget)
    if cfg.cache:
        table.save(cfg.cache)
    cols = ["n", "m", "p", "gamma", "sd", "sc"] + (["c2closed", "c2dv"] if k == 2 else [])
    rows = [[n] + [table.get(q, k, n) for q in cols[1:]] for n in range(args.n_max + 1)]
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k"] + cols)
        for r in rows:
            w.writerow([k] + r)
        out.write(buf.getvalue())
    else:
        _emit({"k": k, "rows": [{c: (v if c == "n" else str(v)) for c, v in zip(cols, r)} for r in rows]}, out)
    if args.plot:
        from .plotting import plot_counts

        plot_counts(k, [(r[0], r[1]) for r in rows], args.plot)
    return EXIT_OK


def cmd_asym(args, cfg, out) -> int:
    ns = [int(tok) for tok in args.n.split(",") if tok.strip()]
    rep = ratio_report(args.k, ns)
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "n", "exact", "log_exact", "log_asymptotic", "deviation"])
        for r in rep.to_dict()["rows"]:
            w.writerow([args.k, r["n"], r["exact"], r["log_exact"], r["log_asymptotic"], r["deviation"]])
        out.write(buf.getvalue())
    else:
        _emit(rep.to_dict(), out)
    if args.plot:
        from .plotting import plot_deviation

        plot_deviation(rep, args.plot)
    return EXIT_OK


def cmd_selfcheck(args, cfg, out) -> int:
    from .selfcheck import run_selfcheck

    results = run_selfcheck()
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else "") + "\n")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FALSE


# -- parser -----------------------------------------------------------------

def _common(p: argparse.ArgumentParser, group: bool = True) -> None:
    if group:
        p.add_argument("--group", help="group spec: C<k>, D<m>, S<m>, AxB, table:<path>")
    p.add_argument("--format", choices=FORMATS, help="output format")
    p.add_argument("--config", help="JSON file with default settings")
    p.add_argument("--enum-budget", dest="enum_budget", type=int)
    p.add_argument("--oracle-var-cap", dest="oracle_var_cap", type=int)
    p.add_argument("--degree-cap", dest="degree_cap", type=int)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.add_argument("--workers", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedpi",
        description="Graded identities and graded codimensions of matrix algebras "
        "with crossed-product gradings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="inspect a group")
    p.add_argument("action", choices=["show"])
    _common(p)
    p.set_defaults(func=cmd_group_show)

    p = sub.add_parser("graph", help="build the graph of a monomial")
    p.add_argument("action", choices=["build", "dot"])
    p.add_argument("--monomial", required=True, help='e.g. "x[1,s] x[2,e]"')
    p.add_argument("--out", help="write DOT text here instead of stdout")
    _common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("equiv", help="are two monomials equivalent?")
    p.add_argument("--m1", required=True)
    p.add_argument("--m2", required=True)
    _common(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("ipp", help="count initial-product-preserving permutations")
    p.add_argument("--monomial", required=True)
    p.add_argument("--list", action="store_true", help="include the permutations")
    p.add_argument("--list-cap", dest="list_cap", type=int, default=1000)
    _common(p)
    p.set_defaults(func=cmd_ipp)

    p = sub.add_parser("swan", help="parity balance of IPP permutations over weight words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true", help="all |G|^n words (default)")
    p.add_argument("--samples", type=int, help="check this many random words instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="write per-word rows (word,total,even,odd) here")
    _common(p)
    p.set_defaults(func=cmd_swan)

    p = sub.add_parser("identity", help="decide whether a polynomial is a graded identity")
    p.add_argument("action", choices=["check"])
    p.add_argument("--poly", required=True)
    p.add_argument("--method", choices=["classes", "oracle", "both"], default="classes")
    _common(p)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("al-verify", help="standard polynomial s_n over all weight words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["classes", "oracle", "both"], default="classes")
    _common(p)
    p.set_defaults(func=cmd_al_verify)

    p = sub.add_parser("elem-identity", help="monomial identity test for an elementary grading")
    p.add_argument("--tuple", required=True, help="comma-separated distinct elements, e.g. e,s")
    p.add_argument("--weights", required=True, help="comma-separated weights, e.g. s,s")
    _common(p)
    p.set_defaults(func=cmd_elem_identity)

    p = sub.add_parser("codim", help="graded codimension c_k(n), or a table with 'codim table'")
    p.add_argument("action", nargs="?", choices=["table"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--method", choices=["enum", "formula", "closed"], default="formula")
    p.add_argument("--enum", action="store_true", help="table: also fill enumeration entries")
    p.add_argument("--cache", help="table cache file (quantity,k,n,value lines)")
    p.add_argument("--plot", help="table: write a figure of log10 c_k(n) here")
    _common(p)
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("asym", help="exact vs asymptotic codimension")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", required=True, help="comma-separated list, e.g. 100,400")
    p.add_argument("--plot", help="write a deviation figure here")
    _common(p, group=False)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("selfcheck", help="run the cross-method invariant suite at small scale")
    _common(p, group=False)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def dispatch(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        cfg = build_config(args)
        return args.func(args, cfg, out)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, GroupAxiomError, ValueError, KeyError, FileNotFoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(dispatch())


if __name__ == "__main__":
    main()
