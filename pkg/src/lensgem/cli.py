"""
Command-line front end.

    lensgem build P Q [--out FILE]
    lensgem invariants FILE [--format json|text]
    lensgem gm FILE [--witness] [--format json|text]
    lensgem verify --pmax P [--jobs N] [--format csv|json|text]
    lensgem catalogue --max-order K --out DIR [--jobs N]
    lensgem code FILE

Exit status: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .catalogue import CSV_HEADER, enumerate_crystallizations, survey_lens_range, write_catalogue
from .code import canonical_code
from .gm import gm_complexity
from .graph import PAIRS, GraphError, classify, parse_gem, regular_genus, represents_closed_3manifold
from .homology import first_homology
from .lens import LensError, ferri_crystallization

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    input: Path | None = None
    output: Path | None = None
    p: int | None = None
    q: int | None = None
    p_max: int | None = None
    max_order: int | None = None
    jobs: int = 1
    format: str = "text"
    witness: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lensgem", description="Crystallizations of lens spaces and their GM-complexity.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="write the labelled crystallization of L(p,q)")
    b.add_argument("p", type=int)
    b.add_argument("q", type=int)
    b.add_argument("--out", type=Path)

    i = sub.add_parser("invariants", help="order, residues, flags, regular genus and H1 of a gem file")
    i.add_argument("input", type=Path)
    i.add_argument("--format", choices=("json", "text"), default="text")

    g = sub.add_parser("gm", help="GM-complexity of a crystallization")
    g.add_argument("input", type=Path)
    g.add_argument("--witness", action="store_true")
    g.add_argument("--format", choices=("json", "text"), default="text")
    g.add_argument("--jobs", type=int, default=1)

    v = sub.add_parser("verify", help="survey all normalized L(p,q) with p <= pmax")
    v.add_argument("--pmax", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    c = sub.add_parser("catalogue", help="enumerate bipartite crystallizations up to an order")
    c.add_argument("--max-order", type=int, default=12)
    c.add_argument("--out", type=Path, required=True)
    c.add_argument("--jobs", type=int, default=1)

    k = sub.add_parser("code", help="canonical code of a gem file")
    k.add_argument("input", type=Path)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    cfg.input = getattr(ns, "input", None)
    cfg.output = getattr(ns, "out", None)
    cfg.p, cfg.q = getattr(ns, "p", None), getattr(ns, "q", None)
    cfg.p_max = getattr(ns, "pmax", None)
    cfg.max_order = getattr(ns, "max_order", None)
    cfg.jobs = getattr(ns, "jobs", 1)
    cfg.format = getattr(ns, "format", "text")
    cfg.witness = getattr(ns, "witness", False)
    if cfg.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    return cfg


def _labelled(labels, vertices):
    if not labels:
        return sorted(vertices)
    return [f"v{labels[v][0]},{labels[v][1]}" for v in sorted(vertices)]


def invariants_report(graph) -> dict:
    flags = classify(graph)
    manifold = flags.connected and represents_closed_3manifold(graph)
    report = {
        "order": graph.n,
        "bipartite": flags.bipartite,
        "contracted": flags.contracted,
        "manifold": manifold,
        "g": {f"{i}{j}": graph.g(i, j) for i, j in PAIRS},
        "regular_genus": regular_genus(graph) if flags.connected else None,
        "h1": None,
    }
    if flags.bipartite and flags.contracted and manifold:
        report["h1"] = str(first_homology(graph))
    return report


def _emit(obj: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        for key, value in obj.items():
            out.write(f"{key}: {value}\n")


def dispatch(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.command == "build":
        lc = ferri_crystallization(cfg.p, cfg.q)
        text = lc.to_text()
        if cfg.output:
            cfg.output.write_text(text)
            print(f"wrote {cfg.output}: L({lc.params.p},{lc.params.q}), {lc.graph.n} vertices", file=sys.stderr)
        else:
            out.write(text)
        return EXIT_OK

    if cfg.command == "invariants":
        graph, _ = parse_gem(cfg.input.read_text())
        _emit(invariants_report(graph), cfg.format, out)
        return EXIT_OK

    if cfg.command == "gm":
        graph, labels = parse_gem(cfg.input.read_text())
        result = gm_complexity(graph, jobs=cfg.jobs)
        report = {"gm": result.value}
        if cfg.witness:
            w = result.witness.report()
            w["leftover_labels"] = _labelled(labels, result.witness.leftover) if labels else None
            report["gm_witness"] = w
        _emit(report, cfg.format, out)
        return EXIT_OK

    if cfg.command == "verify":
        rows = survey_lens_range(cfg.p_max, jobs=cfg.jobs)
        failed = [r for r in rows if r.failed]
        if cfg.format == "csv":
            out.write(CSV_HEADER + "\n")
            for r in rows:
                out.write(r.csv() + "\n")
        elif cfg.format == "json":
            out.write(json.dumps([r.__dict__ for r in rows], sort_keys=True) + "\n")
        else:
            out.write(f"{len(rows)} rows, {len(failed)} failures\n")
        for r in failed:
            print(f"FAILED L({r.p},{r.q}): {r.csv()}", file=sys.stderr)
        return EXIT_FAIL if failed else EXIT_OK

    if cfg.command == "catalogue":
        entries = enumerate_crystallizations(cfg.max_order, jobs=cfg.jobs)
        write_catalogue(entries, cfg.output)
        print(f"wrote {len(entries)} entries to {cfg.output}", file=sys.stderr)
        return EXIT_OK

    if cfg.command == "code":
        graph, _ = parse_gem(cfg.input.read_text())
        out.write(canonical_code(graph).text + "\n")
        return EXIT_OK

    raise ValueError(f"unknown command {cfg.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return dispatch(_config(ns))
    except (GraphError, LensError, ValueError, OSError) as exc:
        print(f"lensgem: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
