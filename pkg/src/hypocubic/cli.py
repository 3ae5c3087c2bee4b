"""Command line entry point: ``hypocubic <subcommand> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Iterator
from pathlib import Path

from hypocubic.codec import (
    PlanarCodeError,
    TextFormatError,
    UnsupportedSize,
    format_text_adjacency,
    read_planar_code,
    read_text_adjacency,
    write_planar_code,
    write_text_adjacency,
)
from hypocubic.embedding import NotSphereEmbedding, PlanarEmbedding
from hypocubic.fixtures import PLANE_FIXTURES, petersen
from hypocubic.graph import Graph, GraphError
from hypocubic.grinberg import grinberg_feasible
from hypocubic.hamilton import UnsupportedGraph, find_hamiltonian
from hypocubic.hypo import classify_hypohamiltonian
from hypocubic.invariants import (
    Unsupported,
    automorphism_order,
    cyclic_connectivity,
    faces,
    girth,
    is_three_connected,
    planar_cyclic_connectivity,
)
from hypocubic.pipeline import HYPO, NONHAM, CrossCheckError, PipelineConfig, emit_table_row, process_stream

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", nargs="+", type=Path, required=True, metavar="PATH")
    p.add_argument("--format", choices=["planar_code", "text"], default="planar_code")
    p.add_argument("--no-header", action="store_true", help="planar_code input has no >>planar_code<< header")
    p.add_argument("--skip-bad", action="store_true", help="warn about and drop invalid records")


def _graphs(args) -> Iterator[tuple[int, Graph, PlanarEmbedding | None]]:
    ordinal = 0
    for path in args.input:
        if args.format == "planar_code":
            with open(path, "rb") as fh:
                for e in read_planar_code(fh, header=not args.no_header, skip_bad=args.skip_bad):
                    yield ordinal, e.graph, e
                    ordinal += 1
        else:
            with open(path, encoding="utf-8") as fh:
                for g in read_text_adjacency(fh):
                    try:
                        e = PlanarEmbedding(g)
                    except NotSphereEmbedding:
                        e = None
                    yield ordinal, g, e
                    ordinal += 1


def _pipeline_config(args) -> PipelineConfig:
    return PipelineConfig(
        inputs=list(args.input),
        format=args.format,
        header=not args.no_header,
        jobs=args.jobs,
        survivors=args.survivors,
        emit=frozenset(args.emit_class or [NONHAM]),
        verify_rate=args.verify_rate,
        grinberg=args.grinberg,
        skip_bad=args.skip_bad,
        orders=tuple(args.orders or ()),
    )


def cmd_filter(args) -> int:
    counters = process_stream(_pipeline_config(args))
    for n in sorted(counters.rows):
        r = counters.rows[n]
        if args.table:
            print(emit_table_row(counters, n))
        else:
            print(
                f"n={n} total={r.total} C4={r.c4} N4={r.n4} C5={r.c5} N5={r.n5} H={r.h} "
                f"rejected={r.rejected} cross_checked={r.cross_checked}"
                + (f" grinberg_certified={r.grinberg_certified}" if args.grinberg else "")
            )
    if counters.skipped:
        print(f"skipped={counters.skipped}")
    return EXIT_OK


def cmd_table(args) -> int:
    args.table = True
    return cmd_filter(args)


def cmd_ham(args) -> int:
    for ordinal, g, _ in _graphs(args):
        r = find_hamiltonian(g)
        line = f"{ordinal} {g.vertex_count} {r}"
        if args.nodes:
            line += f" nodes={r.nodes_searched}"
        if args.certificate and r.cycle is not None:
            line += " cycle=" + ",".join(map(str, r.cycle))
        print(line)
    return EXIT_OK


def cmd_hypo(args) -> int:
    dump = open(args.certificates, "w", encoding="utf-8") if args.certificates else None
    try:
        for ordinal, g, _ in _graphs(args):
            r = classify_hypohamiltonian(g)
            print(f"{ordinal} {g.vertex_count} {r}")
            if dump and r.is_hypohamiltonian:
                dump.write(format_text_adjacency(g))
                for v, cycle in enumerate(r.certificates):
                    dump.write(f"# avoiding {v}: {' '.join(map(str, cycle))}\n")
                dump.write("\n")
    finally:
        if dump:
            dump.close()
    return EXIT_OK


def cmd_invariants(args) -> int:
    for ordinal, g, e in _graphs(args):
        parts = [str(ordinal), f"n={g.vertex_count}", f"girth={girth(g)}"]
        if e is not None:
            fv = faces(e)
            parts.append(f"faces={str(fv).replace(' ', '.')}")
        if g.is_cubic():
            cc = planar_cyclic_connectivity(e) if e is not None else cyclic_connectivity(g)
            parts.append(f"cyclic={cc}")
        if e is not None and is_three_connected(g):
            parts.append(f"aut={automorphism_order(e)}")
        if args.grinberg and e is not None:
            parts.append(f"grinberg={'feasible' if grinberg_feasible(fv) else 'nonham'}")
        print(" ".join(parts))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    for name, make in PLANE_FIXTURES.items():
        e = make()
        with open(out / f"{name}.pc", "wb") as fh:
            write_planar_code([e], fh)
        with open(out / f"{name}.txt", "w", encoding="utf-8") as fh:
            write_text_adjacency([e], fh)
    with open(out / "petersen.txt", "w", encoding="utf-8") as fh:
        write_text_adjacency([petersen()], fh)
    print(f"wrote fixtures to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypocubic", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
        ("filter", cmd_filter, "full census pipeline"),
        ("table", cmd_table, "census pipeline, printing table rows only"),
    ):
        p = sub.add_parser(name, help=helptext)
        _input_args(p)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--survivors", type=Path)
        p.add_argument("--emit-class", action="append", choices=[NONHAM, HYPO])
        p.add_argument("--grinberg", action="store_true")
        p.add_argument("--verify-rate", type=float, default=0.0)
        p.add_argument("--table", action="store_true")
        p.add_argument("--orders", type=int, nargs="+", help="report these orders even if no graph has them")
        p.set_defaults(func=func)

    p = sub.add_parser("ham", help="decide hamiltonicity of each graph")
    _input_args(p)
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--nodes", action="store_true")
    p.set_defaults(func=cmd_ham)

    p = sub.add_parser("hypo", help="classify hypohamiltonicity of each graph")
    _input_args(p)
    p.add_argument("--certificates", type=Path, help="write hypohamiltonian certificates (text format)")
    p.set_defaults(func=cmd_hypo)

    p = sub.add_parser("invariants", help="girth, faces, cyclic connectivity, automorphisms")
    _input_args(p)
    p.add_argument("--grinberg", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("fixtures", help="write built-in test graphs in both formats")
    p.add_argument("--out", type=Path, default=Path("fixtures"))
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (UnsupportedGraph, Unsupported, UnsupportedSize) as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (PlanarCodeError, TextFormatError, GraphError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
