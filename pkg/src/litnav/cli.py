"""Command-line entry points: ``litnav build`` and ``litnav serve``."""

from __future__ import annotations

import argparse
import logging
import sys

from .corpus import BuildConfig
from .errors import LitnavError, PipelineError
from .service import serve
from .snapshot import build_index, save_index


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="litnav",
        description=(
            "Build and serve an exploratory-search index over a scientific "
            "paper corpus: entity collocations, faceted search, and research groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build an index snapshot from a corpus")
    build.add_argument("--corpus", required=True, help="JSONL corpus file")
    build.add_argument("--gazetteer", required=True, help="TSV gazetteer file")
    build.add_argument("--out", required=True, help="output snapshot path")
    build.add_argument("--min-year", type=int, default=2017,
                       help="only papers from this year on enter the co-author graph")
    build.add_argument("--min-collocation", type=int, default=2,
                       help="minimum total collocation count for an entity to stay in the graph")
    build.add_argument("--max-cluster-size", type=int, default=120,
                       help="clusters above this size are re-split")
    build.add_argument("--k-link", type=int, default=3,
                       help="topical neighbors linked per group")
    build.add_argument("--embedding-file", default=None,
                       help="optional precomputed topic embeddings (topic<TAB>v1,...,vD)")

    run = sub.add_parser("serve", help="serve a built index over HTTP")
    run.add_argument("--index", required=True, help="snapshot file from 'litnav build'")
    run.add_argument("--port", type=int, default=8080)
    run.add_argument("--host", default="127.0.0.1")
    return parser


def _cmd_build(args: argparse.Namespace) -> int:
    config = BuildConfig(
        min_year=args.min_year,
        min_collocation=args.min_collocation,
        max_cluster_size=args.max_cluster_size,
        k_link=args.k_link,
        embedding_file=args.embedding_file,
    )
    try:
        snapshot = build_index(args.corpus, args.gazetteer, config)
    except PipelineError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    save_index(snapshot, args.out)
    print(f"indexed {len(snapshot.corpus)} papers")
    print(f"collocation graph: {len(snapshot.collocations.nodes)} entities, "
          f"{len(snapshot.collocations.edges)} edges")
    print(f"co-author giant component: {len(snapshot.coauthors)} authors, "
          f"{len(snapshot.coauthors.edges)} edges")
    print(f"groups: {len(snapshot.clusters.clusters)} "
          f"({len(snapshot.clusters.flagged)} flagged oversized)")
    print(f"wrote {args.out}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        server = serve(args.index, host=args.host, port=args.port)
    except LitnavError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(f"serving {args.index} on http://{args.host}:{server.port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = _build_parser().parse_args(argv)
    if args.command == "build":
        return _cmd_build(args)
    return _cmd_serve(args)


if __name__ == "__main__":
    sys.exit(main())
