"""End-to-end index construction and the versioned snapshot file.

``build_index`` runs the full pipeline (corpus -> tagging -> collocation
-> facets -> co-author graph -> giant component -> community detection ->
cards -> meta-links -> PageRank) and produces an immutable
:class:`IndexSnapshot`. Snapshots persist as a single canonical-JSON file
with magic string and format version, so identical inputs and
configuration produce byte-identical files and mismatched builds fail
fast on load.
"""

from __future__ import annotations

import json
import os
import tempfile
from contextlib import contextmanager
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .coauthors import CoauthorGraph, build_coauthor_graph, giant_component
from .collocation import CollocationGraph, build_collocation_graph, count_collocations
from .communities import ClusterSet, ego_split, recursive_split
from .corpus import (
    BuildConfig,
    CorpusSnapshot,
    load_corpus,
    record_to_obj,
    _parse_record,
)
from .errors import PipelineError, SnapshotFormatError
from .facets import FacetIndex
from .groups import GroupCard, build_group_cards
from .links import (
    EmbeddingProvider,
    FileEmbeddingProvider,
    MetaGraph,
    TrigramHashEmbedder,
    build_meta_graph,
)
from .search import PageRankConfig, layer_pagerank_tables
from .tagger import load_gazetteer

MAGIC = "litnav-index"
FORMAT_VERSION = 1


@dataclass
class IndexSnapshot:
    """Everything the query API serves, derived from one corpus snapshot."""

    corpus: CorpusSnapshot
    collocations: CollocationGraph
    facet_index: FacetIndex
    coauthors: CoauthorGraph
    clusters: ClusterSet
    cards: tuple[GroupCard, ...]
    meta: MetaGraph
    pagerank: dict[str, dict[int, float]]
    format_version: int = FORMAT_VERSION

    @property
    def build_config(self) -> BuildConfig:
        return self.corpus.build_config

    @cached_property
    def cards_by_id(self) -> dict[int, GroupCard]:
        return {card.group_id: card for card in self.cards}

    def validate(self) -> None:
        """Check referential integrity across sections."""
        known_papers = set(self.corpus.by_id)
        for pair, papers in self.collocations.edge_papers.items():
            if pair[0] not in self.collocations.nodes or pair[1] not in self.collocations.nodes:
                raise SnapshotFormatError(f"collocation edge {pair} references unknown node")
            missing = set(papers) - known_papers
            if missing:
                raise SnapshotFormatError(
                    f"collocation edge {pair} references unknown papers {sorted(missing)[:3]}"
                )
        for (a, b) in self.coauthors.edges:
            if a not in self.coauthors.nodes or b not in self.coauthors.nodes:
                raise SnapshotFormatError(f"co-author edge ({a}, {b}) references unknown node")
        n_clusters = len(self.clusters.clusters)
        for cluster in self.clusters.clusters:
            stray = cluster - self.coauthors.nodes
            if stray:
                raise SnapshotFormatError(f"cluster references unknown authors {sorted(stray)[:3]}")
        if len(self.cards) != n_clusters:
            raise SnapshotFormatError("one card per cluster expected")
        for pair in list(self.meta.topical_edges) + list(self.meta.social_edges):
            if not all(0 <= g < n_clusters for g in pair):
                raise SnapshotFormatError(f"meta edge {pair} references unknown group")
        for name, table in self.pagerank.items():
            if set(table) != set(range(n_clusters)):
                raise SnapshotFormatError(f"pagerank table {name!r} does not cover all groups")


@contextmanager
def _stage(name: str):
    try:
        yield
    except PipelineError:
        raise
    except Exception as exc:
        raise PipelineError(name, exc) from exc


def make_embedding_provider(config: BuildConfig) -> EmbeddingProvider:
    if config.embedding_file:
        return FileEmbeddingProvider(config.embedding_file)
    return TrigramHashEmbedder(config.embedding_dim)


def build_index(
    corpus_path: str | Path,
    gazetteer_path: str | Path,
    config: BuildConfig | None = None,
) -> IndexSnapshot:
    """Run the full pipeline; failures carry the stage that raised them."""
    config = config or BuildConfig()
    with _stage("corpus"):
        corpus = load_corpus(corpus_path, config)
    with _stage("gazetteer"):
        gazetteer = load_gazetteer(gazetteer_path)
    with _stage("collocation"):
        counts = count_collocations(corpus, gazetteer)
        collocations = build_collocation_graph(counts, config.min_collocation)
    with _stage("facets"):
        facet_index = FacetIndex(corpus)
    with _stage("coauthor-graph"):
        full_graph = build_coauthor_graph(corpus, config.min_year, config.max_paper_authors)
        giant = giant_component(full_graph)
    with _stage("communities"):
        clusters = ego_split(giant, config.label_prop_max_iters)
        clusters = recursive_split(
            clusters, giant, config.max_cluster_size, config.label_prop_max_iters
        )
    with _stage("cards"):
        cards = build_group_cards(clusters, corpus, config.min_year, config.card_top_k)
    with _stage("links"):
        provider = make_embedding_provider(config)
        meta = build_meta_graph(cards, clusters, provider, config.k_link)
    with _stage("pagerank"):
        pagerank_config = PageRankConfig(
            damping=config.damping,
            epsilon=config.pagerank_epsilon,
            max_iters=config.pagerank_max_iters,
        )
        tables = layer_pagerank_tables(meta, pagerank_config)
    return IndexSnapshot(
        corpus=corpus,
        collocations=collocations,
        facet_index=facet_index,
        coauthors=giant,
        clusters=clusters,
        cards=cards,
        meta=meta,
        pagerank=tables,
    )


def snapshot_to_obj(snapshot: IndexSnapshot) -> dict:
    return {
        "magic": MAGIC,
        "format_version": snapshot.format_version,
        "build_config": snapshot.build_config.to_dict(),
        "sections": {
            "corpus": {
                "content_hash": snapshot.corpus.content_hash,
                "records": [record_to_obj(r) for r in snapshot.corpus.records],
            },
            "collocations": snapshot.collocations.to_obj(),
            "coauthors": snapshot.coauthors.to_obj(),
            "clusters": snapshot.clusters.to_obj(),
            "cards": [card.to_obj(full=True) for card in snapshot.cards],
            "meta": snapshot.meta.to_obj(),
            "pagerank": {
                name: {str(gid): score for gid, score in sorted(table.items())}
                for name, table in snapshot.pagerank.items()
            },
        },
    }


def save_index(snapshot: IndexSnapshot, path: str | Path) -> None:
    """Write the snapshot atomically as canonical JSON (sorted keys,
    fixed separators), so identical snapshots serialize byte-identically."""
    payload = json.dumps(snapshot_to_obj(snapshot), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def load_index(path: str | Path) -> IndexSnapshot:
    """Load and validate a snapshot file; wrong magic or version fails fast."""
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SnapshotFormatError(f"cannot read index file {path}: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("magic") != MAGIC:
        raise SnapshotFormatError(f"{path} is not an index snapshot (bad magic)")
    version = obj.get("format_version")
    if version != FORMAT_VERSION:
        raise SnapshotFormatError(
            f"unsupported format_version {version!r} (expected {FORMAT_VERSION})"
        )
    config = BuildConfig.from_dict(obj["build_config"])
    sections = obj["sections"]
    records = tuple(
        _parse_record(item, line) for line, item in enumerate(sections["corpus"]["records"], 1)
    )
    corpus = CorpusSnapshot(
        records=records,
        build_config=config,
        content_hash=sections["corpus"]["content_hash"],
    )
    snapshot = IndexSnapshot(
        corpus=corpus,
        collocations=CollocationGraph.from_obj(sections["collocations"]),
        facet_index=FacetIndex(corpus),
        coauthors=CoauthorGraph.from_obj(sections["coauthors"]),
        clusters=ClusterSet.from_obj(sections["clusters"]),
        cards=tuple(GroupCard.from_obj(item) for item in sections["cards"]),
        meta=MetaGraph.from_obj(sections["meta"]),
        pagerank={
            name: {int(gid): float(score) for gid, score in table.items()}
            for name, table in sections["pagerank"].items()
        },
        format_version=version,
    )
    snapshot.validate()
    return snapshot
