"""Corpus-wide entity collocation graph.

Two entities collocate when they co-appear in the same sentence of a
title or abstract; each sentence contributes at most one count per
unordered pair. The built graph drops entities whose total collocation
count (summed over all partners) falls below a threshold, and answers
neighborhood and edge drill-down queries.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .corpus import CorpusSnapshot, PaperRecord, split_sentences
from .errors import EdgeNotFoundError, TermNotFoundError
from .tagger import Gazetteer, safe_lower, tag_entities

Pair = tuple[str, str]


def pair_key(id_a: str, id_b: str) -> Pair:
    """Canonical unordered pair: lexicographically smaller id first."""
    return (id_a, id_b) if id_a <= id_b else (id_b, id_a)


@dataclass
class CollocationCounts:
    """Raw sentence co-occurrence counts before any filtering."""

    pair_counts: dict[Pair, int]
    pair_papers: dict[Pair, frozenset[str]]
    entity_types: dict[str, str]


@dataclass(frozen=True)
class CollocationNode:
    entity_type: str
    total: int


class CollocationGraph:
    """Filtered collocation graph with per-edge supporting paper ids.

    Node totals are collocation counts measured on the raw (unfiltered)
    counts, so every surviving node satisfies ``total >= min_collocation``
    even when a partner was filtered away.
    """

    def __init__(
        self,
        nodes: dict[str, CollocationNode],
        edges: dict[Pair, int],
        edge_papers: dict[Pair, tuple[str, ...]],
    ):
        self.nodes = dict(nodes)
        self.edges = dict(edges)
        self.edge_papers = dict(edge_papers)
        adjacency: dict[str, dict[str, int]] = {nid: {} for nid in self.nodes}
        for (a, b), count in self.edges.items():
            adjacency[a][b] = count
            adjacency[b][a] = count
        self._adjacency = adjacency

    def neighbors(self, canonical_id: str) -> dict[str, int]:
        return dict(self._adjacency.get(canonical_id, {}))

    def has_edge(self, id_a: str, id_b: str) -> bool:
        return pair_key(id_a, id_b) in self.edges

    def __len__(self) -> int:
        return len(self.nodes)

    def to_obj(self) -> dict:
        return {
            "nodes": [
                {"id": nid, "type": node.entity_type, "total": node.total}
                for nid, node in sorted(self.nodes.items())
            ],
            "edges": [
                {"a": a, "b": b, "count": count, "papers": list(self.edge_papers[(a, b)])}
                for (a, b), count in sorted(self.edges.items())
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "CollocationGraph":
        nodes = {n["id"]: CollocationNode(n["type"], n["total"]) for n in obj["nodes"]}
        edges = {}
        edge_papers = {}
        for e in obj["edges"]:
            key = (e["a"], e["b"])
            edges[key] = e["count"]
            edge_papers[key] = tuple(e["papers"])
        return cls(nodes, edges, edge_papers)


def iter_paper_sentences(record: PaperRecord):
    yield from split_sentences(record.title)
    yield from split_sentences(record.abstract)


def sentence_entities(record: PaperRecord, gazetteer: Gazetteer) -> list[dict[str, str]]:
    """Per-sentence maps of canonical_id -> entity_type for one paper.

    Precomputed annotations on the record take precedence over gazetteer
    tagging; they are located in sentences by case-insensitive substring
    search.
    """
    out: list[dict[str, str]] = []
    if record.entities is not None:
        needles = [(safe_lower(e.text), e.canonical_id, e.entity_type) for e in record.entities]
        for sentence in iter_paper_sentences(record):
            lowered = safe_lower(sentence)
            found: dict[str, str] = {}
            for text, canonical_id, entity_type in needles:
                if text and text in lowered:
                    found.setdefault(canonical_id, entity_type)
            out.append(found)
    else:
        for sentence in iter_paper_sentences(record):
            found = {}
            for mention in tag_entities(sentence, gazetteer):
                found.setdefault(mention.canonical_id, mention.entity_type)
            out.append(found)
    return out


def count_collocations(snapshot: CorpusSnapshot, gazetteer: Gazetteer) -> CollocationCounts:
    """Count same-sentence co-occurrences of distinct entities.

    Multiple mentions of the same pair inside one sentence count once;
    the supporting paper id is recorded per pair.
    """
    pair_counts: dict[Pair, int] = defaultdict(int)
    pair_papers: dict[Pair, set[str]] = defaultdict(set)
    entity_types: dict[str, str] = {}
    for record in snapshot.records:
        for found in sentence_entities(record, gazetteer):
            for canonical_id, entity_type in found.items():
                entity_types.setdefault(canonical_id, entity_type)
            for a, b in combinations(sorted(found), 2):
                pair_counts[(a, b)] += 1
                pair_papers[(a, b)].add(record.paper_id)
    return CollocationCounts(
        pair_counts=dict(pair_counts),
        pair_papers={k: frozenset(v) for k, v in pair_papers.items()},
        entity_types=entity_types,
    )


def build_collocation_graph(counts: CollocationCounts, min_collocation: int = 2) -> CollocationGraph:
    """Filter raw counts into the served graph.

    Entities whose total collocation count across all partners is below
    ``min_collocation`` are removed together with their edges, in a single
    pass (no cascading re-filter). ``min_collocation=0`` reproduces the
    raw counts exactly.
    """
    totals: dict[str, int] = defaultdict(int)
    for (a, b), count in counts.pair_counts.items():
        totals[a] += count
        totals[b] += count
    kept = {nid for nid, total in totals.items() if total >= min_collocation}
    nodes = {nid: CollocationNode(counts.entity_types[nid], totals[nid]) for nid in kept}
    edges = {}
    edge_papers = {}
    for (a, b), count in counts.pair_counts.items():
        if a in kept and b in kept:
            edges[(a, b)] = count
            edge_papers[(a, b)] = tuple(sorted(counts.pair_papers[(a, b)]))
    return CollocationGraph(nodes, edges, edge_papers)


@dataclass(frozen=True)
class TermNeighborhood:
    """Query node, its top-k neighbors, and all edges among the selection."""

    query: str
    nodes: dict[str, CollocationNode]
    edges: dict[Pair, int]

    def to_obj(self) -> dict:
        return {
            "query": self.query,
            "nodes": [
                {"id": nid, "type": node.entity_type, "total": node.total}
                for nid, node in sorted(self.nodes.items())
            ],
            "edges": [
                {"a": a, "b": b, "count": count} for (a, b), count in sorted(self.edges.items())
            ],
        }


def _prefix_suggestions(known: dict[str, CollocationNode], term: str, limit: int = 5) -> list[str]:
    def shared_prefix(candidate: str) -> int:
        length = 0
        for a, b in zip(candidate, term):
            if a != b:
                break
            length += 1
        return length

    scored = [(shared_prefix(nid), nid) for nid in known]
    scored = [(score, nid) for score, nid in scored if score > 0]
    scored.sort(key=lambda item: (-item[0], item[1]))
    return [nid for _, nid in scored[:limit]]


def related_terms(graph: CollocationGraph, term: str, k: int) -> TermNeighborhood:
    """Neighborhood subgraph for one term.

    Selects the term's top-k neighbors by edge count (ties broken by id)
    and returns every edge among the selected nodes, so neighbor-neighbor
    interrelations are visible. Unknown terms raise
    :class:`TermNotFoundError` with prefix-based suggestions.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if term not in graph.nodes:
        raise TermNotFoundError(term, _prefix_suggestions(graph.nodes, term))
    ranked = sorted(graph.neighbors(term).items(), key=lambda item: (-item[1], item[0]))
    selected = [term] + [nid for nid, _ in ranked[:k]]
    selected_set = set(selected)
    edges = {
        key: count
        for key, count in graph.edges.items()
        if key[0] in selected_set and key[1] in selected_set
    }
    return TermNeighborhood(
        query=term,
        nodes={nid: graph.nodes[nid] for nid in selected},
        edges=edges,
    )


def papers_for_pair(
    graph: CollocationGraph, snapshot: CorpusSnapshot, id_a: str, id_b: str
) -> list[PaperRecord]:
    """Papers supporting one collocation edge, newest first.

    Endpoint order does not matter. Missing edges raise
    :class:`EdgeNotFoundError`.
    """
    key = pair_key(id_a, id_b)
    if key not in graph.edges:
        raise EdgeNotFoundError(id_a, id_b)
    papers = [snapshot.by_id[pid] for pid in graph.edge_papers[key]]
    papers.sort(key=lambda record: (-record.year, record.paper_id))
    return papers
