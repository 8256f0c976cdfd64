#!/usr/bin/env python3
"""Walkthrough: mine entity collocations and drill into an edge.

Builds the collocation graph from the bundled sample corpus, asks for the
terms most related to a drug, shows the neighbor-neighbor edges that make
the view a network rather than a star, and lists the papers behind one
edge, newest first.
"""

from pathlib import Path

from litnav import (
    build_collocation_graph,
    count_collocations,
    load_corpus,
    load_gazetteer,
    papers_for_pair,
    related_terms,
)

ROOT = Path(__file__).resolve().parent.parent

snapshot = load_corpus(ROOT / "data" / "sample_corpus.jsonl")
gazetteer = load_gazetteer(ROOT / "data" / "sample_gazetteer.tsv")
print(f"{len(snapshot)} papers, {len(gazetteer)} gazetteer terms")

counts = count_collocations(snapshot, gazetteer)
graph = build_collocation_graph(counts, min_collocation=2)
print(f"collocation graph: {len(graph.nodes)} entities, {len(graph.edges)} edges\n")

term = "chloroquine"
neighborhood = related_terms(graph, term, k=6)
print(f"subgraph around {term!r} ('*' marks edges touching the query):")
for (a, b), count in sorted(neighborhood.edges.items(), key=lambda e: -e[1]):
    marker = "*" if term in (a, b) else " "
    print(f"  {marker} {a} -- {b}  (count {count})")

partner = max(
    (other for other in neighborhood.nodes if other != term),
    key=lambda other: neighborhood.edges.get((min(term, other), max(term, other)), 0),
)
print(f"\npapers mentioning both {term!r} and {partner!r}:")
for paper in papers_for_pair(graph, snapshot, term, partner)[:5]:
    print(f"  {paper.year}  {paper.paper_id}  {paper.title}")
