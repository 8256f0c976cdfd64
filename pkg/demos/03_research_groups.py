#!/usr/bin/env python3
"""Walkthrough: from co-authorship to searchable group cards.

Builds the co-author graph (papers since 2017), keeps its giant
component, extracts overlapping communities, profiles each group (top
topics / authors / affiliations), links groups by topical and social
affinity, and finally ranks groups against a topic query.
"""

from pathlib import Path

from litnav import (
    TrigramHashEmbedder,
    GroupQuery,
    build_coauthor_graph,
    build_group_cards,
    build_meta_graph,
    ego_split,
    find_bridges,
    giant_component,
    load_corpus,
    membership_stats,
    rank_groups,
    recursive_split,
    suggest_group_facets,
)

ROOT = Path(__file__).resolve().parent.parent

snapshot = load_corpus(ROOT / "data" / "sample_corpus.jsonl")
full = build_coauthor_graph(snapshot, min_year=2017)
giant = giant_component(full)
print(f"co-author graph: {len(full)} authors; giant component: {len(giant)} authors, "
      f"{len(giant.edges)} edges")

clusters = recursive_split(ego_split(giant), giant, max_size=120)
print(f"{len(clusters)} groups; membership histogram {membership_stats(clusters)}")

cards = build_group_cards(clusters, snapshot, min_year=2017)
card = cards[0]
print(f"\ngroup 0 card ({card.member_count} members, {card.paper_count} papers)")
print("  topics:      ", ", ".join(card.names("topics", 3)))
print("  authors:     ", ", ".join(card.names("authors", 3)))
print("  affiliations:", ", ".join(card.names("affiliations", 3)))

meta = build_meta_graph(cards, clusters, TrigramHashEmbedder(), k_link=3)
print(f"\nmeta-graph: {len(meta.topical_edges)} topical edges, "
      f"{len(meta.social_edges)} social edges")
print("bridge authors:", [author for author, _ in find_bridges(clusters)][:5])

query = GroupQuery(topics=frozenset({"epitope mapping"}))
ranked = rank_groups(query, cards, meta)
print(f"\ngroups ranked for topic 'epitope mapping':")
for row in ranked[:5]:
    print(f"  group {row.group_id}  final {row.final:.3f}  "
          f"(overlap {row.overlap:.3f}, pr-topical {row.pagerank_topical:.3f}, "
          f"pr-social {row.pagerank_social:.3f})")

suggestions = suggest_group_facets(query, ranked, cards, k=3)
print("suggested follow-up topics:", [value for value, _ in suggestions["topics"]])
