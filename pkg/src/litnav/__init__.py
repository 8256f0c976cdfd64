"""Exploratory search over a scientific paper corpus.

Three capabilities over one immutable corpus snapshot:

* entity collocation networks mined from title/abstract sentences,
* faceted paper search with time histograms and refinement suggestions,
* a network of research groups (overlapping co-authorship communities
  with topical and social links, searchable by topic/author/affiliation).

Build an index with :func:`litnav.snapshot.build_index` or the ``litnav
build`` CLI, then query it in-process or over HTTP (``litnav serve``).
"""

from .coauthors import CoauthorGraph, build_coauthor_graph, giant_component
from .collocation import (
    CollocationGraph,
    build_collocation_graph,
    count_collocations,
    papers_for_pair,
    related_terms,
)
from .communities import ClusterSet, ego_split, membership_stats, recursive_split
from .corpus import (
    AuthorRef,
    BuildConfig,
    CorpusSnapshot,
    FacetAnnotation,
    PaperRecord,
    load_corpus,
    normalize_author,
    split_sentences,
)
from .errors import LitnavError
from .facets import FacetIndex, FacetQuery, filter_papers, suggest_facets, time_histogram
from .groups import GroupCard, build_group_cards, find_bridges, group_papers, rank_entities, rank_topics
from .links import (
    EmbeddingProvider,
    FileEmbeddingProvider,
    MetaGraph,
    TrigramHashEmbedder,
    build_meta_graph,
    default_embed,
    group_vector,
    social_links,
    topical_links,
)
from .search import (
    GroupQuery,
    PageRankConfig,
    facet_overlap,
    rank_groups,
    suggest_group_facets,
    weighted_pagerank,
)
from .snapshot import IndexSnapshot, build_index, load_index, save_index
from .tagger import EntityMention, Gazetteer, load_gazetteer, tag_entities

__version__ = "0.1.0"

__all__ = [
    "AuthorRef",
    "BuildConfig",
    "ClusterSet",
    "CoauthorGraph",
    "CollocationGraph",
    "CorpusSnapshot",
    "EmbeddingProvider",
    "EntityMention",
    "FacetAnnotation",
    "FacetIndex",
    "FacetQuery",
    "FileEmbeddingProvider",
    "Gazetteer",
    "GroupCard",
    "GroupQuery",
    "IndexSnapshot",
    "LitnavError",
    "MetaGraph",
    "PageRankConfig",
    "PaperRecord",
    "TrigramHashEmbedder",
    "build_coauthor_graph",
    "build_collocation_graph",
    "build_group_cards",
    "build_index",
    "build_meta_graph",
    "count_collocations",
    "default_embed",
    "ego_split",
    "facet_overlap",
    "filter_papers",
    "find_bridges",
    "giant_component",
    "group_papers",
    "group_vector",
    "load_corpus",
    "load_gazetteer",
    "load_index",
    "membership_stats",
    "normalize_author",
    "papers_for_pair",
    "rank_entities",
    "rank_groups",
    "rank_topics",
    "recursive_split",
    "related_terms",
    "save_index",
    "social_links",
    "split_sentences",
    "suggest_facets",
    "suggest_group_facets",
    "tag_entities",
    "time_histogram",
    "topical_links",
    "weighted_pagerank",
]
