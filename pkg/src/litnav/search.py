"""Group search: facet overlap combined with per-layer weighted PageRank.

PageRank runs once per meta-edge layer at build time; at query time each
group's final score is the mean of its facet-overlap score and its
min-max-normalized PageRank scores from both layers. Groups that satisfy
the query's facet semantics (conjunctive across facets, disjunctive
within) rank ahead of those that do not.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .groups import GroupCard
from .links import MetaGraph

LAYERS = ("topical", "social")
GROUP_FACETS = ("topics", "authors", "affiliations")


@dataclass(frozen=True)
class GroupQuery:
    """Query values per group facet; author values are normalized keys."""

    topics: frozenset[str] = frozenset()
    authors: frozenset[str] = frozenset()
    affiliations: frozenset[str] = frozenset()

    def values_for(self, kind: str) -> frozenset[str]:
        return getattr(self, kind)

    def all_values(self) -> frozenset[str]:
        return self.topics | self.authors | self.affiliations

    def is_empty(self) -> bool:
        return not (self.topics or self.authors or self.affiliations)


@dataclass(frozen=True)
class PageRankConfig:
    damping: float = 0.85
    epsilon: float = 1e-10
    max_iters: int = 200

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must be in (0, 1)")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")


def facet_overlap(query: GroupQuery, card: GroupCard) -> float:
    """Normalized overlap between query values and the card's facet set.

    The card facet set f is the union of its truncated topic, author and
    affiliation names; the score is |query values in f| / |f|, and 0 when
    either side is empty.
    """
    facet_set = card.facet_set()
    if not facet_set:
        return 0.0
    values = query.all_values()
    if not values:
        return 0.0
    return len(values & facet_set) / len(facet_set)


def weighted_pagerank(nodes, edges, config: PageRankConfig | None = None) -> dict:
    """Power iteration on a symmetric weighted graph.

    Transition probability out of a node is proportional to edge weight
    (negative weights are clamped to zero first); nodes with zero strength
    redistribute uniformly. Iterates until the L1 change drops below
    ``epsilon`` or ``max_iters`` passes; scores always sum to 1 within
    floating-point error. An empty edge set yields uniform scores.
    """
    config = config or PageRankConfig()
    ids = sorted(set(nodes))
    n = len(ids)
    if n == 0:
        return {}
    adjacency: dict = {node: [] for node in ids}
    strength: dict = {node: 0.0 for node in ids}
    for (a, b), weight in sorted(edges.items()):
        w = max(0.0, float(weight))
        if w == 0.0 or a == b:
            continue
        adjacency[a].append((b, w))
        adjacency[b].append((a, w))
        strength[a] += w
        strength[b] += w
    for node in ids:
        adjacency[node].sort()
    damping = config.damping
    scores = {node: 1.0 / n for node in ids}
    for _ in range(config.max_iters):
        dangling = sum(scores[node] for node in ids if strength[node] == 0.0)
        base = (1.0 - damping) / n + damping * dangling / n
        incoming = {node: base for node in ids}
        for node in ids:
            if strength[node] == 0.0:
                continue
            share = damping * scores[node] / strength[node]
            for other, weight in adjacency[node]:
                incoming[other] += share * weight
        l1 = sum(abs(incoming[node] - scores[node]) for node in ids)
        scores = incoming
        if l1 < config.epsilon:
            break
    return scores


def layer_pagerank_tables(meta: MetaGraph, config: PageRankConfig | None = None) -> dict[str, dict[int, float]]:
    """Query-independent PageRank score tables, one per edge layer."""
    return {
        name: weighted_pagerank(meta.group_ids, meta.layer(name), config) for name in LAYERS
    }


def minmax_normalize(table: dict) -> dict:
    """Scale scores to [0, 1]; a constant table maps everything to 0.5."""
    if not table:
        return {}
    low = min(table.values())
    high = max(table.values())
    if high == low:
        return {key: 0.5 for key in table}
    span = high - low
    return {key: (value - low) / span for key, value in table.items()}


@dataclass(frozen=True)
class RankedGroup:
    group_id: int
    final: float
    overlap: float
    pagerank_topical: float
    pagerank_social: float
    candidate: bool

    def to_obj(self) -> dict:
        return {
            "group_id": self.group_id,
            "score": self.final,
            "components": {
                "overlap": self.overlap,
                "pagerank_topical": self.pagerank_topical,
                "pagerank_social": self.pagerank_social,
            },
            "candidate": self.candidate,
        }


def _matches_facets(query: GroupQuery, card: GroupCard) -> bool:
    for kind in GROUP_FACETS:
        values = query.values_for(kind)
        if values and not values & frozenset(card.names(kind)):
            return False
    return True


def rank_groups(
    query: GroupQuery,
    cards,
    meta: MetaGraph,
    config: PageRankConfig | None = None,
    pagerank_tables: dict[str, dict[int, float]] | None = None,
) -> list[RankedGroup]:
    """Rank all groups against a query.

    final = (overlap + normalized topical PageRank + normalized social
    PageRank) / 3. Groups matching every nonempty query facet come first;
    within each block the order is final score descending, group id
    ascending. An empty query falls back to member count descending.
    """
    if pagerank_tables is None:
        pagerank_tables = layer_pagerank_tables(meta, config)
    topical = minmax_normalize(pagerank_tables["topical"])
    social = minmax_normalize(pagerank_tables["social"])
    ranked = []
    for card in cards:
        overlap = facet_overlap(query, card)
        pr_topical = topical.get(card.group_id, 0.5)
        pr_social = social.get(card.group_id, 0.5)
        ranked.append(
            RankedGroup(
                group_id=card.group_id,
                final=(overlap + pr_topical + pr_social) / 3.0,
                overlap=overlap,
                pagerank_topical=pr_topical,
                pagerank_social=pr_social,
                candidate=not query.is_empty() and _matches_facets(query, card),
            )
        )
    if query.is_empty():
        sizes = {card.group_id: card.member_count for card in cards}
        ranked.sort(key=lambda r: (-sizes[r.group_id], r.group_id))
    else:
        ranked.sort(key=lambda r: (not r.candidate, -r.final, r.group_id))
    return ranked


def suggest_group_facets(
    query: GroupQuery, ranked, cards, k: int = 10, pool_size: int = 10
) -> dict[str, list[tuple[str, int]]]:
    """Facet values frequent among the top-ranked groups' cards.

    Counts, per facet kind, how many of the top ``pool_size`` ranked
    groups carry each value on their card, excluding values already in the
    query; returns the top-k per kind, ties by value ascending.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    by_id = {card.group_id: card for card in cards}
    pool = [by_id[r.group_id] for r in ranked[:pool_size]]
    suggestions: dict[str, list[tuple[str, int]]] = {}
    for kind in GROUP_FACETS:
        exclude = query.values_for(kind)
        counts: Counter[str] = Counter()
        for card in pool:
            counts.update(set(card.names(kind)))
        rows = sorted(
            ((value, count) for value, count in counts.items() if value not in exclude),
            key=lambda item: (-item[1], item[0]),
        )
        suggestions[kind] = rows[:k]
    return suggestions
