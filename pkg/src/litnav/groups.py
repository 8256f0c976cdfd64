"""Group cards: the who / what / where summary of each author cluster.

A group's papers are all papers inside the build window with at least one
member author. Topics are ranked by TF-IDF against the other groups,
authors and affiliations by relative frequency over the group's papers.
Cards keep the full ranked lists; display surfaces truncate them (top_k
for the card and overlap scoring, five for tooltips, three for icons).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .communities import ClusterSet
from .corpus import CorpusSnapshot, PaperRecord

RankedValues = tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class GroupCard:
    group_id: int
    topics: RankedValues
    authors: RankedValues
    affiliations: RankedValues
    paper_count: int
    member_count: int
    top_k: int = 20
    flagged: bool = False

    @property
    def top_topics(self) -> RankedValues:
        return self.topics[: self.top_k]

    @property
    def top_authors(self) -> RankedValues:
        return self.authors[: self.top_k]

    @property
    def top_affiliations(self) -> RankedValues:
        return self.affiliations[: self.top_k]

    def names(self, kind: str, limit: int | None = None) -> list[str]:
        ranked = {"topics": self.topics, "authors": self.authors, "affiliations": self.affiliations}[kind]
        limit = self.top_k if limit is None else limit
        return [name for name, _ in ranked[:limit]]

    def facet_set(self) -> frozenset[str]:
        """Union of the card's truncated topic, author and affiliation names."""
        return frozenset(
            self.names("topics") + self.names("authors") + self.names("affiliations")
        )

    def to_obj(self, full: bool = False) -> dict:
        limit = None if full else self.top_k
        def emit(ranked: RankedValues) -> list[list]:
            rows = ranked if limit is None else ranked[:limit]
            return [[name, score] for name, score in rows]

        return {
            "group_id": self.group_id,
            "topics": emit(self.topics),
            "authors": emit(self.authors),
            "affiliations": emit(self.affiliations),
            "paper_count": self.paper_count,
            "member_count": self.member_count,
            "top_k": self.top_k,
            "flagged": self.flagged,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "GroupCard":
        def rows(items) -> RankedValues:
            return tuple((name, float(score)) for name, score in items)

        return cls(
            group_id=obj["group_id"],
            topics=rows(obj["topics"]),
            authors=rows(obj["authors"]),
            affiliations=rows(obj["affiliations"]),
            paper_count=obj["paper_count"],
            member_count=obj["member_count"],
            top_k=obj["top_k"],
            flagged=obj["flagged"],
        )


def group_papers(members, snapshot: CorpusSnapshot, min_year: int = 2017) -> list[PaperRecord]:
    """Papers with at least one member author and year >= min_year,
    sorted by year descending then paper id."""
    ids: set[str] = set()
    for member in members:
        for record in snapshot.papers_by_author.get(member, ()):
            if record.year >= min_year:
                ids.add(record.paper_id)
    papers = [snapshot.by_id[pid] for pid in ids]
    papers.sort(key=lambda record: (-record.year, record.paper_id))
    return papers


def _paper_topic_counts(papers) -> Counter:
    counts: Counter[str] = Counter()
    for record in papers:
        counts.update(set(record.topics))
    return counts


def _cluster_list(all_groups) -> tuple[frozenset[str], ...]:
    if isinstance(all_groups, ClusterSet):
        return all_groups.clusters
    return tuple(frozenset(g) for g in all_groups)


def rank_topics(group, snapshot: CorpusSnapshot, all_groups, min_year: int = 2017) -> list[tuple[str, float]]:
    """TF-IDF topic ranking for one group.

    tf(t) counts the group's papers carrying topic t; df(t) counts groups
    with at least one such paper; score = tf * ln(n_groups / df). A topic
    present in every group scores 0. Ties break by topic ascending.
    """
    papers = group_papers(group, snapshot, min_year)
    if not papers:
        return []
    tf = _paper_topic_counts(papers)
    clusters = _cluster_list(all_groups)
    df: Counter[str] = Counter()
    for cluster in clusters:
        df.update(_paper_topic_counts(group_papers(cluster, snapshot, min_year)).keys())
    n_groups = len(clusters)
    scored = [(topic, tf[topic] * math.log(n_groups / df[topic])) for topic in tf]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


def rank_entities(group, snapshot: CorpusSnapshot, kind: str, min_year: int = 2017) -> list[tuple[str, float]]:
    """Relative-frequency ranking of a group's authors or affiliations.

    frequency(v) = (group papers listing v) / (group paper count). Author
    values are restricted to group members; affiliations come from all of
    the group's papers. Ties break by value ascending.
    """
    if kind not in ("author", "affiliation"):
        raise ValueError(f"kind must be 'author' or 'affiliation', got {kind!r}")
    papers = group_papers(group, snapshot, min_year)
    if not papers:
        return []
    members = frozenset(group)
    counts: Counter[str] = Counter()
    for record in papers:
        if kind == "author":
            counts.update({a.key for a in record.authors} & members)
        else:
            counts.update(set(record.affiliations))
    total = len(papers)
    ranked = [(value, count / total) for value, count in counts.items()]
    ranked.sort(key=lambda item: (-item[1], item[0]))
    return ranked


def build_group_cards(
    clusters: ClusterSet,
    snapshot: CorpusSnapshot,
    min_year: int = 2017,
    top_k: int = 20,
) -> tuple[GroupCard, ...]:
    """Cards for every cluster, with topic df computed once across groups."""
    per_group_papers = [group_papers(cluster, snapshot, min_year) for cluster in clusters.clusters]
    per_group_tf = [_paper_topic_counts(papers) for papers in per_group_papers]
    df: Counter[str] = Counter()
    for tf in per_group_tf:
        df.update(tf.keys())
    n_groups = len(clusters.clusters)
    cards = []
    for index, cluster in enumerate(clusters.clusters):
        papers = per_group_papers[index]
        tf = per_group_tf[index]
        topics = [(topic, tf[topic] * math.log(n_groups / df[topic])) for topic in tf]
        topics.sort(key=lambda item: (-item[1], item[0]))
        cards.append(
            GroupCard(
                group_id=index,
                topics=tuple(topics),
                authors=tuple(rank_entities(cluster, snapshot, "author", min_year)),
                affiliations=tuple(rank_entities(cluster, snapshot, "affiliation", min_year)),
                paper_count=len(papers),
                member_count=len(cluster),
                top_k=top_k,
                flagged=index in clusters.flagged,
            )
        )
    return tuple(cards)


def find_bridges(clusters: ClusterSet) -> list[tuple[str, tuple[int, int]]]:
    """Authors who are the sole shared member of a cluster pair.

    Returns (author_key, (cluster_a, cluster_b)) sorted by author key then
    pair; pairs sharing two or more authors yield no bridges.
    """
    bridges = []
    for i, j in combinations(range(len(clusters.clusters)), 2):
        shared = clusters.clusters[i] & clusters.clusters[j]
        if len(shared) == 1:
            (author,) = shared
            bridges.append((author, (i, j)))
    bridges.sort()
    return bridges
