"""Faceted paper filtering with time histograms and co-mention suggestions.

Queries are conjunctive across facets and disjunctive within a facet: a
paper matches when, for every facet that has query values, it carries at
least one of them. Suggestions are computed over the current result set,
so each refinement narrows the next round of suggestions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from .corpus import CorpusSnapshot, PaperRecord

FACET_KINDS = ("population", "intervention", "outcome", "author", "affiliation", "journal")

@dataclass(frozen=True)
class FacetQuery:
    """Value sets per facet plus an optional inclusive year range.

    All values are assumed lowercase-normalized (author values are
    normalized author keys). An empty query matches every paper.
    """

    population: frozenset[str] = frozenset()
    intervention: frozenset[str] = frozenset()
    outcome: frozenset[str] = frozenset()
    author: frozenset[str] = frozenset()
    affiliation: frozenset[str] = frozenset()
    journal: frozenset[str] = frozenset()
    year_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.year_range is not None and self.year_range[0] > self.year_range[1]:
            raise ValueError("year_range start must not exceed end")

    def values_for(self, kind: str) -> frozenset[str]:
        return getattr(self, kind)

    def with_year_range(self, year_range: tuple[int, int] | None) -> "FacetQuery":
        return replace(self, year_range=year_range)

    def is_empty(self) -> bool:
        return self.year_range is None and not any(self.values_for(k) for k in FACET_KINDS)

def paper_facet_values(record: PaperRecord, kind: str) -> frozenset[str]:
    """The values a paper carries for one facet kind."""
    if kind == "author":
        return frozenset(a.key for a in record.authors)
    if kind == "affiliation":
        return frozenset(record.affiliations)
    if kind == "journal":
        return frozenset((record.journal,)) if record.journal else frozenset()
    facets = record.facets
    if facets is None:
        return frozenset()
    return frozenset(getattr(facets, kind))

class FacetIndex:
    """Immutable per-facet inverted maps from value to matching paper ids."""

    def __init__(self, snapshot: CorpusSnapshot):
        self.snapshot = snapshot
        postings: dict[str, dict[str, set[str]]] = {kind: {} for kind in FACET_KINDS}
        paper_values: dict[str, dict[str, frozenset[str]]] = {kind: {} for kind in FACET_KINDS}
        years: dict[str, int] = {}
        for record in snapshot.records:
            years[record.paper_id] = record.year
            for kind in FACET_KINDS:
                values = paper_facet_values(record, kind)
                if values:
                    paper_values[kind][record.paper_id] = values
                for value in values:
                    postings[kind].setdefault(value, set()).add(record.paper_id)
        self.postings = {
            kind: {value: frozenset(ids) for value, ids in table.items()}
            for kind, table in postings.items()
        }
        self.paper_values = paper_values
        self.years = years
        self.all_ids = frozenset(years)

    def recency_key(self, paper_id: str):
        return (-self.years[paper_id], paper_id)

def filter_papers(index: FacetIndex, query: FacetQuery) -> list[str]:
    """Paper ids matching the query, sorted by year descending then id."""
    matched = set(index.all_ids)
    for kind in FACET_KINDS:
        values = query.values_for(kind)
        if not values:
            continue
        hits: set[str] = set()
        for value in values:
            hits |= index.postings[kind].get(value, frozenset())
        matched &= hits
        if not matched:
            break
    if query.year_range is not None:
        lo, hi = query.year_range
        matched = {pid for pid in matched if lo <= index.years[pid] <= hi}
    return sorted(matched, key=index.recency_key)

def time_histogram(index: FacetIndex, query: FacetQuery) -> dict[int, int]:
    """Matching-paper counts per year.

    When the query carries a year range, every year inside it appears,
    zero-filled if needed; otherwise only years with matches appear.
    """
    counts = Counter(index.years[pid] for pid in filter_papers(index, query))
    if query.year_range is not None:
        lo, hi = query.year_range
        return {year: counts.get(year, 0) for year in range(lo, hi + 1)}
    return dict(sorted(counts.items()))

def suggest_facets(
    index: FacetIndex, query: FacetQuery, k: int = 10
) -> dict[str, list[tuple[str, int]]]:
    """Top-k refinement values per facet over the current result set.

    Values already in the query are excluded; ranking is by number of
    matching papers carrying the value, ties by value ascending.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    matched = filter_papers(index, query)
    suggestions: dict[str, list[tuple[str, int]]] = {}
    for kind in FACET_KINDS:
        exclude = query.values_for(kind)
        counts: Counter[str] = Counter()
        for pid in matched:
            counts.update(index.paper_values[kind].get(pid, frozenset()))
        ranked = sorted(
            ((value, count) for value, count in counts.items() if value not in exclude),
            key=lambda item: (-item[1], item[0]),
        )
        suggestions[kind] = ranked[:k]
    return suggestions
