#!/usr/bin/env python3
"""Walkthrough: refine a faceted search the way a reader would.

Starts from one intervention, looks at the co-mention suggestions, adds
the top population suggestion to the query (conjunctive across facets),
then narrows the year range and watches the histogram change.
"""

from pathlib import Path

from litnav import FacetIndex, FacetQuery, filter_papers, load_corpus, suggest_facets, time_histogram

ROOT = Path(__file__).resolve().parent.parent

snapshot = load_corpus(ROOT / "data" / "sample_corpus.jsonl")
index = FacetIndex(snapshot)

query = FacetQuery(intervention=frozenset({"ribavirin"}))
matches = filter_papers(index, query)
print(f"intervention=ribavirin matches {len(matches)} papers")
print("papers per year:", time_histogram(index, query))

suggestions = suggest_facets(index, query, k=3)
print("\nsuggested refinements:")
for kind in ("population", "outcome", "affiliation"):
    rows = ", ".join(f"{value} ({count})" for value, count in suggestions[kind])
    print(f"  {kind:12s} {rows or '-'}")

top_population = suggestions["population"][0][0]
refined = FacetQuery(
    intervention=frozenset({"ribavirin"}),
    population=frozenset({top_population}),
)
narrowed = filter_papers(index, refined)
print(f"\nadding population={top_population!r} narrows to {len(narrowed)} papers")
assert set(narrowed) <= set(matches)

windowed = refined.with_year_range((2018, 2022))
print("with year range 2018-2022:", time_histogram(index, windowed))
print("\nnewest matches:")
for pid in filter_papers(index, windowed)[:5]:
    record = snapshot.by_id[pid]
    print(f"  {record.year}  {record.paper_id}  {record.title}")
