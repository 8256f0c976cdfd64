"""Shared fixtures builders and independent oracles used across tests.

The oracles here deliberately re-derive expected values through a
different route than the library (brute-force enumeration, dense numpy
power iteration) so the tests stay meaningful.
"""

from __future__ import annotations

import json
import random
from itertools import combinations

import numpy as np

from litnav.coauthors import CoauthorGraph
from litnav.corpus import (
    AuthorRef,
    BuildConfig,
    CorpusSnapshot,
    FacetAnnotation,
    PaperRecord,
    normalize_author,
    split_sentences,
)
from litnav.facets import FACET_KINDS, paper_facet_values


def make_record(paper_id, title="", year=2020, abstract="", authors=(),
                affiliations=(), journal=None, facets=None, topics=(), entities=None):
    return PaperRecord(
        paper_id=paper_id,
        title=title,
        year=year,
        abstract=abstract,
        authors=tuple(AuthorRef(raw_name=a, key=normalize_author(a)) for a in authors),
        affiliations=tuple(affiliations),
        journal=journal,
        facets=facets,
        topics=tuple(topics),
        entities=entities,
    )


def make_snapshot(records, config=None):
    return CorpusSnapshot(
        records=tuple(records),
        build_config=config or BuildConfig(),
        content_hash="test",
    )


def write_corpus(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")
    return path


def write_gazetteer(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")
    return path


def coauthor_graph(edges, nodes=(), node_papers=None):
    """Build a CoauthorGraph from an iterable of (a, b) or (a, b, w)."""
    weighted = {}
    all_nodes = set(nodes)
    for edge in edges:
        if len(edge) == 2:
            a, b, w = edge[0], edge[1], 1
        else:
            a, b, w = edge
        key = (a, b) if a <= b else (b, a)
        weighted[key] = w
        all_nodes.update((a, b))
    return CoauthorGraph(all_nodes, weighted, node_papers or {})


# ---------------------------------------------------------------------------
# Random corpora for the collocation oracle


ENTITY_POOL = [
    ("alphaxin", "drug"), ("betamab", "drug"), ("gammaril", "drug"),
    ("deltafen", "drug"), ("feverpox", "disease"), ("lungrot", "disease"),
    ("gutworm", "disease"), ("kinase9", "protein"), ("helixin", "protein"),
    ("cellgene", "gene"),
]

FILLERS = ["the", "cohort", "showed", "robust", "signal", "with", "treated", "samples"]


def random_sentence(rng, surfaces):
    """A sentence of filler words with 0..4 entity surfaces dropped in."""
    words = [rng.choice(FILLERS) for _ in range(rng.randint(2, 6))]
    for surface in rng.sample(surfaces, rng.randint(0, min(4, len(surfaces)))):
        words.insert(rng.randrange(len(words) + 1), surface)
    return " ".join(words).capitalize() + "."

def random_corpus(rng, max_papers=50, entities=ENTITY_POOL):
    surfaces = [s for s, _ in entities]
    records = []
    for i in range(rng.randint(1, max_papers)):
        n_sentences = rng.randint(1, 4)
        abstract = " ".join(random_sentence(rng, surfaces) for _ in range(n_sentences))
        title = random_sentence(rng, surfaces)[:-1]
        records.append(make_record(f"p{i}", title=title, year=rng.randint(2000, 2024), abstract=abstract))
    return make_snapshot(records)


def brute_force_collocations(snapshot, gazetteer_entries):
    """Independent counter: regex-free word scan + double loop over pairs."""
    pair_counts = {}
    pair_papers = {}
    surfaces = sorted(gazetteer_entries, key=len, reverse=True)
    for record in snapshot.records:
        sentences = split_sentences(record.title) + split_sentences(record.abstract)
        for sentence in sentences:
            lowered = sentence.lower()
            tokens = [t.strip(".,!?") for t in lowered.split()]
            present = set()
            for surface in surfaces:
                if " " in surface:
                    if surface in lowered:
                        present.add(gazetteer_entries[surface])
                elif surface in tokens:
                    present.add(gazetteer_entries[surface])
            ids = sorted(present)
            for i in range(len(ids)):
                for j in range(i + 1, len(ids)):
                    key = (ids[i], ids[j])
                    pair_counts[key] = pair_counts.get(key, 0) + 1
                    pair_papers.setdefault(key, set()).add(record.paper_id)
    return pair_counts, pair_papers


# ---------------------------------------------------------------------------
# Brute-force facet filter


def brute_force_filter(snapshot, query):
    matched = []
    for record in snapshot.records:
        ok = True
        for kind in FACET_KINDS:
            wanted = query.values_for(kind)
            if wanted and not (wanted & paper_facet_values(record, kind)):
                ok = False
                break
        if ok and query.year_range is not None:
            lo, hi = query.year_range
            ok = lo <= record.year <= hi
        if ok:
            matched.append(record)
    matched.sort(key=lambda r: (-r.year, r.paper_id))
    return [r.paper_id for r in matched]


def random_facet_corpus(rng, max_papers=200):
    populations = ["immunocompromised patients", "elderly patients", "children"]
    interventions = ["alphaxin", "betamab", "gammaril", "plasma"]
    outcomes = ["mortality", "recovery", "titer"]
    affiliations = ["north lab", "south lab", "east lab"]
    journals = ["journal a", "journal b"]
    author_pool = ["ana diaz", "bo li", "cara smith", "dev patel", "eva novak"]
    records = []
    for i in range(rng.randint(1, max_papers)):
        facets = FacetAnnotation(
            population=tuple(sorted(rng.sample(populations, rng.randint(0, 2)))),
            intervention=tuple(sorted(rng.sample(interventions, rng.randint(0, 2)))),
            outcome=tuple(sorted(rng.sample(outcomes, rng.randint(0, 2)))),
        )
        records.append(
            make_record(
                f"p{i}",
                title=f"paper {i}",
                year=rng.randint(2010, 2024),
                authors=rng.sample(author_pool, rng.randint(0, 3)),
                affiliations=rng.sample(affiliations, rng.randint(0, 2)),
                journal=rng.choice(journals + [None]),
                facets=facets if rng.random() < 0.9 else None,
            )
        )
    return make_snapshot(records)


def random_facet_query(rng):
    from litnav.facets import FacetQuery

    def pick(values, p=0.5, k=2):
        return frozenset(rng.sample(values, rng.randint(1, k))) if rng.random() < p else frozenset()

    year_range = None
    if rng.random() < 0.4:
        lo = rng.randint(2010, 2024)
        year_range = (lo, rng.randint(lo, 2024))
    return FacetQuery(
        population=pick(["immunocompromised patients", "elderly patients", "children"], 0.4),
        intervention=pick(["alphaxin", "betamab", "gammaril", "plasma"], 0.5),
        outcome=pick(["mortality", "recovery", "titer"], 0.3),
        author=pick(["ana diaz", "bo li", "cara smith", "dev patel", "eva novak"], 0.3),
        affiliation=pick(["north lab", "south lab", "east lab"], 0.3),
        journal=pick(["journal a", "journal b"], 0.2, k=1),
        year_range=year_range,
    )


# ---------------------------------------------------------------------------
# Dense PageRank oracle (numpy formulation, independent of the library's
# adjacency-based implementation)


def dense_pagerank(nodes, edges, damping=0.85, epsilon=1e-10, max_iters=200):
    ids = sorted(set(nodes))
    n = len(ids)
    index = {g: i for i, g in enumerate(ids)}
    weights = np.zeros((n, n))
    for (a, b), w in edges.items():
        w = max(0.0, float(w))
        weights[index[a], index[b]] = w
        weights[index[b], index[a]] = w
    strength = weights.sum(axis=1)
    transition = np.zeros((n, n))
    for i in range(n):
        if strength[i] == 0:
            transition[i, :] = 1.0 / n
        else:
            transition[i, :] = weights[i, :] / strength[i]
    x = np.full(n, 1.0 / n)
    for _ in range(max_iters):
        nxt = (1.0 - damping) / n + damping * (transition.T @ x)
        l1 = float(np.abs(nxt - x).sum())
        x = nxt
        if l1 < epsilon:
            break
    return {g: float(x[index[g]]) for g in ids}


def random_weighted_graph(rng, max_nodes=50):
    n = rng.randint(2, max_nodes)
    nodes = list(range(n))
    edges = {}
    for a, b in combinations(nodes, 2):
        if rng.random() < 0.15:
            edges[(a, b)] = rng.uniform(0.1, 5.0)
    return nodes, edges


# ---------------------------------------------------------------------------
# Planted community structures


def planted_cliques(rng, k, min_size=5, max_size=12):
    """k cliques chained by single shared nodes (tree-shaped sharing).

    Returns (graph, expected_clusters, shared_nodes); every shared node
    belongs to exactly two cliques.
    """
    serial = 0

    def fresh():
        nonlocal serial
        serial += 1
        return f"n{serial:03d}"

    cliques = []
    shared_nodes = []
    for i in range(k):
        size = rng.randint(min_size, max_size)
        members = [fresh() for _ in range(size)]
        if i > 0:
            parent = cliques[rng.randrange(i)]
            candidates = sorted(set(parent) - set(shared_nodes))
            shared = rng.choice(candidates)
            members[0] = shared
            shared_nodes.append(shared)
        cliques.append(members)
    edges = {}
    for members in cliques:
        for a, b in combinations(sorted(members), 2):
            edges[(a, b)] = 1
    graph = coauthor_graph([(a, b, w) for (a, b), w in edges.items()])
    expected = [frozenset(members) for members in cliques]
    return graph, expected, shared_nodes


def two_community_graph(n_a_only=80, n_b_only=60, n_shared=10):
    """Two dense communities sharing ``n_shared`` pairwise non-adjacent nodes.

    Community A = clique on the A-only nodes plus every shared node linked
    to all A-only nodes; likewise for B. Built so persona splitting can
    separate the communities while the union of both is one component.
    """
    a_only = [f"a{i:02d}" for i in range(n_a_only)]
    b_only = [f"b{i:02d}" for i in range(n_b_only)]
    shared = [f"s{i:02d}" for i in range(n_shared)]
    edges = []
    for x, y in combinations(a_only, 2):
        edges.append((x, y))
    for x, y in combinations(b_only, 2):
        edges.append((x, y))
    for s in shared:
        for x in a_only:
            edges.append((s, x))
        for y in b_only:
            edges.append((s, y))
    graph = coauthor_graph(edges)
    community_a = frozenset(a_only) | frozenset(shared)
    community_b = frozenset(b_only) | frozenset(shared)
    return graph, community_a, community_b
