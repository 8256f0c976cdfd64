"""Overlapping community detection by persona splitting.

Each author is replaced by one persona per connected component of their
ego-net (the induced subgraph on their neighbors). Personas inherit the
author graph's edges and weights, the persona graph is partitioned with
deterministic weighted label propagation, and persona parts map back to
overlapping author clusters. Oversized clusters are re-split recursively;
clusters that refuse to break apart are kept and flagged.

Everything here is deterministic: nodes are processed in sorted order,
persona ids are assigned sequentially, and all ties break toward the
smallest key or label.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property

from .coauthors import CoauthorGraph


@dataclass(frozen=True)
class Persona:
    """One copy of an author, restricted to a single local social context."""

    author: str
    local_index: int


class PersonaGraph:
    def __init__(self, personas: dict[int, Persona], edges: dict[tuple[int, int], int]):
        self.personas = dict(personas)
        self.edges = dict(edges)
        adjacency: dict[int, list[tuple[int, int]]] = {pid: [] for pid in self.personas}
        for (p, q), weight in self.edges.items():
            adjacency[p].append((q, weight))
            adjacency[q].append((p, weight))
        for pid in adjacency:
            adjacency[pid].sort()
        self._adjacency = adjacency

    def neighbors(self, pid: int) -> list[tuple[int, int]]:
        return self._adjacency[pid]

    def __len__(self) -> int:
        return len(self.personas)


@dataclass(frozen=True)
class ClusterSet:
    """Overlapping author clusters in canonical order.

    Clusters are sorted by their sorted member tuple; ``flagged`` holds the
    indices of clusters kept oversized because re-splitting them returned
    the same single cluster.
    """

    clusters: tuple[frozenset[str], ...]
    flagged: frozenset[int] = frozenset()

    @cached_property
    def membership(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, list[int]] = defaultdict(list)
        for index, cluster in enumerate(self.clusters):
            for author in cluster:
                out[author].append(index)
        return {author: tuple(sorted(ids)) for author, ids in out.items()}

    def __len__(self) -> int:
        return len(self.clusters)

    def to_obj(self) -> list[dict]:
        return [
            {
                "cluster_id": index,
                "members": sorted(cluster),
                "flagged": index in self.flagged,
            }
            for index, cluster in enumerate(self.clusters)
        ]

    @classmethod
    def from_obj(cls, obj: list[dict]) -> "ClusterSet":
        clusters = tuple(frozenset(item["members"]) for item in obj)
        flagged = frozenset(item["cluster_id"] for item in obj if item.get("flagged"))
        return cls(clusters, flagged)


def make_cluster_set(author_sets, flagged_sets=()) -> ClusterSet:
    """Canonicalize clusters: drop empties, dedupe, sort by member tuple."""
    unique = {frozenset(s) for s in author_sets if s}
    ordered = tuple(sorted(unique, key=lambda s: tuple(sorted(s))))
    flagged_lookup = {frozenset(s) for s in flagged_sets}
    flagged = frozenset(i for i, s in enumerate(ordered) if s in flagged_lookup)
    return ClusterSet(ordered, flagged)


def _ego_parts(graph: CoauthorGraph, node: str) -> list[list[str]]:
    """Connected components of a node's ego-net, ordered by smallest member."""
    neighbors = sorted(graph.neighbors(node))
    remaining = set(neighbors)
    parts: list[list[str]] = []
    for seed in neighbors:
        if seed not in remaining:
            continue
        remaining.discard(seed)
        part = [seed]
        queue = deque([seed])
        while queue:
            current = queue.popleft()
            for other in sorted(graph.neighbors(current)):
                if other in remaining:
                    remaining.discard(other)
                    part.append(other)
                    queue.append(other)
        parts.append(part)
    return parts


def build_persona_graph(graph: CoauthorGraph) -> PersonaGraph:
    """Split every author into one persona per ego-net part.

    A persona edge connects, for each author edge (a, b), the persona of a
    whose local part contains b with the persona of b whose local part
    contains a; the edge keeps the author edge's weight. Isolated authors
    still get one (edgeless) persona so cluster coverage stays total.
    """
    personas: dict[int, Persona] = {}
    persona_of: dict[str, dict[str, int]] = {}
    next_id = 0
    for node in sorted(graph.nodes):
        parts = _ego_parts(graph, node)
        if not parts:
            personas[next_id] = Persona(node, 0)
            next_id += 1
            continue
        mapping: dict[str, int] = {}
        for local_index, part in enumerate(parts):
            personas[next_id] = Persona(node, local_index)
            for neighbor in part:
                mapping[neighbor] = next_id
            next_id += 1
        persona_of[node] = mapping
    edges: dict[tuple[int, int], int] = {}
    for (a, b), weight in graph.edges.items():
        p = persona_of[a][b]
        q = persona_of[b][a]
        key = (p, q) if p <= q else (q, p)
        edges[key] = weight
    return PersonaGraph(personas, edges)


def label_propagation(graph: PersonaGraph, max_iters: int = 100) -> dict[int, int]:
    """Deterministic weighted label propagation on the persona graph.

    Nodes are processed in persona-id order within each pass; a node
    adopts the neighbor label with the greatest total incident edge
    weight, ties to the smallest label, with updates visible inside the
    pass. Stops at the first pass with zero changes or after
    ``max_iters`` passes.
    """
    labels = {pid: pid for pid in graph.personas}
    order = sorted(graph.personas)
    for _ in range(max_iters):
        changed = False
        for pid in order:
            tally: dict[int, int] = {}
            for qid, weight in graph.neighbors(pid):
                label = labels[qid]
                tally[label] = tally.get(label, 0) + weight
            if not tally:
                continue
            best_weight = max(tally.values())
            best = min(label for label, w in tally.items() if w == best_weight)
            if best != labels[pid]:
                labels[pid] = best
                changed = True
        if not changed:
            break
    return labels


def ego_split(graph: CoauthorGraph, lp_max_iters: int = 100) -> ClusterSet:
    """Overlapping clusters of the author graph via persona splitting.

    Every author lands in at least one cluster; authors whose ego-net has
    several components can land in several.
    """
    if not graph.nodes:
        return ClusterSet(())
    persona_graph = build_persona_graph(graph)
    labels = label_propagation(persona_graph, lp_max_iters)
    groups: dict[int, set[str]] = defaultdict(set)
    for pid, label in labels.items():
        groups[label].add(persona_graph.personas[pid].author)
    return make_cluster_set(groups.values())


def recursive_split(
    clusters: ClusterSet,
    graph: CoauthorGraph,
    max_size: int = 120,
    lp_max_iters: int = 100,
) -> ClusterSet:
    """Re-split clusters larger than ``max_size`` on their induced subgraphs.

    Splitting recurses until every cluster fits or proves irreducible
    (re-splitting returns the same single cluster, or the same oversized
    cluster keeps reappearing); irreducible clusters are kept and flagged.
    """
    final: list[frozenset[str]] = []
    flagged: list[frozenset[str]] = []
    queue = deque(clusters.clusters)
    already_split: set[frozenset[str]] = set()
    while queue:
        cluster = queue.popleft()
        if len(cluster) <= max_size:
            final.append(cluster)
            continue
        if cluster in already_split:
            final.append(cluster)
            flagged.append(cluster)
            continue
        already_split.add(cluster)
        parts = ego_split(graph.subgraph(cluster), lp_max_iters).clusters
        if len(parts) == 1 and parts[0] == cluster:
            final.append(cluster)
            flagged.append(cluster)
            continue
        queue.extend(parts)
    existing_flags = [clusters.clusters[i] for i in clusters.flagged]
    return make_cluster_set(final, flagged + existing_flags)


def membership_stats(clusters: ClusterSet) -> dict[int, int]:
    """Histogram: number of clusters an author belongs to -> author count."""
    histogram: dict[int, int] = defaultdict(int)
    for ids in clusters.membership.values():
        histogram[len(ids)] += 1
    return dict(sorted(histogram.items()))
