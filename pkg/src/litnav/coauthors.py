"""Weighted co-authorship network and its giant connected component.

Authors are nodes (normalized name keys); an edge's weight is the number
of co-authored papers inside the configured year window. Papers with very
large author lists contribute nodes but no edges, so consortium papers do
not flood the graph with dense cliques.
"""

from __future__ import annotations

from collections import defaultdict, deque
from itertools import combinations
from pathlib import Path

from .corpus import CorpusSnapshot

Pair = tuple[str, str]


class CoauthorGraph:
    """Undirected weighted author graph, immutable once built."""

    def __init__(
        self,
        nodes,
        edges: dict[Pair, int],
        node_papers: dict[str, frozenset[str]] | dict[str, set[str]],
    ):
        self.nodes = frozenset(nodes)
        self.edges = {pair: int(w) for pair, w in edges.items()}
        self.node_papers = {key: frozenset(ids) for key, ids in node_papers.items()}
        adjacency: dict[str, dict[str, int]] = {n: {} for n in self.nodes}
        for (a, b), weight in self.edges.items():
            adjacency[a][b] = weight
            adjacency[b][a] = weight
        self._adjacency = adjacency

    def neighbors(self, key: str) -> dict[str, int]:
        return self._adjacency.get(key, {})

    def degree(self, key: str) -> int:
        return len(self._adjacency.get(key, {}))

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self.edges if a <= b else (b, a) in self.edges

    def weight(self, a: str, b: str) -> int:
        key = (a, b) if a <= b else (b, a)
        return self.edges[key]

    def __len__(self) -> int:
        return len(self.nodes)

    def subgraph(self, members) -> "CoauthorGraph":
        """Induced subgraph on ``members``; weights are unchanged."""
        keep = frozenset(members) & self.nodes
        edges = {
            (a, b): w for (a, b), w in self.edges.items() if a in keep and b in keep
        }
        node_papers = {k: self.node_papers[k] for k in keep if k in self.node_papers}
        return CoauthorGraph(keep, edges, node_papers)

    def to_obj(self) -> dict:
        return {
            "nodes": sorted(self.nodes),
            "edges": [[a, b, w] for (a, b), w in sorted(self.edges.items())],
            "node_papers": {k: sorted(v) for k, v in sorted(self.node_papers.items())},
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "CoauthorGraph":
        edges = {(a, b): w for a, b, w in obj["edges"]}
        node_papers = {k: frozenset(v) for k, v in obj["node_papers"].items()}
        return cls(obj["nodes"], edges, node_papers)


def build_coauthor_graph(
    snapshot: CorpusSnapshot, min_year: int = 2017, max_paper_authors: int = 50
) -> CoauthorGraph:
    """Accumulate the co-authorship graph over papers with year >= min_year.

    Every included paper adds its authors as nodes and +1 weight to each
    unordered author pair; papers with more than ``max_paper_authors``
    authors add nodes only.
    """
    nodes: set[str] = set()
    edges: dict[Pair, int] = defaultdict(int)
    node_papers: dict[str, set[str]] = defaultdict(set)
    for record in snapshot.records:
        if record.year < min_year:
            continue
        keys = sorted({a.key for a in record.authors})
        if not keys:
            continue
        for key in keys:
            nodes.add(key)
            node_papers[key].add(record.paper_id)
        if 2 <= len(keys) <= max_paper_authors:
            for a, b in combinations(keys, 2):
                edges[(a, b)] += 1
    return CoauthorGraph(nodes, dict(edges), dict(node_papers))


def connected_components(graph: CoauthorGraph) -> list[set[str]]:
    """Components in order of their smallest member key."""
    components: list[set[str]] = []
    seen: set[str] = set()
    for start in sorted(graph.nodes):
        if start in seen:
            continue
        component = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            node = queue.popleft()
            for neighbor in graph.neighbors(node):
                if neighbor not in seen:
                    seen.add(neighbor)
                    component.add(neighbor)
                    queue.append(neighbor)
        components.append(component)
    return components


def giant_component(graph: CoauthorGraph) -> CoauthorGraph:
    """Induced subgraph on the largest connected component.

    Size ties go to the component containing the smallest author key.
    An empty graph is returned unchanged.
    """
    if not graph.nodes:
        return graph
    components = connected_components(graph)
    best = components[0]
    for component in components[1:]:
        if len(component) > len(best):
            best = component
    return graph.subgraph(best)


def write_edge_list(graph: CoauthorGraph, path: str | Path) -> None:
    """Export edges as TSV ``key_a<TAB>key_b<TAB>weight`` (a < b, sorted)."""
    with open(path, "w", encoding="utf-8") as fh:
        for (a, b), weight in sorted(graph.edges.items()):
            fh.write(f"{a}\t{b}\t{weight}\n")
