import random

import pytest

from litnav.communities import (
    ClusterSet,
    build_persona_graph,
    ego_split,
    make_cluster_set,
    membership_stats,
    recursive_split,
)

from helpers import coauthor_graph, planted_cliques, two_community_graph


@pytest.fixture
def two_triangles():
    return coauthor_graph(
        [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")]
    )


class TestPersonaGraph:
    def test_shared_node_gets_two_personas(self, two_triangles):
        pg = build_persona_graph(two_triangles)
        by_author = {}
        for persona in pg.personas.values():
            by_author.setdefault(persona.author, []).append(persona.local_index)
        assert sorted(by_author["c"]) == [0, 1]
        for author in "abde":
            assert by_author[author] == [0]

    def test_edges_inherit_weights(self):
        graph = coauthor_graph([("a", "b", 5)])
        pg = build_persona_graph(graph)
        assert list(pg.edges.values()) == [5]

    def test_every_author_edge_maps_to_one_persona_edge(self, two_triangles):
        pg = build_persona_graph(two_triangles)
        assert len(pg.edges) == len(two_triangles.edges)

    def test_isolated_author_still_gets_persona(self):
        graph = coauthor_graph([], nodes={"loner"})
        pg = build_persona_graph(graph)
        assert len(pg.personas) == 1


class TestEgoSplit:
    def test_two_triangles_shared_node(self, two_triangles):
        clusters = ego_split(two_triangles)
        assert [sorted(c) for c in clusters.clusters] == [["a", "b", "c"], ["c", "d", "e"]]
        assert clusters.membership["c"] == (0, 1)

    def test_single_clique_one_cluster(self):
        graph = coauthor_graph(
            [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
        )
        clusters = ego_split(graph)
        assert [sorted(c) for c in clusters.clusters] == [["a", "b", "c", "d"]]

    def test_disjoint_cliques(self):
        graph = coauthor_graph(
            [("a", "b"), ("a", "c"), ("b", "c"), ("x", "y"), ("x", "z"), ("y", "z")]
        )
        clusters = ego_split(graph)
        assert [sorted(c) for c in clusters.clusters] == [["a", "b", "c"], ["x", "y", "z"]]
        assert membership_stats(clusters) == {1: 6}

    def test_coverage(self):
        rng = random.Random(5)
        nodes = [f"n{i}" for i in range(30)]
        edges = set()
        for _ in range(60):
            a, b = rng.sample(nodes, 2)
            edges.add((min(a, b), max(a, b)))
        graph = coauthor_graph(list(edges), nodes=nodes)
        clusters = ego_split(graph)
        covered = set().union(*clusters.clusters)
        assert covered == set(graph.nodes)

    def test_deterministic_across_runs(self):
        rng = random.Random(11)
        nodes = [f"n{i}" for i in range(40)]
        edges = set()
        for _ in range(120):
            a, b = rng.sample(nodes, 2)
            edges.add((min(a, b), max(a, b)))
        graph = coauthor_graph(list(edges), nodes=nodes)
        first = ego_split(graph)
        second = ego_split(graph)
        assert first == second

    def test_empty_graph(self):
        assert ego_split(coauthor_graph([])).clusters == ()

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_planted_cliques_recovered(self, k):
        rng = random.Random(100 + k)
        for _ in range(5):
            graph, expected, shared = planted_cliques(rng, k)
            clusters = ego_split(graph)
            assert sorted(clusters.clusters, key=sorted) == sorted(expected, key=sorted)
            for node in shared:
                assert len(clusters.membership[node]) == 2


class TestRecursiveSplit:
    def test_small_clusters_untouched(self, two_triangles):
        clusters = ego_split(two_triangles)
        assert recursive_split(clusters, two_triangles, max_size=120) == clusters

    def test_oversized_two_community_cluster_splits(self):
        graph, community_a, community_b = two_community_graph()
        whole = make_cluster_set([frozenset(graph.nodes)])
        result = recursive_split(whole, graph, max_size=120)
        assert sorted(len(c) for c in result.clusters) == [70, 90]
        assert set(result.clusters) == {community_a, community_b}
        assert result.flagged == frozenset()

    def test_irreducible_clique_kept_and_flagged(self):
        members = [f"m{i:03d}" for i in range(130)]
        edges = [(a, b) for i, a in enumerate(members) for b in members[i + 1 :]]
        graph = coauthor_graph(edges)
        whole = make_cluster_set([frozenset(members)])
        result = recursive_split(whole, graph, max_size=120)
        assert len(result.clusters) == 1
        assert len(result.clusters[0]) == 130
        assert result.flagged == frozenset({0})

    def test_unflagged_clusters_fit_after_split(self):
        graph, *_ = two_community_graph()
        result = recursive_split(make_cluster_set([frozenset(graph.nodes)]), graph, max_size=120)
        for index, cluster in enumerate(result.clusters):
            if index not in result.flagged:
                assert len(cluster) <= 120


class TestMembershipStats:
    def test_all_single(self):
        clusters = make_cluster_set([{"a", "b"}, {"c"}])
        assert membership_stats(clusters) == {1: 3}

    def test_bridge_fixture(self, two_triangles):
        assert membership_stats(ego_split(two_triangles)) == {1: 4, 2: 1}

    def test_empty(self):
        assert membership_stats(ClusterSet(())) == {}


def test_cluster_set_canonical_order_and_dedupe():
    clusters = make_cluster_set([{"z", "a"}, {"b"}, {"a", "z"}])
    assert [sorted(c) for c in clusters.clusters] == [["a", "z"], ["b"]]


def test_cluster_set_round_trips_through_obj():
    clusters = make_cluster_set([{"a", "b"}, {"c"}], flagged_sets=[{"c"}])
    assert ClusterSet.from_obj(clusters.to_obj()) == clusters
