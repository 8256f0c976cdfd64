import random

import pytest

from litnav.collocation import (
    build_collocation_graph,
    count_collocations,
    papers_for_pair,
    related_terms,
)
from litnav.corpus import EntityAnnotation
from litnav.errors import EdgeNotFoundError, TermNotFoundError
from litnav.tagger import Gazetteer

from helpers import (
    ENTITY_POOL,
    brute_force_collocations,
    make_record,
    make_snapshot,
    random_corpus,
)


@pytest.fixture
def gaz():
    return Gazetteer(
        {
            "ribavirin": ("ribavirin", "drug"),
            "chloroquine": ("chloroquine", "drug"),
            "infection": ("infection", "disease"),
        }
    )


def test_three_entity_sentence_counts_all_pairs(gaz):
    snap = make_snapshot(
        [make_record("p1", title="Trial", abstract="Ribavirin and Chloroquine treat infection.")]
    )
    counts = count_collocations(snap, gaz)
    assert counts.pair_counts == {
        ("chloroquine", "ribavirin"): 1,
        ("chloroquine", "infection"): 1,
        ("infection", "ribavirin"): 1,
    }
    assert counts.pair_papers[("chloroquine", "ribavirin")] == frozenset({"p1"})


def test_same_entity_twice_is_no_pair(gaz):
    snap = make_snapshot([make_record("p1", abstract="Chloroquine and chloroquine")])
    assert count_collocations(snap, gaz).pair_counts == {}


def test_empty_corpus(gaz):
    assert count_collocations(make_snapshot([]), gaz).pair_counts == {}


def test_duplicate_pair_in_one_sentence_counts_once(gaz):
    snap = make_snapshot(
        [make_record("p1", abstract="Ribavirin, chloroquine, ribavirin and chloroquine again.")]
    )
    assert count_collocations(snap, gaz).pair_counts == {("chloroquine", "ribavirin"): 1}


def test_pairs_counted_per_sentence(gaz):
    snap = make_snapshot(
        [
            make_record("p1", abstract="Ribavirin helps infection. Ribavirin cures infection."),
            make_record("p2", abstract="Ribavirin or infection."),
        ]
    )
    counts = count_collocations(snap, gaz)
    assert counts.pair_counts == {("infection", "ribavirin"): 3}
    assert counts.pair_papers[("infection", "ribavirin")] == frozenset({"p1", "p2"})


def test_precomputed_entities_take_precedence(gaz):
    record = make_record(
        "p1",
        abstract="Chloroquine shows dexamethasone-like effects on infection.",
        entities=(
            EntityAnnotation("dexamethasone", "dexamethasone", "drug"),
            EntityAnnotation("infection", "infection", "disease"),
        ),
    )
    counts = count_collocations(make_snapshot([record]), gaz)
    assert counts.pair_counts == {("dexamethasone", "infection"): 1}


def test_title_sentences_count_too(gaz):
    snap = make_snapshot([make_record("p1", title="Ribavirin against infection")])
    assert count_collocations(snap, gaz).pair_counts == {("infection", "ribavirin"): 1}


class TestFilter:
    def _counts(self, pairs):
        from litnav.collocation import CollocationCounts

        return CollocationCounts(
            pair_counts=dict(pairs),
            pair_papers={k: frozenset({"p1"}) for k in pairs},
            entity_types={nid: "drug" for pair in pairs for nid in pair},
        )

    def test_single_weak_edge_removed(self):
        graph = build_collocation_graph(self._counts({("a", "b"): 1}), min_collocation=2)
        assert graph.nodes == {} and graph.edges == {}

    def test_two_weak_edges_total_two_kept(self):
        counts = self._counts({("a", "b"): 1, ("a", "c"): 1})
        graph = build_collocation_graph(counts, min_collocation=2)
        assert set(graph.nodes) == {"a"}
        assert graph.nodes["a"].total == 2
        assert graph.edges == {}

    def test_min_collocation_zero_keeps_everything(self):
        counts = self._counts({("a", "b"): 1, ("b", "c"): 4})
        graph = build_collocation_graph(counts, min_collocation=0)
        assert set(graph.nodes) == {"a", "b", "c"}
        assert graph.edges == {("a", "b"): 1, ("b", "c"): 4}

    def test_single_pass_no_cascade(self):
        counts = self._counts({("a", "b"): 1, ("b", "c"): 1, ("c", "d"): 2})
        graph = build_collocation_graph(counts, min_collocation=2)
        # a is dropped (total 1); b survives on its raw total even though
        # its only surviving edge is b-c.
        assert set(graph.nodes) == {"b", "c", "d"}
        assert graph.edges == {("b", "c"): 1, ("c", "d"): 2}

    def test_conservation_before_filtering(self):
        counts = self._counts({("a", "b"): 2, ("b", "c"): 3, ("a", "c"): 1})
        graph = build_collocation_graph(counts, min_collocation=0)
        assert sum(n.total for n in graph.nodes.values()) == 2 * sum(graph.edges.values())


class TestRelatedTerms:
    @pytest.fixture
    def graph(self):
        counts = {("q", "a"): 5, ("q", "b"): 3, ("q", "c"): 1, ("a", "b"): 2, ("c", "d"): 9}
        from litnav.collocation import CollocationCounts

        raw = CollocationCounts(
            pair_counts={(min(x, y), max(x, y)): w for (x, y), w in counts.items()},
            pair_papers={(min(x, y), max(x, y)): frozenset({"p"}) for (x, y) in counts},
            entity_types={n: "drug" for n in "qabcd"},
        )
        return build_collocation_graph(raw, min_collocation=0)

    def test_k_exceeding_degree_returns_whole_neighborhood(self, graph):
        sub = related_terms(graph, "q", k=10)
        assert set(sub.nodes) == {"q", "a", "b", "c"}

    def test_top_k_by_count(self, graph):
        sub = related_terms(graph, "q", k=2)
        assert set(sub.nodes) == {"q", "a", "b"}
        # neighbor-neighbor edge included
        assert ("a", "b") in sub.edges

    def test_tie_broken_by_id(self):
        from litnav.collocation import CollocationCounts

        raw = CollocationCounts(
            pair_counts={("q", "z"): 2, ("m", "q"): 2},
            pair_papers={("q", "z"): frozenset(), ("m", "q"): frozenset()},
            entity_types={"q": "drug", "z": "drug", "m": "drug"},
        )
        graph = build_collocation_graph(raw, 0)
        sub = related_terms(graph, "q", k=1)
        assert set(sub.nodes) == {"q", "m"}

    def test_unknown_term_suggestions(self, graph):
        with pytest.raises(TermNotFoundError) as err:
            related_terms(graph, "ab", k=3)
        assert err.value.suggestions == ["a"]

    def test_k_must_be_positive(self, graph):
        with pytest.raises(ValueError):
            related_terms(graph, "q", k=0)


class TestPapersForPair:
    @pytest.fixture
    def setup(self, gaz):
        snap = make_snapshot(
            [
                make_record("p1", year=2019, abstract="Ribavirin treats infection."),
                make_record("p2", year=2021, abstract="Ribavirin prevents infection."),
                make_record("p3", year=2021, abstract="Ribavirin and infection interplay."),
            ]
        )
        graph = build_collocation_graph(count_collocations(snap, gaz), 0)
        return snap, graph

    def test_sorted_by_year_then_id(self, setup):
        snap, graph = setup
        papers = papers_for_pair(graph, snap, "ribavirin", "infection")
        assert [p.paper_id for p in papers] == ["p2", "p3", "p1"]

    def test_argument_order_symmetric(self, setup):
        snap, graph = setup
        a = papers_for_pair(graph, snap, "ribavirin", "infection")
        b = papers_for_pair(graph, snap, "infection", "ribavirin")
        assert a == b

    def test_missing_edge(self, setup):
        snap, graph = setup
        with pytest.raises(EdgeNotFoundError):
            papers_for_pair(graph, snap, "ribavirin", "nothing")


def test_counts_match_brute_force_oracle():
    rng = random.Random(1234)
    gaz = Gazetteer({surface: (surface, etype) for surface, etype in ENTITY_POOL})
    id_map = {surface: surface for surface, _ in ENTITY_POOL}
    for _ in range(10):
        snap = random_corpus(rng)
        counts = count_collocations(snap, gaz)
        expected_counts, expected_papers = brute_force_collocations(snap, id_map)
        assert counts.pair_counts == expected_counts
        assert {k: set(v) for k, v in counts.pair_papers.items()} == expected_papers


def test_export_shape():
    from litnav.collocation import CollocationCounts

    raw = CollocationCounts(
        pair_counts={("a", "b"): 2},
        pair_papers={("a", "b"): frozenset({"p2", "p1"})},
        entity_types={"a": "drug", "b": "gene"},
    )
    graph = build_collocation_graph(raw, 0)
    obj = graph.to_obj()
    assert obj["nodes"] == [
        {"id": "a", "type": "drug", "total": 2},
        {"id": "b", "type": "gene", "total": 2},
    ]
    assert obj["edges"] == [{"a": "a", "b": "b", "count": 2, "papers": ["p1", "p2"]}]
