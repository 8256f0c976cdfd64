import concurrent.futures
import json

import pytest
import requests

from litnav.corpus import BuildConfig
from litnav.errors import PipelineError, SnapshotFormatError
from litnav.service import ApiServer
from litnav.snapshot import build_index, load_index, save_index

from helpers import write_corpus, write_gazetteer

GAZ_ROWS = [
    ("alphaxin", "alphaxin", "drug"),
    ("betamab", "betamab", "drug"),
    ("feverpox", "feverpox", "disease"),
]

CORPUS_ROWS = [
    {
        "paper_id": "p1",
        "title": "Alphaxin against feverpox",
        "abstract": "Alphaxin reduced feverpox severity. Betamab did not.",
        "authors": ["Ana Diaz", "Bo Li"],
        "affiliations": ["North Lab"],
        "journal": "Journal A",
        "year": 2020,
        "facets": {"population": ["elderly patients"], "intervention": ["alphaxin"], "outcome": ["mortality"]},
        "topics": ["drug trials"],
    },
    {
        "paper_id": "p2",
        "title": "Betamab and feverpox",
        "abstract": "Betamab with feverpox cohorts. Alphaxin and betamab were compared.",
        "authors": ["Bo Li", "Cara Smith"],
        "affiliations": ["South Lab"],
        "journal": "Journal B",
        "year": 2021,
        "facets": {"population": ["children"], "intervention": ["betamab"], "outcome": []},
        "topics": ["antibody engineering"],
    },
    {
        "paper_id": "p3",
        "title": "Feverpox outcomes",
        "abstract": "Alphaxin plus feverpox follow-up. Alphaxin again with feverpox.",
        "authors": ["Ana Diaz", "Cara Smith"],
        "affiliations": ["North Lab"],
        "journal": "Journal A",
        "year": 2019,
        "facets": {"population": ["elderly patients"], "intervention": ["alphaxin"], "outcome": ["recovery"]},
        "topics": ["drug trials", "cohort studies"],
    },
]


@pytest.fixture(scope="module")
def built(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("svc")
    corpus = write_corpus(tmp / "corpus.jsonl", CORPUS_ROWS)
    gazetteer = write_gazetteer(tmp / "gaz.tsv", GAZ_ROWS)
    config = BuildConfig(min_collocation=0, min_year=2017)
    snapshot = build_index(corpus, gazetteer, config)
    index_path = tmp / "index.json"
    save_index(snapshot, index_path)
    return snapshot, index_path, (corpus, gazetteer, config)


@pytest.fixture(scope="module")
def server(built):
    snapshot, index_path, _ = built
    api = ApiServer(snapshot, host="127.0.0.1", port=0)
    api.start_background()
    yield api, f"http://127.0.0.1:{api.port}", index_path
    api.shutdown()


class TestBuildIndex:
    def test_snapshot_is_selfconsistent(self, built):
        snapshot, _, _ = built
        snapshot.validate()

    def test_rebuild_is_byte_identical(self, built, tmp_path):
        _, index_path, (corpus, gazetteer, config) = built
        again = tmp_path / "again.json"
        save_index(build_index(corpus, gazetteer, config), again)
        assert again.read_bytes() == index_path.read_bytes()

    def test_load_round_trip(self, built):
        snapshot, index_path, _ = built
        loaded = load_index(index_path)
        assert loaded.corpus.records == snapshot.corpus.records
        assert loaded.clusters == snapshot.clusters
        assert loaded.cards == snapshot.cards
        assert loaded.meta == snapshot.meta
        assert loaded.pagerank == snapshot.pagerank
        assert loaded.collocations.to_obj() == snapshot.collocations.to_obj()

    def test_corrupted_gazetteer_fails_at_stage(self, built, tmp_path):
        _, _, (corpus, _, config) = built
        bad = tmp_path / "bad.tsv"
        bad.write_text("alphaxin\tonly-two-columns\n")
        with pytest.raises(PipelineError) as err:
            build_index(corpus, bad, config)
        assert err.value.stage == "gazetteer"
        assert "line 1" in str(err.value)

    def test_bad_corpus_fails_at_corpus_stage(self, built, tmp_path):
        _, _, (_, gazetteer, config) = built
        bad = tmp_path / "bad.jsonl"
        bad.write_text("{broken\n")
        with pytest.raises(PipelineError) as err:
            build_index(bad, gazetteer, config)
        assert err.value.stage == "corpus"

    def test_version_check_on_load(self, built, tmp_path):
        _, index_path, _ = built
        obj = json.loads(index_path.read_text())
        obj["format_version"] = 999
        tampered = tmp_path / "tampered.json"
        tampered.write_text(json.dumps(obj))
        with pytest.raises(SnapshotFormatError):
            load_index(tampered)

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "nope.json"
        path.write_text(json.dumps({"magic": "other", "format_version": 1}))
        with pytest.raises(SnapshotFormatError):
            load_index(path)


class TestEndpoints:
    def test_health(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "format_version": 1}

    def test_collocations(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/collocations", params={"term": "alphaxin", "k": 5})
        assert response.status_code == 200
        body = response.json()
        assert {n["id"] for n in body["nodes"]} == {"alphaxin", "betamab", "feverpox"}
        counts = {(e["a"], e["b"]): e["count"] for e in body["edges"]}
        # p1 title + p1 abstract + two p3 abstract sentences
        assert counts[("alphaxin", "feverpox")] == 4

    def test_collocations_unknown_term_404_with_suggestions(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/collocations", params={"term": "alphax"})
        assert response.status_code == 404
        assert response.json()["suggestions"] == ["alphaxin"]

    def test_collocations_missing_term_400(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/collocations")
        assert response.status_code == 400
        assert response.json()["field"] == "term"

    def test_collocations_bad_k_400(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/collocations", params={"term": "alphaxin", "k": "zero"})
        assert response.status_code == 400
        assert response.json()["field"] == "k"

    def test_collocation_papers(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/collocations/papers", params={"a": "feverpox", "b": "alphaxin"})
        assert response.status_code == 200
        assert [p["paper_id"] for p in response.json()["papers"]] == ["p1", "p3"]

    def test_collocation_papers_missing_edge_404(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/collocations/papers", params={"a": "alphaxin", "b": "nope"})
        assert response.status_code == 404

    def test_papers_with_repeated_facet_params(self, server):
        _, base, _ = server
        response = requests.get(
            f"{base}/papers",
            params=[("intervention", "alphaxin"), ("intervention", "betamab")],
        )
        assert response.status_code == 200
        body = response.json()
        assert [p["paper_id"] for p in body["papers"]] == ["p2", "p1", "p3"]
        assert body["histogram"] == {"2019": 1, "2020": 1, "2021": 1}

    def test_papers_conjunctive_across_facets(self, server):
        _, base, _ = server
        response = requests.get(
            f"{base}/papers",
            params=[("intervention", "alphaxin"), ("population", "elderly patients"),
                    ("from", "2020"), ("to", "2021")],
        )
        body = response.json()
        assert [p["paper_id"] for p in body["papers"]] == ["p1"]
        assert body["histogram"] == {"2020": 1, "2021": 0}

    def test_papers_bad_year_range_400(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/papers", params={"from": "2021", "to": "2019"})
        assert response.status_code == 400

    def test_papers_suggestions_present(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/papers", params={"intervention": "alphaxin"})
        suggestions = response.json()["suggestions"]
        assert suggestions["population"][0] == {"value": "elderly patients", "count": 2}

    def test_groups_ranked(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/groups", params={"topic": "drug trials"})
        assert response.status_code == 200
        body = response.json()
        assert body["groups"], "expected at least one group"
        first = body["groups"][0]
        assert "score" in first and "components" in first
        assert set(first["components"]) == {"overlap", "pagerank_topical", "pagerank_social"}
        assert "drug trials" in [t[0] for t in first["topics"]]

    def test_group_detail_and_links(self, server):
        _, base, _ = server
        gid = requests.get(f"{base}/groups").json()["groups"][0]["group_id"]
        detail = requests.get(f"{base}/groups/{gid}")
        assert detail.status_code == 200
        body = detail.json()
        assert body["members"]
        assert [p["paper_id"] for p in body["papers"]]
        links = requests.get(f"{base}/groups/{gid}/links")
        assert links.status_code == 200
        assert set(links.json()) == {"topical", "social"}

    def test_group_unknown_404(self, server):
        _, base, _ = server
        assert requests.get(f"{base}/groups/999").status_code == 404

    def test_group_bad_id_400(self, server):
        _, base, _ = server
        assert requests.get(f"{base}/groups/abc").status_code == 400

    def test_bridges(self, server):
        _, base, _ = server
        response = requests.get(f"{base}/bridges")
        assert response.status_code == 200
        assert "bridges" in response.json()

    def test_unknown_path_404(self, server):
        _, base, _ = server
        assert requests.get(f"{base}/nothing").status_code == 404

    def test_replay_is_byte_identical(self, server):
        _, base, _ = server
        url = f"{base}/papers?intervention=alphaxin"
        assert requests.get(url).content == requests.get(url).content


class TestReload:
    def test_reload_swaps_snapshot(self, built, tmp_path):
        snapshot, index_path, (corpus, gazetteer, _) = built
        api = ApiServer(snapshot, port=0)
        api.start_background()
        base = f"http://127.0.0.1:{api.port}"
        try:
            # Build a second index with a different paper set.
            rows = CORPUS_ROWS + [
                {"paper_id": "p9", "title": "Alphaxin revisited", "year": 2022,
                 "abstract": "Alphaxin and feverpox once more.", "authors": ["Ana Diaz"]}
            ]
            corpus2 = write_corpus(tmp_path / "corpus2.jsonl", rows)
            snapshot2 = build_index(corpus2, gazetteer, BuildConfig(min_collocation=0))
            path2 = tmp_path / "index2.json"
            save_index(snapshot2, path2)

            before = requests.get(f"{base}/papers").json()
            assert len(before["papers"]) == 3
            response = requests.post(f"{base}/admin/reload", json={"index_path": str(path2)})
            assert response.status_code == 200
            after = requests.get(f"{base}/papers").json()
            assert len(after["papers"]) == 4
        finally:
            api.shutdown()

    def test_reload_missing_body_400(self, server):
        _, base, _ = server
        assert requests.post(f"{base}/admin/reload", data=b"").status_code == 400

    def test_reload_bad_path_400(self, server):
        _, base, _ = server
        response = requests.post(f"{base}/admin/reload", json={"index_path": "/nonexistent.json"})
        assert response.status_code == 400


def test_concurrent_matches_sequential(server):
    _, base, _ = server
    urls = [
        f"{base}/health",
        f"{base}/collocations?term=alphaxin&k=5",
        f"{base}/collocations/papers?a=alphaxin&b=feverpox",
        f"{base}/papers?intervention=alphaxin",
        f"{base}/papers?intervention=alphaxin&intervention=betamab",
        f"{base}/groups?topic=drug+trials",
        f"{base}/groups/0",
        f"{base}/groups/0/links",
        f"{base}/bridges",
        f"{base}/papers?from=2019&to=2021",
    ] * 10
    sequential = [requests.get(url).content for url in urls]
    with concurrent.futures.ThreadPoolExecutor(max_workers=16) as pool:
        concurrent_bodies = list(pool.map(lambda u: requests.get(u).content, urls))
    assert concurrent_bodies == sequential
