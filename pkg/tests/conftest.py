import pytest


def pytest_runtest_logreport(report):
    """One visible PASS/FAIL line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\n[{outcome}] {name}")


@pytest.fixture
def sample_data_paths():
    from pathlib import Path

    root = Path(__file__).resolve().parent.parent
    corpus = root / "data" / "sample_corpus.jsonl"
    gazetteer = root / "data" / "sample_gazetteer.tsv"
    assert corpus.exists() and gazetteer.exists(), "bundled sample data missing"
    return corpus, gazetteer
