"""Corpus data model: JSONL ingestion and validation, sentence splitting,
and author-name normalization.

The corpus is a UTF-8 JSONL file, one paper per line. Required keys are
``paper_id`` (string), ``title`` (string) and ``year`` (integer); optional
keys are ``abstract``, ``authors``, ``affiliations``, ``journal``,
``entities`` (precomputed mentions as ``{"text", "id", "type"}`` objects),
``facets`` (``{"population", "intervention", "outcome"}`` string arrays)
and ``topics``. Everything downstream derives from one immutable
:class:`CorpusSnapshot`.
"""

from __future__ import annotations

import hashlib
import json
import logging
import re
from dataclasses import asdict, dataclass
from functools import cached_property
from pathlib import Path

from .errors import CorpusLoadError

log = logging.getLogger(__name__)

YEAR_MIN = 1800
YEAR_MAX = 2100

# Terminators that never end a sentence. Matched case-sensitively against
# the text ending at a candidate split point.
ABBREVIATIONS = ("Fig.", "et al.", "e.g.", "i.e.", "vs.", "Dr.", "No.")

_SENTENCE_END = frozenset(".!?")
_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class BuildConfig:
    """All knobs of the index build; echoed into every snapshot.

    ``min_year`` bounds both the co-authorship window and group paper
    lists. ``min_collocation`` is the aggregate count an entity needs to
    stay in the collocation graph. ``max_paper_authors`` keeps
    hyper-authored papers from contributing dense co-author cliques.
    """

    min_year: int = 2017
    min_collocation: int = 2
    max_paper_authors: int = 50
    max_cluster_size: int = 120
    card_top_k: int = 20
    k_link: int = 3
    embedding_dim: int = 256
    embedding_file: str | None = None
    damping: float = 0.85
    pagerank_epsilon: float = 1e-10
    pagerank_max_iters: int = 200
    label_prop_max_iters: int = 100

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, obj: dict) -> "BuildConfig":
        return cls(**obj)


@dataclass(frozen=True)
class AuthorRef:
    """An author as written on a paper plus the normalized identity key."""

    raw_name: str
    key: str


@dataclass(frozen=True)
class EntityAnnotation:
    """A precomputed entity mention supplied with the corpus."""

    text: str
    canonical_id: str
    entity_type: str


@dataclass(frozen=True)
class FacetAnnotation:
    """Population / intervention / outcome labels of one paper.

    Each list is deduplicated and lowercase-normalized at load time.
    """

    population: tuple[str, ...] = ()
    intervention: tuple[str, ...] = ()
    outcome: tuple[str, ...] = ()


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    title: str
    year: int
    abstract: str = ""
    authors: tuple[AuthorRef, ...] = ()
    affiliations: tuple[str, ...] = ()
    journal: str | None = None
    entities: tuple[EntityAnnotation, ...] | None = None
    facets: FacetAnnotation | None = None
    topics: tuple[str, ...] = ()


@dataclass(frozen=True)
class CorpusSnapshot:
    """Immutable, validated corpus plus the configuration that loaded it.

    ``content_hash`` digests the input bytes together with the build
    configuration, so identical inputs always hash identically.
    """

    records: tuple[PaperRecord, ...]
    build_config: BuildConfig
    content_hash: str

    @cached_property
    def by_id(self) -> dict[str, PaperRecord]:
        return {r.paper_id: r for r in self.records}

    @cached_property
    def papers_by_author(self) -> dict[str, tuple[PaperRecord, ...]]:
        """Author key -> papers listing that author, in file order."""
        out: dict[str, list[PaperRecord]] = {}
        for record in self.records:
            for author in record.authors:
                out.setdefault(author.key, []).append(record)
        return {k: tuple(v) for k, v in out.items()}

    def __len__(self) -> int:
        return len(self.records)


def normalize_author(raw_name: str) -> str:
    """Collapse an author name to a deterministic identity key.

    Lowercases, strips punctuation, and collapses internal whitespace:
    ``"Derek A.T. Cummings"`` -> ``"derek at cummings"``. Returns an empty
    string when the input has no letters or digits.
    """
    kept = "".join(c for c in raw_name if c.isalnum() or c.isspace())
    return _WHITESPACE.sub(" ", kept).strip().lower()


def normalize_value(value: str) -> str:
    """Lowercase and whitespace-collapse a facet/topic/affiliation value."""
    return _WHITESPACE.sub(" ", value.strip()).lower()


def _is_abbreviation(text: str, end: int, abbreviations: tuple[str, ...]) -> bool:
    head = text[: end + 1]
    for abbr in abbreviations:
        if head.endswith(abbr):
            prev = end - len(abbr)
            if prev < 0 or not text[prev].isalnum():
                return True
    return False


def split_sentences(text: str, abbreviations: tuple[str, ...] = ABBREVIATIONS) -> list[str]:
    """Split text into sentences.

    A sentence ends at ``.``, ``!`` or ``?`` followed by whitespace and an
    uppercase letter or digit, unless the terminator closes a known
    abbreviation ("Fig.", "et al.", ...). The concatenation of the returned
    sentences plus the skipped separators covers the input; each returned
    sentence re-splits to itself alone.
    """
    sentences: list[str] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        if text[i] in _SENTENCE_END and not _is_abbreviation(text, i, abbreviations):
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            if j > i + 1 and j < n and (text[j].isupper() or text[j].isdigit()):
                sentence = text[start : i + 1].strip()
                if sentence:
                    sentences.append(sentence)
                start = j
                i = j
                continue
        i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _require(obj: dict, key: str, kind: type, line: int):
    if key not in obj:
        raise CorpusLoadError(f"missing required field {key!r}", line=line)
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise CorpusLoadError(f"field {key!r} must be {kind.__name__}", line=line)
    return value


def _string_list(obj: dict, key: str, line: int) -> list[str]:
    value = obj.get(key, [])
    if value is None:
        return []
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise CorpusLoadError(f"field {key!r} must be an array of strings", line=line)
    return value


def _parse_authors(obj: dict, line: int) -> tuple[AuthorRef, ...]:
    authors = []
    for raw in _string_list(obj, "authors", line):
        key = normalize_author(raw)
        if not key:
            log.warning("line %d: dropping author %r (empty key after normalization)", line, raw)
            continue
        authors.append(AuthorRef(raw_name=raw, key=key))
    return tuple(authors)


def _parse_facets(obj: dict, line: int) -> FacetAnnotation | None:
    raw = obj.get("facets")
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise CorpusLoadError("field 'facets' must be an object", line=line)
    parts = {}
    for kind in ("population", "intervention", "outcome"):
        values = raw.get(kind, [])
        if not isinstance(values, list) or any(not isinstance(v, str) for v in values):
            raise CorpusLoadError(f"facets.{kind} must be an array of strings", line=line)
        parts[kind] = tuple(sorted({normalize_value(v) for v in values if v.strip()}))
    return FacetAnnotation(**parts)


def _parse_entities(obj: dict, line: int) -> tuple[EntityAnnotation, ...] | None:
    raw = obj.get("entities")
    if raw is None:
        return None
    if not isinstance(raw, list):
        raise CorpusLoadError("field 'entities' must be an array", line=line)
    mentions = []
    for item in raw:
        if not isinstance(item, dict) or not all(isinstance(item.get(k), str) for k in ("text", "id", "type")):
            raise CorpusLoadError("each entity needs string fields 'text', 'id', 'type'", line=line)
        if not item["text"].strip() or not item["id"].strip():
            raise CorpusLoadError("entity 'text' and 'id' must be nonempty", line=line)
        mentions.append(
            EntityAnnotation(text=item["text"], canonical_id=item["id"], entity_type=item["type"])
        )
    return tuple(mentions)


def _parse_record(obj: dict, line: int) -> PaperRecord:
    paper_id = _require(obj, "paper_id", str, line)
    if not paper_id.strip():
        raise CorpusLoadError("field 'paper_id' must be nonempty", line=line)
    title = _require(obj, "title", str, line)
    year = _require(obj, "year", int, line)
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise CorpusLoadError(f"year {year} outside [{YEAR_MIN}, {YEAR_MAX}]", line=line)
    abstract = obj.get("abstract", "")
    if not isinstance(abstract, str):
        raise CorpusLoadError("field 'abstract' must be a string", line=line)
    journal = obj.get("journal")
    if journal is not None and not isinstance(journal, str):
        raise CorpusLoadError("field 'journal' must be a string", line=line)
    return PaperRecord(
        paper_id=paper_id,
        title=title,
        year=year,
        abstract=abstract,
        authors=_parse_authors(obj, line),
        affiliations=tuple(normalize_value(a) for a in _string_list(obj, "affiliations", line) if a.strip()),
        journal=normalize_value(journal) if journal else None,
        entities=_parse_entities(obj, line),
        facets=_parse_facets(obj, line),
        topics=tuple(sorted({normalize_value(t) for t in _string_list(obj, "topics", line) if t.strip()})),
    )


def load_corpus(path: str | Path, config: BuildConfig | None = None) -> CorpusSnapshot:
    """Load and validate a JSONL corpus into an immutable snapshot.

    Raises :class:`CorpusLoadError` with the offending line number on
    malformed JSON, duplicate paper ids, missing required fields, or years
    outside [1800, 2100]. An empty file yields an empty snapshot.
    """
    config = config or BuildConfig()
    raw = Path(path).read_bytes()
    records: list[PaperRecord] = []
    seen: dict[str, int] = {}
    for line_no, line in enumerate(raw.decode("utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusLoadError(f"malformed JSON: {exc.msg}", line=line_no) from exc
        if not isinstance(obj, dict):
            raise CorpusLoadError("each line must be a JSON object", line=line_no)
        record = _parse_record(obj, line_no)
        if record.paper_id in seen:
            raise CorpusLoadError(
                f"duplicate paper_id {record.paper_id!r} (first seen on line {seen[record.paper_id]})",
                line=line_no,
            )
        seen[record.paper_id] = line_no
        records.append(record)
    digest = hashlib.sha256()
    digest.update(raw)
    digest.update(json.dumps(config.to_dict(), sort_keys=True).encode("utf-8"))
    return CorpusSnapshot(records=tuple(records), build_config=config, content_hash=digest.hexdigest())


def record_to_obj(record: PaperRecord) -> dict:
    """JSON-ready form of a record, matching the corpus input schema."""
    obj: dict = {
        "paper_id": record.paper_id,
        "title": record.title,
        "year": record.year,
        "abstract": record.abstract,
        "authors": [a.raw_name for a in record.authors],
        "affiliations": list(record.affiliations),
    }
    if record.journal is not None:
        obj["journal"] = record.journal
    if record.entities is not None:
        obj["entities"] = [
            {"text": e.text, "id": e.canonical_id, "type": e.entity_type} for e in record.entities
        ]
    if record.facets is not None:
        obj["facets"] = {
            "population": list(record.facets.population),
            "intervention": list(record.facets.intervention),
            "outcome": list(record.facets.outcome),
        }
    if record.topics:
        obj["topics"] = list(record.topics)
    return obj


def dump_corpus(records, path: str | Path) -> None:
    """Write records back out as JSONL (the inverse of :func:`load_corpus`)."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record_to_obj(record), ensure_ascii=False, sort_keys=True))
            fh.write("\n")


def paper_summary(record: PaperRecord) -> dict:
    """Compact display form used by paper lists and drill-down panels."""
    return {
        "paper_id": record.paper_id,
        "title": record.title,
        "year": record.year,
        "journal": record.journal,
        "authors": [a.raw_name for a in record.authors],
    }
