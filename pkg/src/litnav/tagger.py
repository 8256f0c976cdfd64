"""Dictionary-based entity tagging.

A gazetteer maps lowercase surface terms to canonical ids and entity
types. Tagging is case-insensitive, longest-match-first, left-to-right
and non-overlapping, with matches anchored at word boundaries
(transitions between alphanumeric and non-alphanumeric characters, so
hyphens inside terms like "sars-cov-2" behave as term characters).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import GazetteerLoadError

ENTITY_TYPES = ("protein", "gene", "cell", "drug", "disease")


@dataclass(frozen=True)
class EntityMention:
    """One tagged span; ``surface`` is the original sentence slice."""

    canonical_id: str
    entity_type: str
    start: int
    end: int
    surface: str


class Gazetteer:
    """Immutable surface-term dictionary; lookups are lowercase-exact."""

    def __init__(self, entries: dict[str, tuple[str, str]]):
        self._entries = dict(entries)
        self._max_len = max((len(t) for t in self._entries), default=0)

    @property
    def entries(self) -> dict[str, tuple[str, str]]:
        return dict(self._entries)

    @property
    def max_term_length(self) -> int:
        return self._max_len

    def lookup(self, term: str) -> tuple[str, str] | None:
        return self._entries.get(term.lower())

    def __contains__(self, term: str) -> bool:
        return term.lower() in self._entries

    def __len__(self) -> int:
        return len(self._entries)


def load_gazetteer(path: str | Path) -> Gazetteer:
    """Load a TSV gazetteer: ``surface_term<TAB>canonical_id<TAB>entity_type``.

    ``#``-prefixed lines are comments. Raises :class:`GazetteerLoadError`
    (with line number) on malformed lines, duplicate surface terms, or
    unknown entity types.
    """
    entries: dict[str, tuple[str, str]] = {}
    text = Path(path).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise GazetteerLoadError(
                f"expected 3 tab-separated columns, got {len(parts)}", line=line_no
            )
        surface, canonical_id, entity_type = (p.strip() for p in parts)
        if not surface:
            raise GazetteerLoadError("empty surface term", line=line_no)
        if not canonical_id:
            raise GazetteerLoadError("empty canonical id", line=line_no)
        if entity_type not in ENTITY_TYPES:
            raise GazetteerLoadError(
                f"unknown entity type {entity_type!r} (expected one of {', '.join(ENTITY_TYPES)})",
                line=line_no,
            )
        surface = surface.lower()
        if surface in entries:
            raise GazetteerLoadError(f"duplicate surface term {surface!r}", line=line_no)
        entries[surface] = (canonical_id, entity_type)
    return Gazetteer(entries)


def safe_lower(text: str) -> str:
    """Length-preserving lowercase so character offsets stay valid."""
    lowered = text.lower()
    if len(lowered) == len(text):
        return lowered
    return "".join(c.lower() if len(c.lower()) == 1 else c for c in text)


def tag_entities(sentence: str, gazetteer: Gazetteer) -> list[EntityMention]:
    """Tag gazetteer terms in one sentence.

    Returns mentions ordered by start offset; no two mentions overlap, and
    the result is invariant to sentence case.
    """
    mentions: list[EntityMention] = []
    lowered = safe_lower(sentence)
    n = len(lowered)
    max_len = gazetteer.max_term_length
    i = 0
    while i < n:
        if i > 0 and lowered[i - 1].isalnum() and lowered[i].isalnum():
            i += 1
            continue
        matched_end = 0
        hit = None
        for length in range(min(max_len, n - i), 0, -1):
            end = i + length
            if end < n and lowered[end].isalnum() and lowered[end - 1].isalnum():
                continue
            found = gazetteer.lookup(lowered[i:end])
            if found is not None:
                matched_end, hit = end, found
                break
        if hit is not None:
            canonical_id, entity_type = hit
            mentions.append(
                EntityMention(canonical_id, entity_type, i, matched_end, sentence[i:matched_end])
            )
            i = matched_end
        else:
            i += 1
    return mentions
