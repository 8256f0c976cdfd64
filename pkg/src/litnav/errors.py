"""Exception types shared across the package."""

from __future__ import annotations


class LitnavError(Exception):
    """Base class for all errors raised by this package."""


class CorpusLoadError(LitnavError):
    """Corpus file failed to parse or validate; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GazetteerLoadError(LitnavError):
    """Gazetteer file failed to parse or validate; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TermNotFoundError(LitnavError):
    """Queried term is not a node of the collocation graph.

    ``suggestions`` holds up to five known terms ranked by shared prefix
    length with the query.
    """

    def __init__(self, term: str, suggestions: list[str]):
        super().__init__(f"unknown term {term!r}")
        self.term = term
        self.suggestions = suggestions


class EdgeNotFoundError(LitnavError):
    """No collocation edge exists between the two requested entities."""

    def __init__(self, id_a: str, id_b: str):
        super().__init__(f"no collocation edge between {id_a!r} and {id_b!r}")
        self.id_a = id_a
        self.id_b = id_b


class GroupNotFoundError(LitnavError):
    """Requested group id does not exist in the snapshot."""

    def __init__(self, group_id: int):
        super().__init__(f"unknown group {group_id}")
        self.group_id = group_id


class EmbeddingError(LitnavError):
    """A topic could not be embedded (empty input or degenerate vector)."""


class SnapshotFormatError(LitnavError):
    """Index snapshot file is missing, corrupt, or has an unsupported version."""


class PipelineError(LitnavError):
    """Index build failed; ``stage`` names the pipeline step that raised."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"build failed at stage {stage!r}: {cause}")
        self.stage = stage
        self.cause = cause
