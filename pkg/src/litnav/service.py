"""HTTP JSON API over a loaded index snapshot.

Every endpoint is a pure function of (snapshot, query parameters), so
replaying a request returns a byte-identical body. Requests read the
current snapshot reference exactly once; ``POST /admin/reload`` swaps in
a freshly loaded snapshot atomically while in-flight requests finish on
the old one.
"""

from __future__ import annotations

import json
import logging
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .collocation import papers_for_pair, related_terms
from .corpus import normalize_author, normalize_value, paper_summary
from .errors import (
    EdgeNotFoundError,
    GroupNotFoundError,
    LitnavError,
    SnapshotFormatError,
    TermNotFoundError,
)
from .facets import FacetQuery, filter_papers, suggest_facets, time_histogram
from .groups import find_bridges, group_papers
from .search import GroupQuery, rank_groups, suggest_group_facets
from .snapshot import IndexSnapshot, load_index

log = logging.getLogger(__name__)

DEFAULT_NEIGHBORS = 10
DEFAULT_GROUPS = 20
DEFAULT_SUGGESTIONS = 10


class BadRequest(LitnavError):
    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field


class SnapshotHolder:
    """Atomic reference to the currently served snapshot."""

    def __init__(self, snapshot: IndexSnapshot):
        self._snapshot = snapshot
        self._lock = threading.Lock()

    def get(self) -> IndexSnapshot:
        return self._snapshot

    def swap(self, snapshot: IndexSnapshot) -> None:
        with self._lock:
            self._snapshot = snapshot


def _single(params: dict, name: str, required: bool = False) -> str | None:
    values = params.get(name, [])
    if not values:
        if required:
            raise BadRequest(f"query parameter {name!r} is required", field=name)
        return None
    if len(values) > 1:
        raise BadRequest(f"query parameter {name!r} must appear once", field=name)
    return values[0]

def _int_param(params: dict, name: str, default: int | None = None, minimum: int | None = None) -> int | None:
    raw = _single(params, name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise BadRequest(f"query parameter {name!r} must be an integer", field=name) from None
    if minimum is not None and value < minimum:
        raise BadRequest(f"query parameter {name!r} must be >= {minimum}", field=name)
    return value


def handle_health(snapshot: IndexSnapshot, params: dict) -> tuple[int, dict]:
    return 200, {"status": "ok", "format_version": snapshot.format_version}


def handle_collocations(snapshot: IndexSnapshot, params: dict) -> tuple[int, dict]:
    term = _single(params, "term", required=True)
    k = _int_param(params, "k", default=DEFAULT_NEIGHBORS, minimum=1)
    try:
        neighborhood = related_terms(snapshot.collocations, normalize_value(term), k)
    except TermNotFoundError as exc:
        return 404, {"error": str(exc), "suggestions": exc.suggestions}
    return 200, neighborhood.to_obj()


def handle_collocation_papers(snapshot: IndexSnapshot, params: dict) -> tuple[int, dict]:
    id_a = _single(params, "a", required=True)
    id_b = _single(params, "b", required=True)
    try:
        papers = papers_for_pair(
            snapshot.collocations, snapshot.corpus, normalize_value(id_a), normalize_value(id_b)
        )
    except EdgeNotFoundError as exc:
        return 404, {"error": str(exc)}
    return 200, {"papers": [paper_summary(p) for p in papers]}


def _facet_query(params: dict) -> FacetQuery:
    year_from = _int_param(params, "from")
    year_to = _int_param(params, "to")
    year_range = None
    if (year_from is None) != (year_to is None):
        raise BadRequest("'from' and 'to' must be provided together", field="from" if year_from is None else "to")
    if year_from is not None:
        if year_from > year_to:
            raise BadRequest("'from' must not exceed 'to'", field="from")
        year_range = (year_from, year_to)
    return FacetQuery(
        population=frozenset(normalize_value(v) for v in params.get("population", [])),
        intervention=frozenset(normalize_value(v) for v in params.get("intervention", [])),
        outcome=frozenset(normalize_value(v) for v in params.get("outcome", [])),
        author=frozenset(normalize_author(v) for v in params.get("author", [])),
        affiliation=frozenset(normalize_value(v) for v in params.get("affiliation", [])),
        journal=frozenset(normalize_value(v) for v in params.get("journal", [])),
        year_range=year_range,
    )


def handle_papers(snapshot: IndexSnapshot, params: dict) -> tuple[int, dict]:
    query = _facet_query(params)
    index = snapshot.facet_index
    matched = filter_papers(index, query)
    histogram = time_histogram(index, query)
    suggestions = suggest_facets(index, query, DEFAULT_SUGGESTIONS)
    return 200, {
        "papers": [paper_summary(snapshot.corpus.by_id[pid]) for pid in matched],
        "histogram": {str(year): count for year, count in histogram.items()},
        "suggestions": {
            kind: [{"value": value, "count": count} for value, count in rows]
            for kind, rows in suggestions.items()
        },
    }


def _group_query(params: dict) -> GroupQuery:
    return GroupQuery(
        topics=frozenset(normalize_value(v) for v in params.get("topic", [])),
        authors=frozenset(normalize_author(v) for v in params.get("author", [])),
        affiliations=frozenset(normalize_value(v) for v in params.get("affiliation", [])),
    )


def _edge_rows(snapshot: IndexSnapshot, pairs_filter) -> dict:
    topical = [
        {"a": a, "b": b, "similarity": sim}
        for (a, b), sim in sorted(snapshot.meta.topical_edges.items())
        if pairs_filter(a, b)
    ]
    social = [
        {"a": a, "b": b, "shared_authors": n}
        for (a, b), n in sorted(snapshot.meta.social_edges.items())
        if pairs_filter(a, b)
    ]
    return {"topical": topical, "social": social}


def handle_groups(snapshot: IndexSnapshot, params: dict) -> tuple[int, dict]:
    query = _group_query(params)
    k = _int_param(params, "k", default=DEFAULT_GROUPS, minimum=1)
    ranked = rank_groups(query, snapshot.cards, snapshot.meta, pagerank_tables=snapshot.pagerank)
    top = ranked[:k]
    suggestions = suggest_group_facets(query, ranked, snapshot.cards, DEFAULT_SUGGESTIONS)
    shown = {r.group_id for r in top}
    groups = []
    for r in top:
        card = snapshot.cards_by_id[r.group_id]
        entry = card.to_obj()
        entry.update(r.to_obj())
        groups.append(entry)
    return 200, {
        "groups": groups,
        "edges": _edge_rows(snapshot, lambda a, b: a in shown and b in shown),
        "suggestions": {
            kind: [{"value": value, "count": count} for value, count in rows]
            for kind, rows in suggestions.items()
        },
    }


def _group_or_404(snapshot: IndexSnapshot, group_id: int):
    if group_id not in snapshot.cards_by_id:
        raise GroupNotFoundError(group_id)
    return snapshot.cards_by_id[group_id]


def handle_group_detail(snapshot: IndexSnapshot, group_id: int) -> tuple[int, dict]:
    card = _group_or_404(snapshot, group_id)
    members = snapshot.clusters.clusters[group_id]
    papers = group_papers(members, snapshot.corpus, snapshot.build_config.min_year)
    obj = card.to_obj(full=True)
    obj["members"] = sorted(members)
    obj["papers"] = [paper_summary(p) for p in papers]
    return 200, obj


def handle_group_links(snapshot: IndexSnapshot, group_id: int) -> tuple[int, dict]:
    _group_or_404(snapshot, group_id)
    return 200, _edge_rows(snapshot, lambda a, b: group_id in (a, b))


def handle_bridges(snapshot: IndexSnapshot, params: dict) -> tuple[int, dict]:
    rows = [
        {"author": author, "groups": [a, b]} for author, (a, b) in find_bridges(snapshot.clusters)
    ]
    return 200, {"bridges": rows}


def route_get(snapshot: IndexSnapshot, path: str, params: dict) -> tuple[int, dict]:
    if path == "/health":
        return handle_health(snapshot, params)
    if path == "/collocations":
        return handle_collocations(snapshot, params)
    if path == "/collocations/papers":
        return handle_collocation_papers(snapshot, params)
    if path == "/papers":
        return handle_papers(snapshot, params)
    if path == "/groups":
        return handle_groups(snapshot, params)
    if path == "/bridges":
        return handle_bridges(snapshot, params)
    parts = [p for p in path.split("/") if p]
    if len(parts) >= 2 and parts[0] == "groups":
        try:
            group_id = int(parts[1])
        except ValueError:
            raise BadRequest("group id must be an integer", field="id") from None
        try:
            if len(parts) == 2:
                return handle_group_detail(snapshot, group_id)
            if len(parts) == 3 and parts[2] == "links":
                return handle_group_links(snapshot, group_id)
        except GroupNotFoundError as exc:
            return 404, {"error": str(exc)}
    return 404, {"error": f"no such endpoint: {path}"}


class ApiServer:
    """Threaded HTTP server over a swappable snapshot reference."""

    def __init__(self, snapshot: IndexSnapshot, host: str = "127.0.0.1", port: int = 8080):
        self.holder = SnapshotHolder(snapshot)
        handler = _make_handler(self.holder)
        self.httpd = ThreadingHTTPServer((host, port), handler)
        self._thread: threading.Thread | None = None

    @property
    def port(self) -> int:
        return self.httpd.server_address[1]

    def serve_forever(self) -> None:
        self.httpd.serve_forever()

    def start_background(self) -> None:
        self._thread = threading.Thread(target=self.httpd.serve_forever, daemon=True)
        self._thread.start()

    def shutdown(self) -> None:
        self.httpd.shutdown()
        self.httpd.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)


def _make_handler(holder: SnapshotHolder):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def _send(self, status: int, obj: dict) -> None:
            body = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self) -> None:  # noqa: N802 (http.server API)
            snapshot = holder.get()
            parsed = urlparse(self.path)
            params = parse_qs(parsed.query, keep_blank_values=False)
            try:
                status, obj = route_get(snapshot, parsed.path, params)
            except BadRequest as exc:
                status, obj = 400, {"error": str(exc), "field": exc.field}
            except Exception as exc:  # pragma: no cover - defensive
                log.exception("request failed: %s", self.path)
                status, obj = 500, {"error": f"internal error: {exc}"}
            self._send(status, obj)

        def do_POST(self) -> None:  # noqa: N802
            parsed = urlparse(self.path)
            if parsed.path != "/admin/reload":
                self._send(404, {"error": f"no such endpoint: {parsed.path}"})
                return
            length = int(self.headers.get("Content-Length", 0))
            raw = self.rfile.read(length) if length else b"{}"
            try:
                body = json.loads(raw.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError):
                self._send(400, {"error": "request body must be a JSON object", "field": "body"})
                return
            index_path = body.get("index_path") if isinstance(body, dict) else None
            if not isinstance(index_path, str) or not index_path:
                self._send(400, {"error": "field 'index_path' is required", "field": "index_path"})
                return
            try:
                snapshot = load_index(index_path)
            except SnapshotFormatError as exc:
                self._send(400, {"error": str(exc), "field": "index_path"})
                return
            holder.swap(snapshot)
            self._send(200, {"status": "reloaded", "format_version": snapshot.format_version})

        def log_message(self, format: str, *args) -> None:  # noqa: A002
            log.debug("%s - %s", self.address_string(), format % args)

    return Handler


def serve(index_path: str | Path, host: str = "127.0.0.1", port: int = 8080) -> ApiServer:
    """Load a snapshot file and return a ready (unstarted) API server."""
    if not Path(index_path).exists():
        raise SnapshotFormatError(f"index file not found: {index_path}")
    snapshot = load_index(index_path)
    return ApiServer(snapshot, host=host, port=port)
