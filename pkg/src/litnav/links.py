"""Meta-edges between groups: topical affinity and social affinity.

Topical affinity is the cosine similarity between groups' TF-IDF-weighted
average topic embeddings; only each group's top-most similar neighbors
become edges. Social affinity is the number of shared authors between two
clusters. The default embedder hashes character trigrams, so builds are
deterministic without a model download; precomputed vectors can be loaded
from file to swap in real language-model embeddings.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from .communities import ClusterSet
from .errors import EmbeddingError
from .groups import GroupCard

Pair = tuple[int, int]


class EmbeddingProvider:
    """Deterministic topic-to-vector mapping; vectors are L2-normalized."""

    dimension: int

    def embed(self, topic: str) -> np.ndarray:
        raise NotImplementedError


class TrigramHashEmbedder(EmbeddingProvider):
    """Feature-hash character trigrams of the lowercased, padded topic.

    Each trigram adds +/-1 (sign taken from the hash) to one of
    ``dimension`` buckets; the result is L2-normalized. Identical strings
    embed identically across runs and processes.
    """

    def __init__(self, dimension: int = 256):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        self.dimension = dimension

    def embed(self, topic: str) -> np.ndarray:
        normalized = topic.strip().lower()
        if not normalized:
            raise EmbeddingError("cannot embed an empty topic")
        padded = f"#{normalized}#"
        vector = np.zeros(self.dimension, dtype=np.float64)
        for i in range(len(padded) - 2):
            trigram = padded[i : i + 3]
            digest = hashlib.blake2b(trigram.encode("utf-8"), digest_size=8).digest()
            value = int.from_bytes(digest, "big")
            bucket = value % self.dimension
            sign = 1.0 if (value >> 63) & 1 == 0 else -1.0
            vector[bucket] += sign
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            raise EmbeddingError(f"trigram features cancelled out for topic {topic!r}")
        return vector / norm


class FileEmbeddingProvider(EmbeddingProvider):
    """Vectors from a ``topic<TAB>v1,...,vD`` file, trigram-hash fallback.

    Vectors are L2-normalized on load; topics absent from the file fall
    back to the deterministic trigram embedder at the same dimension.
    """

    def __init__(self, path: str | Path):
        vectors: dict[str, np.ndarray] = {}
        dimension: int | None = None
        for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                topic, values = line.split("\t")
                vector = np.array([float(v) for v in values.split(",")], dtype=np.float64)
            except ValueError as exc:
                raise EmbeddingError(f"line {line_no}: malformed embedding row: {exc}") from exc
            if dimension is None:
                dimension = vector.size
            elif vector.size != dimension:
                raise EmbeddingError(
                    f"line {line_no}: dimension {vector.size} != {dimension}"
                )
            norm = float(np.linalg.norm(vector))
            if norm == 0.0:
                raise EmbeddingError(f"line {line_no}: zero vector for topic {topic!r}")
            vectors[topic.strip().lower()] = vector / norm
        if dimension is None:
            raise EmbeddingError("embedding file has no vectors")
        self.dimension = dimension
        self._vectors = vectors
        self._fallback = TrigramHashEmbedder(dimension)

    def embed(self, topic: str) -> np.ndarray:
        vector = self._vectors.get(topic.strip().lower())
        if vector is not None:
            return vector
        return self._fallback.embed(topic)


def default_embed(topic: str, dimension: int = 256) -> np.ndarray:
    """One-off trigram-hash embedding (see :class:`TrigramHashEmbedder`)."""
    return TrigramHashEmbedder(dimension).embed(topic)


def group_vector(card: GroupCard, provider: EmbeddingProvider) -> np.ndarray | None:
    """TF-IDF weighted average of the card's top-k topic embeddings.

    Only topics with positive score contribute; the result is not
    renormalized (cosine handles scale). Returns None when the card has no
    positive-score topics, which excludes the group from the topical layer.
    """
    weighted = [(topic, score) for topic, score in card.top_topics if score > 0]
    if not weighted:
        return None
    total = np.zeros(provider.dimension, dtype=np.float64)
    score_sum = 0.0
    for topic, score in weighted:
        total += score * provider.embed(topic)
        score_sum += score
    return total / score_sum


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.dot(u, v) / (np.linalg.norm(u) * np.linalg.norm(v)))


def topical_links(
    cards, provider: EmbeddingProvider, k_link: int = 3
) -> tuple[dict[Pair, float], tuple[int, ...]]:
    """Topical-affinity edge layer.

    Each group links to its ``k_link`` most similar other groups by cosine
    similarity (ties by group id); the edge set is the union over groups.
    Returns (edges, excluded_group_ids); excluded groups had no usable
    topic vector.
    """
    vectors: dict[int, np.ndarray] = {}
    excluded: list[int] = []
    for card in sorted(cards, key=lambda c: c.group_id):
        vector = group_vector(card, provider)
        if vector is None or float(np.linalg.norm(vector)) == 0.0:
            excluded.append(card.group_id)
        else:
            vectors[card.group_id] = vector
    ids = sorted(vectors)
    similarities: dict[Pair, float] = {}
    for a, b in combinations(ids, 2):
        similarities[(a, b)] = cosine(vectors[a], vectors[b])
    edges: dict[Pair, float] = {}
    for gid in ids:
        ranked = sorted(
            (
                (other, similarities[(gid, other) if gid < other else (other, gid)])
                for other in ids
                if other != gid
            ),
            key=lambda item: (-item[1], item[0]),
        )
        for other, similarity in ranked[:k_link]:
            key = (gid, other) if gid < other else (other, gid)
            edges[key] = similarity
    return edges, tuple(excluded)


def social_links(clusters: ClusterSet) -> dict[Pair, int]:
    """Social-affinity edge layer: shared-author counts per cluster pair."""
    weights: dict[Pair, int] = {}
    for ids in clusters.membership.values():
        for a, b in combinations(ids, 2):
            weights[(a, b)] = weights.get((a, b), 0) + 1
    return weights


@dataclass(frozen=True)
class MetaGraph:
    """Group-level graph with topical and social edge layers."""

    group_ids: tuple[int, ...]
    topical_edges: dict[Pair, float]
    social_edges: dict[Pair, int]
    excluded_topical: tuple[int, ...] = ()

    def layer(self, name: str) -> dict[Pair, float]:
        if name == "topical":
            return dict(self.topical_edges)
        if name == "social":
            return {k: float(v) for k, v in self.social_edges.items()}
        raise ValueError(f"unknown layer {name!r}")

    def edges_for(self, group_id: int, name: str) -> dict[Pair, float]:
        return {
            pair: weight
            for pair, weight in self.layer(name).items()
            if group_id in pair
        }

    def to_obj(self) -> dict:
        return {
            "group_ids": list(self.group_ids),
            "topical": [[a, b, sim] for (a, b), sim in sorted(self.topical_edges.items())],
            "social": [[a, b, n] for (a, b), n in sorted(self.social_edges.items())],
            "excluded_topical": list(self.excluded_topical),
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "MetaGraph":
        return cls(
            group_ids=tuple(obj["group_ids"]),
            topical_edges={(a, b): float(s) for a, b, s in obj["topical"]},
            social_edges={(a, b): int(n) for a, b, n in obj["social"]},
            excluded_topical=tuple(obj["excluded_topical"]),
        )


def build_meta_graph(
    cards, clusters: ClusterSet, provider: EmbeddingProvider, k_link: int = 3
) -> MetaGraph:
    topical, excluded = topical_links(cards, provider, k_link)
    return MetaGraph(
        group_ids=tuple(card.group_id for card in sorted(cards, key=lambda c: c.group_id)),
        topical_edges=topical,
        social_edges=social_links(clusters),
        excluded_topical=excluded,
    )
