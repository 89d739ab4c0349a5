"""Shared builders for the test suite.

Everything here is deliberately independent of the library internals it
is used to check: the dense TF-IDF oracle works on plain lists, and the
marker corpus is built with the stdlib random module.
"""

from __future__ import annotations

import math
import random


FILLER = [
    "apple", "bridge", "candle", "door", "engine", "fabric", "garden",
    "hollow", "island", "jacket", "kernel", "ladder", "marble", "north",
    "orchid", "pencil", "quartz", "ribbon", "saddle", "timber", "umbrella",
    "violet", "walnut", "xylem", "yellow", "zephyr", "anchor", "basket",
    "copper", "dusk",
]

POSITIVE_MARKERS = ["markeralpha", "markerbravo", "markercharlie"]
NEGATIVE_MARKERS = ["markerxray", "markeryankee", "markerzulu"]


def make_marker_corpus(
    n_docs: int, seed: int, fidelity: float = 0.9, doc_len: int = 30
) -> tuple[list[list[str]], list[int]]:
    """Binary-labelled token docs with class-specific marker tokens.

    Each marker is injected independently with probability ``fidelity``
    into documents of its class, on top of shared filler vocabulary, so
    the classes are separable but no single token is a perfect signal.
    """
    rng = random.Random(seed)
    docs: list[list[str]] = []
    labels: list[int] = []
    for i in range(n_docs):
        label = i % 2
        tokens = [rng.choice(FILLER) for _ in range(doc_len)]
        markers = POSITIVE_MARKERS if label else NEGATIVE_MARKERS
        for marker in markers:
            if rng.random() < fidelity:
                tokens.insert(rng.randrange(len(tokens) + 1), marker)
        docs.append(tokens)
        labels.append(label)
    return docs, labels


def make_random_token_docs(
    rng: random.Random, max_docs: int = 10, max_terms: int = 30
) -> list[list[str]]:
    """Small random corpus over a bounded synthetic vocabulary."""
    n_docs = rng.randint(1, max_docs)
    n_terms = rng.randint(1, max_terms)
    pool = [f"term{t:02d}" for t in range(n_terms)]
    docs = []
    for _ in range(n_docs):
        length = rng.randint(0, 40)
        docs.append([rng.choice(pool) for _ in range(length)])
    return docs


def dense_tfidf_oracle(
    docs: list[list[str]], min_df: int, stopwords: frozenset[str] = frozenset()
) -> tuple[list[str], list[list[float]]]:
    """Brute-force reference TF-IDF built over dense Python lists.

    Vocabulary keeps terms that appear in at least ``min_df`` docs and
    are not stop-words, sorted lexicographically.  Weights are raw count
    times ``ln((1+N)/(1+df)) + 1``, then l1-normalized per document.
    """
    n = len(docs)
    df: dict[str, int] = {}
    for doc in docs:
        for term in set(doc):
            df[term] = df.get(term, 0) + 1
    terms = sorted(t for t, c in df.items() if c >= min_df and t not in stopwords)
    idf = [math.log((1 + n) / (1 + df[t])) + 1.0 for t in terms]
    col = {t: j for j, t in enumerate(terms)}
    matrix = []
    for doc in docs:
        row = [0.0] * len(terms)
        for term in doc:
            j = col.get(term)
            if j is not None:
                row[j] += 1.0
        row = [v * idf[j] for j, v in enumerate(row)]
        total = sum(row)
        if total > 0:
            row = [v / total for v in row]
        matrix.append(row)
    return terms, matrix
