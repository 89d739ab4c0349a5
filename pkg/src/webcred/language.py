"""Character-trigram language identification.

A small built-in detector replaces the external language-detection service:
the corpus filter only needs a coarse English-vs-not decision.  Each
language profile is a character-trigram frequency vector built from the
bundled snippets in :mod:`webcred._langdata`; a document is scored by
cosine similarity against every profile and assigned the best match.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache

from ._langdata import PROFILE_TEXTS

MIN_TEXT_CHARS = 20

_NON_LETTER = re.compile(r"[^a-zà-öø-ÿœßñçа-яά-ώ]+")


def _trigram_counts(text: str) -> dict[str, int]:
    """Trigram histogram of lowercased text with non-letters as gaps."""
    normalized = _NON_LETTER.sub(" ", text.lower())
    normalized = " " + re.sub(r"\s+", " ", normalized).strip() + " "
    counts: dict[str, int] = {}
    for i in range(len(normalized) - 2):
        gram = normalized[i : i + 3]
        if gram == "   " or gram.isspace():
            continue
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def _cosine(a: dict[str, int], b: dict[str, int]) -> float:
    if not a or not b:
        return 0.0
    if len(b) < len(a):
        a, b = b, a
    dot = sum(v * b[g] for g, v in a.items() if g in b)
    norm_a = math.sqrt(sum(v * v for v in a.values()))
    norm_b = math.sqrt(sum(v * v for v in b.values()))
    return dot / (norm_a * norm_b)


@lru_cache(maxsize=1)
def _profiles() -> dict[str, dict[str, int]]:
    return {lang: _trigram_counts(text) for lang, text in PROFILE_TEXTS.items()}


def detect_language(text: str) -> tuple[str, float]:
    """Best-matching language code and its cosine confidence in [0, 1].

    Texts shorter than ``MIN_TEXT_CHARS`` characters (or with no letters at
    all) are reported as ("und", 0.0).
    """
    if len(text) < MIN_TEXT_CHARS:
        return "und", 0.0
    grams = _trigram_counts(text)
    if not grams:
        return "und", 0.0
    best_lang, best_sim = "und", 0.0
    for lang in sorted(_profiles()):
        sim = _cosine(grams, _profiles()[lang])
        if sim > best_sim:
            best_lang, best_sim = lang, sim
    if best_sim == 0.0:
        return "und", 0.0
    return best_lang, best_sim
