"""Corpus ingestion: tweet/webpage parsing, URL normalization, inclusion filters.

Webpages arrive as already-extracted plain text (`webpages.jsonl`); the
filters reproduce the corpus-inclusion rules: English language only,
at least ``min_words`` words counted in contiguous text blocks, and
near-duplicate removal keeping the longest copy.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Iterator, TextIO

from .errors import CorruptInputError, DataError
from .language import detect_language

DEFAULT_MIN_WORDS = 300
DEFAULT_JACCARD = 0.9
SHINGLE_SIZE = 5

# A text block only counts toward word_count when it has at least this many
# tokens; shorter blocks are treated as menu/boilerplate fragments.
MIN_BLOCK_TOKENS = 20

_PARAGRAPH_SPLIT = re.compile(r"\n[ \t]*\n+")


@dataclass(frozen=True)
class TweetRecord:
    """One tweet or retweet with the posting user's follower count."""

    tweet_id: str
    user_id: str
    follower_count: int
    urls: tuple[str, ...]
    is_retweet: bool
    retweet_of: str | None
    timestamp: datetime

    def __post_init__(self):
        if self.follower_count < 0:
            raise DataError(f"tweet {self.tweet_id}: negative follower_count")
        if self.is_retweet != (self.retweet_of is not None):
            raise DataError(f"tweet {self.tweet_id}: retweet_of must be present iff is_retweet")


@dataclass
class WebDocument:
    """A webpage's extracted text, keyed by its normalized URL."""

    url: str
    text: str
    word_count: int = field(default=-1)
    language: str = field(default="")

    def __post_init__(self):
        if self.word_count < 0:
            self.word_count = contiguous_word_count(self.text)
        if not self.language:
            self.language = detect_language(self.text)[0]


@dataclass
class FilterReport:
    """Per-reason rejection counts; retained + rejected = input size."""

    retained: int = 0
    non_english: int = 0
    too_short: int = 0
    duplicate: int = 0
    broken_empty: int = 0

    @property
    def rejected(self) -> int:
        return self.non_english + self.too_short + self.duplicate + self.broken_empty

    def to_dict(self) -> dict[str, int]:
        return {
            "retained": self.retained,
            "non_english": self.non_english,
            "too_short": self.too_short,
            "duplicate": self.duplicate,
            "broken_empty": self.broken_empty,
        }


def contiguous_word_count(text: str) -> int:
    """Word count over contiguous text blocks.

    Blocks are runs of text separated by blank lines; only blocks with at
    least ``MIN_BLOCK_TOKENS`` whitespace-delimited tokens contribute, so
    navigation fragments and one-line boilerplate do not count.
    """
    total = 0
    for block in _PARAGRAPH_SPLIT.split(text):
        n = len(block.split())
        if n >= MIN_BLOCK_TOKENS:
            total += n
    return total


def normalize_url(raw: str) -> str:
    """Canonical form of a URL for deduplication and joins.

    Lowercases scheme and host, drops the fragment and ``utm_*`` tracking
    parameters, and gives an empty path a trailing "/".  Idempotent; a
    string urlsplit cannot parse is returned unchanged (see
    :func:`normalize_url_checked` when the caller needs to know).
    """
    return normalize_url_checked(raw)[0]


def normalize_url_checked(raw: str) -> tuple[str, bool]:
    """Like :func:`normalize_url` but flags unparseable input as False."""
    from urllib.parse import urlsplit, urlunsplit

    if not raw:
        raise DataError("empty URL")
    try:
        parts = urlsplit(raw.strip())
    except ValueError:
        return raw, False
    scheme = parts.scheme.lower()
    netloc = parts.netloc.lower()
    path = parts.path
    if netloc and not path:
        path = "/"
    # Filter query parameters textually (no decode/re-encode round trip,
    # which keeps normalization idempotent on oddly-escaped URLs).
    kept = [
        piece
        for piece in parts.query.split("&")
        if piece and not piece.split("=", 1)[0].lower().startswith("utm_")
    ]
    query = "&".join(kept)
    return urlunsplit((scheme, netloc, path, query, "")), True


def parse_tweets(stream: Iterable[str] | TextIO) -> tuple[list[TweetRecord], int]:
    """Parse line-delimited tweet records; returns (records, skipped count).

    Malformed lines (bad JSON, missing/mistyped fields, invariant
    violations) are skipped and counted.  Raises CorruptInputError when
    more than half of the non-blank lines are malformed.
    """
    records: list[TweetRecord] = []
    skipped = 0
    total = 0
    seen_ids: set[str] = set()
    for line in stream:
        line = line.strip()
        if not line:
            continue
        total += 1
        try:
            records.append(_tweet_from_json(line, seen_ids))
        except (json.JSONDecodeError, DataError, KeyError, TypeError, ValueError):
            skipped += 1
    if total and skipped * 2 > total:
        raise CorruptInputError(f"{skipped}/{total} tweet lines malformed")
    return records, skipped


def _tweet_from_json(line: str, seen_ids: set[str]) -> TweetRecord:
    obj = json.loads(line)
    if not isinstance(obj, dict):
        raise DataError("tweet record is not an object")
    tweet_id = str(obj["tweet_id"])
    if tweet_id in seen_ids:
        raise DataError(f"duplicate tweet_id {tweet_id}")
    follower_count = obj["follower_count"]
    if not isinstance(follower_count, int) or isinstance(follower_count, bool):
        raise DataError("follower_count must be an integer")
    urls = obj["urls"]
    if not isinstance(urls, list) or not all(isinstance(u, str) for u in urls):
        raise DataError("urls must be a list of strings")
    record = TweetRecord(
        tweet_id=tweet_id,
        user_id=str(obj["user_id"]),
        follower_count=follower_count,
        urls=tuple(urls),
        is_retweet=bool(obj["is_retweet"]),
        retweet_of=None if obj.get("retweet_of") is None else str(obj["retweet_of"]),
        timestamp=_parse_timestamp(obj["timestamp"]),
    )
    seen_ids.add(tweet_id)
    return record


def _parse_timestamp(value: str) -> datetime:
    # Python 3.10's fromisoformat rejects a trailing "Z".
    if not isinstance(value, str):
        raise DataError("timestamp must be an ISO-8601 string")
    ts = datetime.fromisoformat(value.replace("Z", "+00:00"))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def load_webpages(stream: Iterable[str] | TextIO) -> Iterator[WebDocument]:
    """Read webpages.jsonl ({"url","text"}), normalizing URLs on the way in.

    ``word_count`` and ``language`` are always recomputed from the text.
    """
    for line in stream:
        line = line.strip()
        if not line:
            continue
        obj = json.loads(line)
        yield WebDocument(url=normalize_url(str(obj["url"])), text=str(obj["text"]))


def filter_corpus(
    docs: Iterable[WebDocument], min_words: int = DEFAULT_MIN_WORDS
) -> tuple[list[WebDocument], FilterReport]:
    """Apply the inclusion filters: non-empty, English, >= min_words words."""
    if min_words < 1:
        raise DataError("min_words must be >= 1")
    report = FilterReport()
    retained: list[WebDocument] = []
    for doc in docs:
        if not doc.text.strip():
            report.broken_empty += 1
        elif doc.language != "en":
            report.non_english += 1
        elif doc.word_count < min_words:
            report.too_short += 1
        else:
            retained.append(doc)
    report.retained = len(retained)
    return retained, report


def _shingles(text: str, size: int = SHINGLE_SIZE) -> frozenset[tuple[str, ...]]:
    words = text.lower().split()
    if len(words) < size:
        return frozenset([tuple(words)]) if words else frozenset()
    return frozenset(tuple(words[i : i + size]) for i in range(len(words) - size + 1))


def jaccard(a: frozenset, b: frozenset) -> float:
    if not a and not b:
        return 1.0
    union = len(a | b)
    return len(a & b) / union if union else 0.0


def dedupe_near_duplicates(
    docs: Iterable[WebDocument], jaccard_threshold: float = DEFAULT_JACCARD
) -> list[WebDocument]:
    """Drop near-duplicate documents, keeping the longest copy.

    Two documents are near-duplicates when the Jaccard similarity of their
    5-word shingle sets reaches the threshold.  Documents are considered in
    (word_count desc, url asc) priority order and a document is kept only
    if it does not duplicate an already-kept one, so the retained set does
    not depend on input order.  Output is sorted by url.
    """
    if not 0.0 < jaccard_threshold <= 1.0:
        raise DataError("jaccard_threshold must be in (0, 1]")
    ordered = sorted(docs, key=lambda d: (-d.word_count, d.url))
    kept: list[WebDocument] = []
    kept_shingles: list[frozenset] = []
    for doc in ordered:
        sh = _shingles(doc.text)
        duplicate = False
        for other in kept_shingles:
            # Jaccard is bounded by the size ratio; skip hopeless pairs.
            smaller, larger = sorted((len(sh), len(other)))
            if larger and smaller / larger < jaccard_threshold:
                continue
            if jaccard(sh, other) >= jaccard_threshold:
                duplicate = True
                break
        if not duplicate:
            kept.append(doc)
            kept_shingles.append(sh)
    return sorted(kept, key=lambda d: d.url)


def intersect_urlsets(
    corpus_urls: set[str], reference_urls: set[str]
) -> tuple[set[str], set[str]]:
    """Exact intersection and corpus-only difference of normalized URL sets."""
    return corpus_urls & reference_urls, corpus_urls - reference_urls
