"""Generate the bundled synthetic fixture corpus.

Writes tweets.jsonl, webpages.jsonl, labels.csv, reference_urls.txt,
followers.csv, and ratings.csv into the fixtures directory.  The corpus is
fully synthetic: criterion labels drive the injection of criterion-specific
signal tokens into otherwise generic English prose, so trained classifiers
have real structure to find, and the webpage set includes documents that
each ingest filter should reject.  Deterministic for a fixed --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from webcred.rng import SplitMix64

WORDS = (
    "vaccine immunisation study research evidence trial data children health "
    "disease measles influenza outbreak risk benefit safety dose schedule "
    "parents doctors clinic hospital community coverage report review panel "
    "experts findings results analysis published journal science medicine "
    "public policy program season virus infection protection immunity herd "
    "effect side reaction mild fever rare serious record history decades "
    "million people country region school age group rate decline increase "
    "estimate model survey sample question answer claim source article page "
    "website news story headline writer editor statement interview quote "
    "agency official guidance advice update information detail summary long "
    "short clear simple plain language reader audience concern worry trust "
    "confidence choice decision family member local national global year"
).split()

FUNCTION_WORDS = (
    "the of and to in for with on that this from are was has have not "
    "they their which more most some also been were about when these "
    "there other than into over during through while after before"
).split()

FRENCH_PARAGRAPH = (
    "Les autorités sanitaires de la région ont publié un rapport détaillé "
    "sur la couverture vaccinale des enfants et des adolescents. Selon les "
    "médecins interrogés par le journal, la confiance des familles dépend "
    "surtout de la qualité des informations disponibles et de la clarté des "
    "réponses apportées par les professionnels de santé pendant les "
    "consultations. Une enquête menée dans plusieurs écoles montre que les "
    "parents souhaitent des explications simples sur les bénéfices et les "
    "risques, ainsi que des données récentes sur les maladies évitables. "
    "Les chercheurs rappellent que chaque campagne doit être adaptée aux "
    "besoins locaux et évaluée avec des méthodes rigoureuses avant toute "
    "généralisation à l'ensemble du territoire national."
)

N_CRITERIA = 7
MARKERS = {
    k: [f"signal{k}{letter}" for letter in "abcde"] for k in range(1, N_CRITERIA + 1)
}


def sentence(rng: SplitMix64, n_words: int) -> list[str]:
    # Interleave function words so the character statistics read as
    # English to the trigram language detector.
    words: list[str] = []
    while len(words) < n_words:
        words.append(FUNCTION_WORDS[rng.randbelow(len(FUNCTION_WORDS))])
        words.append(WORDS[rng.randbelow(len(WORDS))])
        if rng.uniform() < 0.4:
            words.append(WORDS[rng.randbelow(len(WORDS))])
    return words[:n_words]


def paragraph(rng: SplitMix64, n_words: int) -> str:
    words: list[str] = []
    while len(words) < n_words:
        words.extend(sentence(rng, 10 + rng.randbelow(6)))
    return " ".join(words[:n_words])


def page_text(rng: SplitMix64, labels: tuple[int, ...], total_words: int) -> str:
    """Generic prose with per-criterion signal tokens mixed in.

    Satisfied criteria inject each of their 5 signal tokens with
    probability 0.9; unsatisfied ones leak each with probability 0.03.
    """
    paragraphs = [paragraph(rng, 34 + rng.randbelow(8)) for _ in range(total_words // 36)]
    injections: list[str] = []
    for k in range(1, N_CRITERIA + 1):
        chance = 0.9 if labels[k - 1] == 1 else 0.03
        for marker in MARKERS[k]:
            if rng.uniform() < chance:
                injections.extend([marker] * (1 + rng.randbelow(3)))
    for marker in injections:
        i = rng.randbelow(len(paragraphs))
        words = paragraphs[i].split()
        words.insert(rng.randbelow(len(words) + 1), marker)
        paragraphs[i] = " ".join(words)
    return "\n\n".join(paragraphs)


def random_labels(rng: SplitMix64, score: int) -> tuple[int, ...]:
    chosen = rng.sample_without_replacement(N_CRITERIA, score)
    return tuple(1 if i in chosen else 0 for i in range(N_CRITERIA))


def draw_score(rng: SplitMix64) -> int:
    # Mix of buckets: roughly 25% low, 45% medium, 30% high.
    r = rng.uniform()
    if r < 0.25:
        return rng.randbelow(3)
    if r < 0.70:
        return 3 + rng.randbelow(2)
    return 5 + rng.randbelow(3)


def messy_url(rng: SplitMix64, url: str) -> str:
    """A raw form that normalizes back to ``url``."""
    r = rng.randbelow(4)
    if r == 0:
        scheme, rest = url.split("://", 1)
        host, path = rest.split("/", 1)
        return f"{scheme.upper()}://{host.upper()}/{path}"
    if r == 1:
        sep = "&" if "?" in url else "?"
        return f"{url}{sep}utm_source=twitter&utm_campaign=share"
    if r == 2:
        return f"{url}#section{rng.randbelow(9)}"
    return url


def build_webpages(rng: SplitMix64):
    """Returns (docs, labelled, truth) where docs is a list of (url, text),
    labelled maps 60 urls to label tuples, and truth maps every retained
    url to its generating label tuple."""
    docs: list[tuple[str, str]] = []
    labelled: dict[str, tuple[int, ...]] = {}
    truth: dict[str, tuple[int, ...]] = {}

    while True:
        candidate: dict[str, tuple[int, ...]] = {}
        for i in range(60):
            url = f"http://site{i:03d}.example.org/article/{i}"
            candidate[url] = random_labels(rng, draw_score(rng))
        counts_ok = all(
            10 <= sum(v[k - 1] for v in candidate.values()) <= 50
            for k in range(1, N_CRITERIA + 1)
        )
        if counts_ok:
            labelled = candidate
            break
    for url, labels in labelled.items():
        text = page_text(rng, labels, 330 + rng.randbelow(60))
        docs.append((url, text))
        truth[url] = labels

    unlabelled_texts: list[tuple[str, str]] = []
    for i in range(40):
        url = f"http://extra{i:03d}.example.net/post/{i}"
        labels = random_labels(rng, draw_score(rng))
        text = page_text(rng, labels, 320 + rng.randbelow(80))
        docs.append((url, text))
        unlabelled_texts.append((url, text))
        truth[url] = labels

    # Rejected material: too short, non-English, empty, near-duplicates.
    for i in range(6):
        url = f"http://short{i:02d}.example.com/stub/{i}"
        docs.append((url, paragraph(rng, 80 + rng.randbelow(60))))
    for i in range(6):
        url = f"http://francais{i:02d}.example.fr/article/{i}"
        docs.append((url, FRENCH_PARAGRAPH))
    for i in range(3):
        docs.append((f"http://broken{i:02d}.example.com/page/{i}", ""))
    for i in range(5):
        src_url, src_text = unlabelled_texts[i]
        words = src_text.split()
        # Drop a short tail: near-identical shingles, fewer words, so the
        # original wins the dedupe.
        copy = " ".join(words[: len(words) - 4])
        docs.append((f"http://mirror{i:02d}.example.org/copy/{i}", copy))
    return docs, labelled, truth


def build_tweets(rng: SplitMix64, urls: list[str], truth) -> list[dict]:
    users = [f"user{i:03d}" for i in range(80)]
    followers = {u: 20 + rng.randbelow(50000) for u in users}
    low_urls = [u for u in urls if sum(truth[u]) <= 2]
    high_urls = [u for u in urls if sum(truth[u]) >= 5]
    tweets: list[dict] = []
    for i in range(1000):
        user = users[rng.randbelow(len(users))]
        if user < "user010" and low_urls:
            pool = low_urls
        elif user < "user020" and high_urls:
            pool = high_urls
        else:
            pool = urls
        links = [pool[rng.randbelow(len(pool))]]
        if rng.uniform() < 0.15:
            other = urls[rng.randbelow(len(urls))]
            if other != links[0]:
                links.append(other)
        is_retweet = bool(tweets) and rng.uniform() < 0.2
        retweet_of = (
            tweets[rng.randbelow(len(tweets))]["tweet_id"] if is_retweet else None
        )
        month = 1 + rng.randbelow(12)
        tweets.append(
            {
                "tweet_id": f"t{i:05d}",
                "user_id": user,
                "follower_count": followers[user],
                "urls": [messy_url(rng, u) for u in links],
                "is_retweet": is_retweet,
                "retweet_of": retweet_of,
                "timestamp": f"2017-{month:02d}-{1 + rng.randbelow(28):02d}"
                f"T{rng.randbelow(24):02d}:{rng.randbelow(60):02d}:00Z",
            }
        )
    return tweets


def build_followers(rng: SplitMix64) -> list[tuple[str, str]]:
    users = [f"user{i:03d}" for i in range(80)]
    edges: set[tuple[str, str]] = set()
    # One big component over users 0..59, a small one over 60..69,
    # and 70..79 isolated.
    for i in range(1, 60):
        j = rng.randbelow(i)
        edges.add((users[i], users[j]))
    for _ in range(80):
        a, b = rng.randbelow(60), rng.randbelow(60)
        if a != b:
            edges.add((users[a], users[b]))
    for i in range(61, 70):
        edges.add((users[i], users[60 + rng.randbelow(i - 60)]))
    return sorted(edges)


def build_ratings(rng: SplitMix64, labelled: dict[str, tuple[int, ...]]):
    buckets = ["low", "medium", "high"]
    rows: list[tuple[str, str, str]] = []
    for url in sorted(labelled)[:40]:
        score = sum(labelled[url])
        true_bucket = 0 if score <= 2 else (1 if score <= 4 else 2)
        for rater in ("r1", "r2", "r3"):
            drawn = true_bucket
            if rng.uniform() > 0.72:
                drawn = max(0, min(2, true_bucket + (1 if rng.uniform() < 0.5 else -1)))
            rows.append((url, rater, buckets[drawn]))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="fixtures", help="output directory")
    parser.add_argument("--seed", type=int, default=20260814)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = SplitMix64(args.seed)

    docs, labelled, truth = build_webpages(rng)
    with open(out / "webpages.jsonl", "w") as fh:
        for url, text in docs:
            fh.write(json.dumps({"url": url, "text": text}) + "\n")
    with open(out / "labels.csv", "w") as fh:
        fh.write("url," + ",".join(f"c{k}" for k in range(1, 8)) + "\n")
        for url in sorted(labelled):
            fh.write(url + "," + ",".join(str(v) for v in labelled[url]) + "\n")

    scored_urls = sorted(truth)
    tweets = build_tweets(rng, scored_urls, truth)
    with open(out / "tweets.jsonl", "w") as fh:
        for tweet in tweets:
            fh.write(json.dumps(tweet) + "\n")

    with open(out / "followers.csv", "w") as fh:
        fh.write("follower_id,followee_id\n")
        for a, b in build_followers(rng):
            fh.write(f"{a},{b}\n")

    reference = [scored_urls[rng.randbelow(len(scored_urls))] for _ in range(25)]
    reference += [f"http://elsewhere{i}.example.com/doc/{i}" for i in range(10)]
    with open(out / "reference_urls.txt", "w") as fh:
        for url in sorted(set(reference)):
            fh.write(url + "\n")

    with open(out / "ratings.csv", "w") as fh:
        fh.write("subject,rater,category\n")
        for subject, rater, category in build_ratings(rng, labelled):
            fh.write(f"{subject},{rater},{category}\n")

    print(f"fixtures written to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
