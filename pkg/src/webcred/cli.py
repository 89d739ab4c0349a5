"""Command-line entry point wiring the pipeline stages into batch runs.

Every subcommand is deterministic for a fixed --seed and writes a run
manifest (effective config plus sha256 hashes of all inputs and outputs,
no timestamps), so repeat runs can be diffed byte for byte.  Exit codes:
0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import hashlib
import json
import sys
from pathlib import Path

from . import __version__, _kernels, credibility, eval as evalmod, exposure, graph
from . import ingest, models, stats
from .errors import CorruptInputError, DataError, StratificationError
from .rng import stream_seed
from .textprep import build_vocabulary, clean_text, fit_tfidf, tokenize, transform

DEFAULT_SEED = 42


class RunManifest:
    """Provenance record for one CLI run."""

    def __init__(self, subcommand: str, config: dict):
        self.data = {
            "tool": "webcred",
            "version": __version__,
            "kernels": _kernels.ACTIVE_IMPL,
            "subcommand": subcommand,
            "config": config,
            "inputs": {},
            "outputs": {},
        }

    @staticmethod
    def _sha256(path: str | Path) -> str:
        digest = hashlib.sha256()
        with open(path, "rb") as fh:
            for chunk in iter(lambda: fh.read(65536), b""):
                digest.update(chunk)
        return digest.hexdigest()

    def record_input(self, path: str | Path | None) -> None:
        if path is not None:
            self.data["inputs"][str(path)] = self._sha256(path)

    def record_output(self, path: str | Path) -> None:
        self.data["outputs"][str(path)] = self._sha256(path)

    def write(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            json.dump(self.data, fh, indent=2)
            fh.write("\n")


def _write_json(payload: dict, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _load_docs(path: str | Path) -> dict[str, ingest.WebDocument]:
    docs: dict[str, ingest.WebDocument] = {}
    with open(path) as fh:
        for doc in ingest.load_webpages(fh):
            docs[doc.url] = doc
    return docs


def _load_tweets(path: str | Path) -> tuple[list[ingest.TweetRecord], int]:
    """Tweets with their urls normalized to match scored-document keys."""
    with open(path) as fh:
        records, skipped = ingest.parse_tweets(fh)
    normalized = [
        dataclasses.replace(
            t, urls=tuple(ingest.normalize_url(u) for u in t.urls)
        )
        for t in records
    ]
    return normalized, skipped


def _labelled_corpus(
    docs_path: str | Path, labels_path: str | Path
) -> tuple[list[str], list[list[str]], dict[int, list[int]]]:
    """Join labels.csv with documents; returns (urls, token docs, labels
    per criterion) with urls in sorted order."""
    docs = _load_docs(docs_path)
    labels = credibility.read_labels_csv(labels_path)
    urls = sorted(labels)
    missing = [u for u in urls if u not in docs]
    if missing:
        raise DataError(
            f"{len(missing)} labelled urls missing from the document set, "
            f"first: {missing[0]}"
        )
    token_docs = [tokenize(clean_text(docs[u].text)) for u in urls]
    labels_by_criterion = {
        k: [labels[u][k - 1] for u in urls] for k in range(1, credibility.N_CRITERIA + 1)
    }
    return urls, token_docs, labels_by_criterion


def _filtered_docs(args) -> tuple[list[ingest.WebDocument], ingest.FilterReport]:
    docs = list(_load_docs(args.docs).values())
    retained, report = ingest.filter_corpus(docs, min_words=args.min_words)
    deduped = ingest.dedupe_near_duplicates(retained, jaccard_threshold=args.jaccard)
    report.duplicate = len(retained) - len(deduped)
    report.retained = len(deduped)
    return deduped, report


def _cmd_ingest(args, manifest: RunManifest) -> None:
    manifest.record_input(args.webpages)
    manifest.record_input(args.tweets)
    manifest.record_input(args.reference_urls)
    args.docs = args.webpages
    deduped, report = _filtered_docs(args)
    payload = report.to_dict()
    if args.tweets:
        records, skipped = _load_tweets(args.tweets)
        payload["tweets_parsed"] = len(records)
        payload["tweets_skipped"] = skipped
    if args.reference_urls:
        with open(args.reference_urls) as fh:
            reference = {
                ingest.normalize_url(line.strip()) for line in fh if line.strip()
            }
        both, corpus_only = ingest.intersect_urlsets(
            {d.url for d in deduped}, reference
        )
        payload["reference_intersection"] = len(both)
        payload["reference_corpus_only"] = len(corpus_only)
    _write_json(payload, args.report)
    manifest.record_output(args.report)


def _cmd_cv(args, manifest: RunManifest) -> None:
    manifest.record_input(args.docs)
    manifest.record_input(args.labels)
    _urls, token_docs, labels_by_criterion = _labelled_corpus(args.docs, args.labels)
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    for family in families:
        if family not in models.FAMILIES:
            raise DataError(f"unknown family {family!r}")
    report = evalmod.cross_validate(
        token_docs,
        labels_by_criterion,
        families=families,
        params_by_family={
            "svm": {"C": args.svm_c},
            "rf": {"n_estimators": args.rf_estimators},
        },
        k=args.folds,
        seed=args.seed,
        threads=args.threads,
    )
    report.write_csv(args.out)
    manifest.record_output(args.out)


def _cmd_train(args, manifest: RunManifest) -> None:
    manifest.record_input(args.docs)
    manifest.record_input(args.labels)
    manifest.record_input(args.cv_report)
    _urls, token_docs, labels_by_criterion = _labelled_corpus(args.docs, args.labels)
    cv_report = evalmod.read_cv_report_csv(args.cv_report)
    chosen = credibility.select_families(cv_report)
    vocab = build_vocabulary(token_docs)
    tfidf = fit_tfidf(token_docs, vocab)
    X = [transform(tokens, tfidf) for tokens in token_docs]
    params = {"svm": {"C": args.svm_c}, "rf": {"n_estimators": args.rf_estimators}}
    trained = {}
    for criterion, family in chosen.items():
        trained[(criterion, family)] = models.train_model(
            family,
            X,
            labels_by_criterion[criterion],
            params[family],
            seed=stream_seed(args.seed, criterion),
            threads=args.threads,
        )
    ensemble = credibility.build_ensemble(cv_report, trained)
    _write_json(credibility.ensemble_to_dict(ensemble, tfidf), args.out)
    manifest.record_output(args.out)


def _cmd_grid(args, manifest: RunManifest) -> None:
    manifest.record_input(args.docs)
    manifest.record_input(args.labels)
    _urls, token_docs, labels_by_criterion = _labelled_corpus(args.docs, args.labels)
    if args.criterion not in labels_by_criterion:
        raise DataError(f"criterion must be 1..7, got {args.criterion}")
    grid = json.loads(args.grid) if args.grid else None
    result = models.grid_search(
        token_docs,
        labels_by_criterion[args.criterion],
        args.family,
        grid=grid,
        k=args.folds,
        seed=args.seed,
        threads=args.threads,
    )
    with open(args.out, "w", newline="") as fh:
        fh.write(
            "criterion,family,params,f1_mean,f1_std,acc_mean,acc_std,selected\n"
        )
        for point in result.table:
            params_json = json.dumps(point.params, sort_keys=True)
            selected = 1 if point.params == result.best_params else 0
            fh.write(
                f'{args.criterion},{args.family},"{params_json}",'
                f"{point.f1_mean!r},{point.f1_std!r},"
                f"{point.acc_mean!r},{point.acc_std!r},{selected}\n"
            )
    manifest.record_output(args.out)


def _load_model(path: str | Path):
    with open(path) as fh:
        return credibility.ensemble_from_dict(json.load(fh))


def _cmd_score(args, manifest: RunManifest) -> None:
    manifest.record_input(args.model)
    manifest.record_input(args.docs)
    ensemble, tfidf = _load_model(args.model)
    deduped, _report = _filtered_docs(args)
    results = [
        (doc.url, credibility.predict_credibility(doc, ensemble, tfidf))
        for doc in deduped
    ]
    credibility.write_scores_csv(results, args.out)
    manifest.record_output(args.out)


def _cmd_evaluate(args, manifest: RunManifest) -> None:
    manifest.record_input(args.model)
    manifest.record_input(args.docs)
    manifest.record_input(args.labels)
    ensemble, tfidf = _load_model(args.model)
    docs = _load_docs(args.docs)
    labels = credibility.read_labels_csv(args.labels)
    urls = sorted(labels)
    missing = [u for u in urls if u not in docs]
    if missing:
        raise DataError(
            f"{len(missing)} labelled urls missing from the document set, "
            f"first: {missing[0]}"
        )
    gold = [labels[u] for u in urls]
    report = credibility.evaluate_ensemble(
        [docs[u] for u in urls], gold, ensemble, tfidf
    )
    _write_json(report, args.out)
    manifest.record_output(args.out)
    credibility.write_label_distribution_csv(gold, args.distribution)
    manifest.record_output(args.distribution)


def _cmd_kappa(args, manifest: RunManifest) -> None:
    manifest.record_input(args.ratings)
    rows: list[tuple[str, str, str]] = []
    with open(args.ratings, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != [
            "subject",
            "rater",
            "category",
        ]:
            raise DataError(
                f"{args.ratings}: expected header subject,rater,category"
            )
        for row in reader:
            if not row:
                continue
            if len(row) != 3:
                raise DataError(f"{args.ratings}: expected 3 fields per row")
            rows.append((row[0], row[1], row[2]))
    matrix, _subjects, categories = stats.ratings_matrix_from_rows(rows)
    result = stats.fleiss_kappa(matrix)
    payload = result.to_dict()
    payload["categories"] = categories
    _write_json(payload, args.out)
    manifest.record_output(args.out)


def _cmd_terms(args, manifest: RunManifest) -> None:
    manifest.record_input(args.docs)
    manifest.record_input(args.scores)
    docs = _load_docs(args.docs)
    scored = credibility.read_scores_csv(args.scores)
    urls = sorted(scored)
    missing = [u for u in urls if u not in docs]
    if missing:
        raise DataError(
            f"{len(missing)} scored urls missing from the document set, "
            f"first: {missing[0]}"
        )
    tokens_by_url = {u: tokenize(clean_text(docs[u].text)) for u in urls}
    low = [tokens_by_url[u] for u in urls if scored[u].bucket == "low"]
    other = [tokens_by_url[u] for u in urls if scored[u].bucket != "low"]
    vocab = build_vocabulary(list(tokens_by_url.values()), min_df=args.min_df)
    ranked = stats.term_significance(low, other, vocab)
    stats.write_terms_csv(ranked, args.out)
    manifest.record_output(args.out)


def _cmd_exposure(args, manifest: RunManifest) -> None:
    manifest.record_input(args.tweets)
    manifest.record_input(args.scores)
    tweets, _skipped = _load_tweets(args.tweets)
    scored = credibility.read_scores_csv(args.scores)
    shares = exposure.aggregate_shares(tweets, scored)
    exposure.write_exposure_csv(shares, scored, args.out)
    manifest.record_output(args.out)
    report = exposure.bucket_share_report(shares, scored)
    report["top_exposures"] = [
        {
            "url": s.url,
            "tweet_count": s.tweet_count,
            "potential_exposure": s.potential_exposure,
        }
        for s in exposure.top_exposures(shares, args.top)
    ]
    _write_json(report, args.report)
    manifest.record_output(args.report)


def _cmd_graph(args, manifest: RunManifest) -> None:
    if not args.graphml and not args.dot:
        raise DataError("graph: need --graphml and/or --dot output path")
    manifest.record_input(args.tweets)
    manifest.record_input(args.scores)
    manifest.record_input(args.followers)
    tweets, _skipped = _load_tweets(args.tweets)
    scored = credibility.read_scores_csv(args.scores)
    profiles = exposure.build_user_profiles(tweets, scored)
    edges = graph.read_followers_csv(args.followers)
    network = graph.build_follower_graph(edges, profiles, min_links=args.min_links)
    graph.classify_nodes(network)
    if args.graphml:
        Path(args.graphml).write_text(graph.export_graph(network, "graphml"))
        manifest.record_output(args.graphml)
    if args.dot:
        Path(args.dot).write_text(graph.export_graph(network, "dot"))
        manifest.record_output(args.dot)


HANDLERS = {
    "ingest": _cmd_ingest,
    "cv": _cmd_cv,
    "train": _cmd_train,
    "grid": _cmd_grid,
    "score": _cmd_score,
    "evaluate": _cmd_evaluate,
    "kappa": _cmd_kappa,
    "terms": _cmd_terms,
    "exposure": _cmd_exposure,
    "graph": _cmd_graph,
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED, help="PRNG seed")
    sub.add_argument("--threads", type=int, default=1, help="worker thread bound")
    sub.add_argument(
        "--manifest",
        default=None,
        help="run-manifest path (default: <subcommand>_manifest.json)",
    )


def _add_filter_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--min-words", type=int, default=ingest.DEFAULT_MIN_WORDS, dest="min_words"
    )
    sub.add_argument(
        "--jaccard", type=float, default=ingest.DEFAULT_JACCARD,
        help="near-duplicate similarity threshold",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="webcred",
        description="Credibility appraisal pipeline for shared webpages",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("ingest", help="filter the webpage corpus")
    p.add_argument("--webpages", required=True)
    p.add_argument("--tweets", default=None)
    p.add_argument("--reference-urls", default=None, dest="reference_urls")
    p.add_argument("--report", default="filter_report.json")
    _add_filter_flags(p)
    _add_common(p)

    p = commands.add_parser("cv", help="cross-validate both model families")
    p.add_argument("--docs", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--out", default="cv_report.csv")
    p.add_argument("--folds", type=int, default=evalmod.DEFAULT_FOLDS)
    p.add_argument("--families", default="svm,rf")
    p.add_argument("--svm-c", type=float, default=100.0, dest="svm_c")
    p.add_argument(
        "--rf-estimators", type=int, default=10, dest="rf_estimators"
    )
    _add_common(p)

    p = commands.add_parser("train", help="train the per-criterion ensemble")
    p.add_argument("--docs", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--cv-report", required=True, dest="cv_report")
    p.add_argument("--out", default="model.json")
    p.add_argument("--svm-c", type=float, default=100.0, dest="svm_c")
    p.add_argument(
        "--rf-estimators", type=int, default=10, dest="rf_estimators"
    )
    _add_common(p)

    p = commands.add_parser("grid", help="hyperparameter grid search")
    p.add_argument("--docs", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--criterion", type=int, required=True)
    p.add_argument("--family", required=True, choices=models.FAMILIES)
    p.add_argument("--grid", default=None, help="JSON grid, e.g. '{\"C\": [1, 10]}'")
    p.add_argument("--folds", type=int, default=evalmod.DEFAULT_FOLDS)
    p.add_argument("--out", default="grid_report.csv")
    _add_common(p)

    p = commands.add_parser("score", help="score filtered documents")
    p.add_argument("--model", required=True)
    p.add_argument("--docs", required=True)
    p.add_argument("--out", default="scores.csv")
    _add_filter_flags(p)
    _add_common(p)

    p = commands.add_parser("evaluate", help="3-class evaluation on labels")
    p.add_argument("--model", required=True)
    p.add_argument("--docs", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--out", default="evaluation.json")
    p.add_argument("--distribution", default="label_distribution.csv")
    _add_common(p)

    p = commands.add_parser("kappa", help="rater agreement from a ratings file")
    p.add_argument("--ratings", required=True)
    p.add_argument("--out", default="kappa.json")
    _add_common(p)

    p = commands.add_parser("terms", help="term significance for low bucket")
    p.add_argument("--docs", required=True)
    p.add_argument("--scores", required=True)
    p.add_argument("--out", default="terms.csv")
    p.add_argument("--min-df", type=int, default=2, dest="min_df")
    _add_common(p)

    p = commands.add_parser("exposure", help="share counts and exposure sums")
    p.add_argument("--tweets", required=True)
    p.add_argument("--scores", required=True)
    p.add_argument("--out", default="exposure.csv")
    p.add_argument("--report", default="bucket_report.json")
    p.add_argument("--top", type=int, default=100)
    _add_common(p)

    p = commands.add_parser("graph", help="follower network construction")
    p.add_argument("--tweets", required=True)
    p.add_argument("--scores", required=True)
    p.add_argument("--followers", required=True)
    p.add_argument("--graphml", default=None)
    p.add_argument("--dot", default=None)
    p.add_argument(
        "--min-links", type=int, default=graph.DEFAULT_MIN_LINKS, dest="min_links"
    )
    _add_common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("command", "manifest")
    }
    manifest = RunManifest(args.command, config)
    try:
        HANDLERS[args.command](args, manifest)
        manifest_path = args.manifest or f"{args.command}_manifest.json"
        manifest.write(manifest_path)
    except (DataError, CorruptInputError, StratificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
